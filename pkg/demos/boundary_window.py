"""At the boundary index alpha = 1/2 the exponential-moment series is an
exact geometric series, so the sufficient condition behind the
closed-form Harnack factor (ratio q < e) and the true convergence
condition (q < 1) disagree on the window 1 <= q < e. This script sweeps
(p, t, rho) for the heat kernel, classifies each point, and verifies the
numeric check agrees with the classification.

Run: python3 demos/boundary_window.py
"""

import math

from subharnack import (
    GaussBump,
    QuadratureSpec,
    check_prop13,
    gauss_heat,
    prop13_factor,
)

spec = QuadratureSpec(rel_tol=1e-9, abs_tol=1e-12)
base = gauss_heat(1)
f = GaussBump(0.0, 1.0)

counts = {"holds": 0, "discrepant": 0, "refused": 0}
print(f"{'p':>4} {'t':>4} {'rho':>4} {'q':>8}  status")
for p in (1.5, 2.0, 4.0):
    for t in (0.5, 1.0, 1.5, 2.0, 3.0):
        for rho in (0.5, 1.0, 2.0):
            valid, factor, q = prop13_factor(p, 1.0, rho * rho, t)
            rep = check_prop13(base, p, t, [0.0], [rho], f, spec)
            if valid and q < 1.0:
                status = "holds"
                assert rep.valid_domain and rep.lhs <= rep.rhs * (1 + 1e-8)
            elif valid:
                # sufficient condition met but the series itself diverges
                status = "discrepant"
                assert not rep.valid_domain
            else:
                status = "refused"
                assert not rep.valid_domain
            counts[status] += 1
            print(f"{p:>4.1f} {t:>4.1f} {rho:>4.1f} {q:>8.3f}  {status}")

print(f"\n{counts['holds']} held, {counts['discrepant']} in the "
      f"discrepancy window, {counts['refused']} refused outright")
