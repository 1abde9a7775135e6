"""Walk the chain of power-Harnack constants from the sharp numerical
transfer factor up to the simplified closed form, and show that each
stage dominates the previous one.

For the heat kernel the base inequality transfers through the time change
with a factor exp(eps*H) * (E exp(H/((p-1) S_t)))^(p-1); the library
bounds that exponential moment by an explicit series envelope, then by a
Stirling-type bracket, and finally by a single closed expression. The
log-gaps printed below quantify how much each simplification gives away.

Run: python3 demos/bound_chain.py
"""

import math

from subharnack import QuadratureSpec, StableSubordinator, exp_moment
from subharnack.bounds import (
    HarnackProfile,
    log_thm11_factor,
    log_thm11_intermediate_factor,
)

spec = QuadratureSpec(rel_tol=1e-10, abs_tol=1e-13)

print(f"{'p':>4} {'alpha':>6} {'t':>4} {'H':>4} "
      f"{'log transfer':>13} {'log envelope':>13} {'log simple':>11}")
for p in (1.5, 2.0, 4.0):
    for alpha in (0.6, 0.75, 0.9):
        for t in (0.5, 1.0, 2.0):
            H = 1.0
            profile = HarnackProfile(kappa=1.0, epsilon=0.0, H_value=H)
            moment = exp_moment(StableSubordinator(alpha, t),
                                H / (p - 1.0), 1.0, spec)
            if not moment.converged:
                continue
            lo = (p - 1.0) * moment.log_value
            mid = log_thm11_intermediate_factor(p, profile, alpha, t)
            hi = log_thm11_factor(p, profile, alpha, t)
            assert lo <= mid + 1e-9 <= hi + 2e-9
            print(f"{p:>4.1f} {alpha:>6.2f} {t:>4.1f} {H:>4.1f} "
                  f"{lo:>13.4f} {mid:>13.4f} {hi:>11.4f}")

print("\nordering transfer <= envelope <= simplified held at every point")
