"""Closed-form Harnack bound factors for subordinated semigroups.

Collects the explicit constants: the base Gaussian-type Harnack
exponent, the per-n domination constant c(alpha, kappa), the series
factor c(delta, alpha, kappa), the power-Harnack multiplicative factors
(both the sharp bracket form and the simplified 2**(p-1)*exp(...) form),
the boundary-index factor with its validity condition, the additive
log-Harnack term, and the Jensen-type series bound.

Convention for the power-Harnack factors, with
``b = 1 - (1/alpha - 1) * kappa`` in (0, 1]: the derivation's displays
keep a single letter ``c`` for a constant that is silently re-absorbed
twice, and one absorption is dropped from the printed chain. Here every
absorption is explicit so the numeric chain
``exact transfer factor <= envelope series <= bracket factor
<= simplified factor`` holds with no free constants:

* ``constant_c`` dominates the per-n prefactor exactly as displayed;
* the envelope series (``series_factor``) needs the constant
  ``e * constant_c`` -- the lower Stirling bound for n! contributes an
  ``e**n`` that the printed display omits; without it the envelope fails
  to dominate the true moment already at n = 1;
* the Jensen step turns ``(2*a)**(1/b) / 2`` into ``a**(1/b)`` only
  after a further ``2**(1-b)`` absorption, so the bracket and simplified
  factors use ``2**(1-b) * e * constant_c``.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .specfun import log_gamma
from .subordinator import SeriesEval, sum_log_series

__all__ = [
    "HarnackProfile",
    "BoundReport",
    "base_harnack_exponent",
    "constant_c",
    "series_factor",
    "C_pka",
    "thm11_factor",
    "log_thm11_factor",
    "thm11_intermediate_factor",
    "log_thm11_intermediate_factor",
    "jensen_series_bound",
    "prop13_factor",
    "log_harnack_term",
    "transfer_factor_numeric",
]


@dataclass(frozen=True)
class HarnackProfile:
    """Parameters (H, epsilon, kappa) of a base Harnack inequality.

    ``H_value`` is H(x, y) for the point pair under consideration; ``K``
    is the curvature proxy when the profile came from a concrete kernel.
    """

    kappa: float
    epsilon: float
    H_value: float
    K: float = 0.0

    def __post_init__(self):
        if self.kappa <= 0.0:
            raise ValueError("kappa must be > 0")
        if self.epsilon < 0.0 or self.H_value < 0.0:
            raise ValueError("epsilon and H_value must be >= 0")


@dataclass(frozen=True)
class BoundReport:
    """One inequality check: sides, slack and provenance."""

    lhs: float
    rhs: float
    slack: float
    valid_domain: bool
    method: str
    detail: str = ""
    log_lhs: float = math.nan
    log_rhs: float = math.nan
    params: Optional[dict] = None

    @property
    def holds(self):
        return (not self.valid_domain) or self.lhs <= self.rhs

    def to_dict(self):
        d = {
            "lhs": _json_float(self.lhs),
            "rhs": _json_float(self.rhs),
            "slack": _json_float(self.slack),
            "valid_domain": self.valid_domain,
            "method": self.method,
            "detail": self.detail,
            "log_lhs": _json_float(self.log_lhs),
            "log_rhs": _json_float(self.log_rhs),
        }
        if self.params is not None:
            d["params"] = dict(self.params)
        return d


def _json_float(v):
    """Non-finite floats serialized as strings so reports stay strict JSON."""
    if isinstance(v, float) and not math.isfinite(v):
        return repr(v)
    return v


def base_harnack_exponent(p, K, t, rho_sq):
    """Exponent p*K*rho^2 / (2*(p-1)*(exp(2Kt)-1)) of the base inequality.

    Continuous in K; at K = 0 this is the limit p*rho^2 / (4*(p-1)*t).
    """
    p = float(p)
    t = float(t)
    rho_sq = float(rho_sq)
    if p <= 1.0:
        raise ValueError(f"p must be > 1, got {p!r}")
    if t <= 0.0:
        raise ValueError(f"t must be > 0, got {t!r}")
    if rho_sq < 0.0:
        raise ValueError("rho_sq must be >= 0")
    if K == 0.0:
        rate = 0.5 / t
    else:
        rate = K / math.expm1(2.0 * K * t)
    return p * rho_sq * rate / (2.0 * (p - 1.0))


def _check_alpha_window(alpha, kappa):
    if not (kappa / (kappa + 1.0) < alpha < 1.0):
        raise ValueError(
            f"alpha must lie in (kappa/(kappa+1), 1) = "
            f"({kappa / (kappa + 1.0)}, 1), got {alpha!r}"
        )


def constant_c(alpha, kappa):
    """Smallest closed-form c with
    (2*pi*alpha*n)**(-1/2) * Q**n * exp(alpha/(12*kappa*n)) <= c**n
    for all n >= 1, where Q = (kappa/e)**(kappa*(1/alpha-1)) * alpha**(-kappa/alpha).
    """
    alpha = float(alpha)
    kappa = float(kappa)
    _check_alpha_window(alpha, kappa)
    log_q = kappa * (1.0 / alpha - 1.0) * (math.log(kappa) - 1.0) - (
        kappa / alpha
    ) * math.log(alpha)
    log_m = max(0.0, alpha / (12.0 * kappa) - 0.5 * math.log(2.0 * math.pi * alpha))
    return math.exp(log_q + log_m)


def series_factor(delta, alpha, kappa, t, rel_tol=1e-12):
    """1 + sum_n n**(n*(kappa*(1/alpha-1)-1)) * (c*delta*t**(-kappa/alpha))**n.

    The termwise upper envelope of the exponential moment, with
    c = e * constant_c(alpha, kappa) (see the module docstring for the
    restored factor e).
    """
    delta = float(delta)
    if delta < 0.0:
        raise ValueError("delta must be >= 0")
    _check_alpha_window(alpha, kappa)
    if delta == 0.0:
        return SeriesEval(value=1.0, terms_used=0, truncation_bound=0.0,
                          converged=True, log_value=0.0)
    c = math.e * constant_c(alpha, kappa)
    log_r = math.log(c * delta) - (kappa / alpha) * math.log(t)
    expo = kappa * (1.0 / alpha - 1.0) - 1.0  # negative on the open window

    def log_term(n):
        return n * expo * math.log(n) + n * log_r

    return sum_log_series(log_term, rel_tol)


def _b_exponent(alpha, kappa):
    return 1.0 - (1.0 / alpha - 1.0) * kappa


def _c_star(alpha, kappa):
    """The fully absorbed constant 2**(1-b) * e * constant_c."""
    b = _b_exponent(alpha, kappa)
    return 2.0 ** (1.0 - b) * math.e * constant_c(alpha, kappa)


def C_pka(p, kappa, alpha):
    """The simplified-factor constant
    C = b * c**(1/b) / (p-1)**((1-b)/b), with b = 1 - (1/alpha - 1)*kappa.
    """
    p = float(p)
    if p <= 1.0:
        raise ValueError("p must be > 1")
    _check_alpha_window(float(alpha), float(kappa))
    b = _b_exponent(alpha, kappa)
    c = _c_star(alpha, kappa)
    return b * c ** (1.0 / b) / (p - 1.0) ** ((1.0 - b) / b)


def log_thm11_factor(p, profile, alpha, t):
    """log of the simplified power-Harnack factor
    2**(p-1) * exp(eps*H + C * (H / t**(kappa/alpha))**(1/b)).
    """
    p = float(p)
    t = float(t)
    if p <= 1.0:
        raise ValueError("p must be > 1")
    if t <= 0.0:
        raise ValueError("t must be > 0")
    kappa = profile.kappa
    _check_alpha_window(alpha, kappa)
    b = _b_exponent(alpha, kappa)
    H = profile.H_value
    if H == 0.0:
        bulge = 0.0
    else:
        bulge = C_pka(p, kappa, alpha) * (H / t ** (kappa / alpha)) ** (1.0 / b)
    return (p - 1.0) * math.log(2.0) + profile.epsilon * H + bulge


def thm11_factor(p, profile, alpha, t):
    return math.exp(log_thm11_factor(p, profile, alpha, t))


def log_thm11_intermediate_factor(p, profile, alpha, t):
    """log of the sharper bracket form
    exp(eps*H) * (1 + [exp((c*H/((p-1)*t**(kappa/alpha)))**(1/b)) - 1]**b)**(p-1).
    """
    p = float(p)
    t = float(t)
    if p <= 1.0:
        raise ValueError("p must be > 1")
    if t <= 0.0:
        raise ValueError("t must be > 0")
    kappa = profile.kappa
    _check_alpha_window(alpha, kappa)
    b = _b_exponent(alpha, kappa)
    H = profile.H_value
    if H == 0.0:
        return profile.epsilon * H
    c = _c_star(alpha, kappa)
    z = (c * H / ((p - 1.0) * t ** (kappa / alpha))) ** (1.0 / b)
    # log(1 + (e^z - 1)^b), stable for large z where (e^z-1)^b ~ e^{bz}
    if z > 30.0:
        log_br = b * (z + math.log1p(-math.exp(-z)))
        log_inner = log_br + math.log1p(math.exp(-log_br))
    else:
        log_inner = math.log1p(math.expm1(z) ** b)
    return profile.epsilon * H + (p - 1.0) * log_inner


def thm11_intermediate_factor(p, profile, alpha, t):
    return math.exp(log_thm11_intermediate_factor(p, profile, alpha, t))


def jensen_series_bound(a, b):
    """The Jensen step bound: sum_n a**n / n**(b*n) <= (exp((2a)**(1/b)/2) - 1)**b."""
    a = float(a)
    b = float(b)
    if a <= 0.0:
        raise ValueError("a must be > 0")
    if not (0.0 < b <= 1.0):
        raise ValueError("b must lie in (0, 1]")
    z = (2.0 * a) ** (1.0 / b) / 2.0
    if z > 30.0:
        return math.exp(b * (z + math.log1p(-math.exp(-z))))
    return math.expm1(z) ** b


def prop13_factor(p, kappa, H_value, t):
    """Boundary-index alpha = kappa/(kappa+1) factor.

    Returns (valid_domain, factor, exact_ratio):
      * valid_domain -- the sufficient condition
        e*(p-1)*(t*kappa)**(kappa+1) > kappa*(kappa+1)**(kappa+1)*H;
      * factor -- (1 + C/(D - 1))**(p-1) with
        D = (e*(p-1)/(H*kappa)) * (kappa*t/(kappa+1))**(kappa+1) and
        C = sqrt((kappa+1)/(2*pi*kappa)) * exp(1/(12*(kappa+1)));
      * exact_ratio -- the true geometric term ratio
        q = delta*kappa*((kappa+1)/(kappa*t))**(kappa+1), delta = H/(p-1),
        which governs actual convergence (q < 1) and is looser than the
        sufficient condition by the factor e.
    """
    p = float(p)
    kappa = float(kappa)
    H_value = float(H_value)
    t = float(t)
    if p <= 1.0:
        raise ValueError("p must be > 1")
    if t <= 0.0:
        raise ValueError("t must be > 0")
    if H_value < 0.0:
        raise ValueError("H_value must be >= 0")
    if H_value == 0.0:
        return True, 1.0, 0.0
    delta = H_value / (p - 1.0)
    exact_ratio = delta * kappa * ((kappa + 1.0) / (kappa * t)) ** (kappa + 1.0)
    # D = 1/q0 with q0 = exact_ratio / e; condition (e1) is D > 1
    D = math.e / exact_ratio
    valid = math.e * (p - 1.0) * (t * kappa) ** (kappa + 1.0) > kappa * (
        kappa + 1.0
    ) ** (kappa + 1.0) * H_value
    if not valid:
        return False, math.inf, exact_ratio
    C = math.sqrt((kappa + 1.0) / (2.0 * math.pi * kappa)) * math.exp(
        1.0 / (12.0 * (kappa + 1.0))
    )
    factor = (1.0 + C / (D - 1.0)) ** (p - 1.0)
    return True, factor, exact_ratio


def log_harnack_term(alpha, kappa, epsilon, H_value, t):
    """Additive log-Harnack term H * (eps + Gamma(kappa/alpha)/(alpha*t**(kappa/alpha)*Gamma(kappa)))."""
    alpha = float(alpha)
    kappa = float(kappa)
    epsilon = float(epsilon)
    H_value = float(H_value)
    t = float(t)
    if not (0.0 < alpha <= 1.0):
        raise ValueError("alpha must lie in (0, 1]")
    if kappa <= 0.0:
        raise ValueError("kappa must be > 0")
    if epsilon < 0.0 or H_value < 0.0:
        raise ValueError("epsilon and H_value must be >= 0")
    if t <= 0.0:
        raise ValueError("t must be > 0")
    if H_value == 0.0:
        return 0.0
    if alpha == 1.0:
        moment = t ** -kappa
    else:
        moment = math.exp(
            log_gamma(kappa / alpha)
            - math.log(alpha)
            - (kappa / alpha) * math.log(t)
            - log_gamma(kappa)
        )
    return H_value * (epsilon + moment)


def transfer_factor_numeric(p, profile, moment):
    """Exact transfer factor exp(eps*H) * moment**(p-1).

    ``moment`` is the converged exponential moment
    int exp(H/((p-1)*s**kappa)) mu_t(ds); non-convergence propagates.
    """
    p = float(p)
    if p <= 1.0:
        raise ValueError("p must be > 1")
    if not moment.converged:
        return math.inf
    log_m = moment.log_value if math.isfinite(moment.log_value) else math.log(
        moment.value
    )
    return math.exp(profile.epsilon * profile.H_value + (p - 1.0) * log_m)
