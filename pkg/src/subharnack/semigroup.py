"""Concrete base semigroups and their stable-time-changed versions.

Two base models: the Gaussian heat kernel on R^d (generator the
Laplacian, curvature proxy K = 0) and the 1-d Ornstein-Uhlenbeck
semigroup (generator Laplacian minus x.grad, standard Gaussian invariant
measure, K = -1). Both transition laws are Gaussian, so P_s f reduces to
a Gaussian expectation with closed forms for the shipped test-function
family; the time change integrates P_s against the subordinator law.

At alpha = 1/2 the subordinated heat semigroup is the Cauchy/Poisson
semigroup, whose closed form is the module's independent oracle.
"""

import math
from functools import lru_cache
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np
from scipy.integrate import quad
from scipy.special import gammaln, log_ndtr, ndtr

from .subordinator import QuadratureSpec, StableSubordinator, integrate_against

__all__ = [
    "BaseKernel",
    "gauss_heat",
    "ou1d",
    "TestFunction",
    "Constant",
    "GaussBump",
    "Indicator",
    "ExpAffine",
    "ShiftedForLog",
    "kernel_density",
    "apply",
    "subordinated_apply",
    "subordinated_density",
    "cauchy_closed_form",
    "ondiag",
]

_MAX_DIM = 3


@dataclass(frozen=True)
class BaseKernel:
    """A base Markov semigroup: 'gauss_heat' on R^d or 'ou1d'."""

    kind: str
    d: int = 1

    def __post_init__(self):
        if self.kind not in ("gauss_heat", "ou1d"):
            raise ValueError(f"unknown kernel kind {self.kind!r}")
        if self.kind == "ou1d" and self.d != 1:
            raise ValueError("ou1d is one-dimensional")
        if not (1 <= self.d <= _MAX_DIM):
            raise ValueError(f"dimension must be in [1, {_MAX_DIM}], got {self.d}")

    @property
    def curvature_K(self):
        return 0.0 if self.kind == "gauss_heat" else -1.0

    def mean_sigma(self, s, x):
        """Per-coordinate Gaussian transition parameters at time s from x."""
        if self.kind == "gauss_heat":
            return np.asarray(x, dtype=float), math.sqrt(2.0 * s)
        return math.exp(-s) * np.asarray(x, dtype=float), math.sqrt(-math.expm1(-2.0 * s))


def gauss_heat(d=1):
    return BaseKernel("gauss_heat", d)


def ou1d():
    return BaseKernel("ou1d", 1)


def _as_point(x, d):
    v = np.atleast_1d(np.asarray(x, dtype=float))
    if v.shape != (d,):
        raise ValueError(f"point of dimension {v.shape} does not match kernel d={d}")
    return v


# --- test functions ----------------------------------------------------

class TestFunction:
    """Bounded non-negative test function; subclasses may expose a closed
    Gaussian expectation and closure under positive powers."""

    def __call__(self, y):
        raise NotImplementedError

    def pow(self, p):
        """Return f**p as a TestFunction when the family is closed under
        powers, else a plain callable."""
        return lambda y: self(y) ** p

    def gauss_expect(self, m, sigma):
        """E f(m + sigma*Z) in closed form, or None if unavailable."""
        return None

    def scalar(self, y):
        """Evaluate at a single float; hot quadrature loops use this to
        skip the numpy scalar overhead of ``__call__``."""
        return float(self(y))

    def describe(self):
        return type(self).__name__


@dataclass(frozen=True)
class Constant(TestFunction):
    c: float

    def __post_init__(self):
        if self.c < 0:
            raise ValueError("constant test functions must be >= 0")

    def __call__(self, y):
        return self.c * np.ones_like(np.asarray(y, dtype=float))

    def pow(self, p):
        return Constant(self.c ** p)

    def gauss_expect(self, m, sigma):
        return self.c

    def describe(self):
        return f"const({self.c:g})"


@dataclass(frozen=True)
class GaussBump(TestFunction):
    """exp(-(y - center)**2 / (2*width**2)), amplitude one."""

    center: float = 0.0
    width: float = 1.0

    def __post_init__(self):
        if self.width <= 0:
            raise ValueError("width must be > 0")

    def __call__(self, y):
        y = np.asarray(y, dtype=float)
        return np.exp(-((y - self.center) ** 2) / (2.0 * self.width ** 2))

    def pow(self, p):
        return GaussBump(self.center, self.width / math.sqrt(p))

    def scalar(self, y):
        return math.exp(-((y - self.center) ** 2) / (2.0 * self.width ** 2))

    def gauss_expect(self, m, sigma):
        v = self.width ** 2 + sigma ** 2
        return self.width / math.sqrt(v) * math.exp(
            -((m - self.center) ** 2) / (2.0 * v)
        )

    def describe(self):
        return f"bump({self.center:g},{self.width:g})"


@dataclass(frozen=True)
class Indicator(TestFunction):
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("need lo < hi")

    def __call__(self, y):
        y = np.asarray(y, dtype=float)
        return ((y >= self.lo) & (y <= self.hi)).astype(float)

    def pow(self, p):
        return self

    def scalar(self, y):
        return 1.0 if self.lo <= y <= self.hi else 0.0

    def gauss_expect(self, m, sigma):
        return float(ndtr((self.hi - m) / sigma) - ndtr((self.lo - m) / sigma))

    def describe(self):
        return f"ind[{self.lo:g},{self.hi:g}]"


@dataclass(frozen=True)
class ExpAffine(TestFunction):
    """exp(slope * y), optionally saturated at y = clip.

    The unclipped version is unbounded and its time-changed expectation
    under the heat kernel diverges for alpha < 1; set ``clip`` to stay in
    the bounded class (f(y) = exp(slope * min(y, clip)) for slope > 0).
    """

    slope: float
    clip: Optional[float] = None

    def __call__(self, y):
        y = np.asarray(y, dtype=float)
        if self.clip is None:
            return np.exp(self.slope * y)
        return np.exp(self.slope * np.minimum(y, self.clip))

    def pow(self, p):
        return ExpAffine(self.slope * p, self.clip)

    def scalar(self, y):
        if self.clip is not None:
            y = min(y, self.clip)
        return math.exp(self.slope * y)

    def gauss_expect(self, m, sigma):
        lam = self.slope
        if self.clip is None:
            return math.exp(lam * m + 0.5 * lam ** 2 * sigma ** 2)
        z = (self.clip - m) / sigma
        # E[e^{lam*min(m+sZ, L)}] split at Z = z; assembled in log domain
        # because the lognormal factor alone overflows at large sigma
        # while the product with the truncated tail stays bounded
        log_t1 = (lam * m + 0.5 * lam ** 2 * sigma ** 2
                  + float(log_ndtr(z - lam * sigma)))
        log_t2 = lam * self.clip + float(log_ndtr(-z))
        return math.exp(log_t1) + math.exp(log_t2)

    def describe(self):
        tag = f"expaff({self.slope:g}"
        return tag + (")" if self.clip is None else f",clip={self.clip:g})")


@dataclass(frozen=True)
class ShiftedForLog(TestFunction):
    """floor + base, with floor >= 1: the f >= 1 class of the log-Harnack bound."""

    base: TestFunction
    floor: float = 1.0

    def __post_init__(self):
        if self.floor < 1.0:
            raise ValueError("floor must be >= 1")

    def __call__(self, y):
        return self.floor + self.base(y)

    def scalar(self, y):
        return self.floor + self.base.scalar(y)

    def log(self):
        return _LogOf(self)

    def gauss_expect(self, m, sigma):
        inner = self.base.gauss_expect(m, sigma)
        if inner is None:
            return None
        return self.floor + inner

    def describe(self):
        return f"{self.floor:g}+{self.base.describe()}"


@dataclass(frozen=True)
class _LogOf(TestFunction):
    """log of a floor-shifted test function; no closed Gaussian form, but
    hashable so the quadrature layer can memoize its expectations."""

    inner: ShiftedForLog

    def __call__(self, y):
        return np.log(self.inner(y))

    def scalar(self, y):
        return math.log(self.inner.scalar(y))

    def gauss_expect(self, m, sigma):
        # log composed with a two-level function is again two-level:
        # log(floor + 1_[lo,hi]) takes only the values log(floor) and
        # log(floor + 1), so its expectation is closed whenever the
        # indicator's is
        base = self.inner.base
        if isinstance(base, Constant):
            return math.log(self.inner.floor + base.c)
        if isinstance(base, Indicator):
            lo_val = math.log(self.inner.floor)
            hi_val = math.log(self.inner.floor + 1.0)
            return lo_val + (hi_val - lo_val) * base.gauss_expect(m, sigma)
        return None

    def describe(self):
        return f"log({self.inner.describe()})"


# --- kernels -----------------------------------------------------------

def kernel_density(base, s, x, y):
    """Transition density p_s(x, y) of the base kernel."""
    if s <= 0.0:
        raise ValueError(f"s must be > 0, got {s!r}")
    x = _as_point(x, base.d)
    y = _as_point(y, base.d)
    m, sigma = base.mean_sigma(s, x)
    d = base.d
    q = float(np.sum((y - m) ** 2))
    return (2.0 * math.pi * sigma ** 2) ** (-0.5 * d) * math.exp(
        -q / (2.0 * sigma ** 2)
    )


def _gauss_expectation_quad(g, m, sigma, spec):
    """E g(m + sigma*Z) by quadrature over the +-12 sigma window."""
    point = g.scalar if isinstance(g, TestFunction) else (lambda y: float(g(y)))

    def integrand(z):
        return point(m + sigma * z) * math.exp(-0.5 * z * z)
    # piecewise: one adaptive pass over the full window hits roundoff
    # extrapolation trouble when the integrand is sharply localized
    val = 0.0
    knots = (-12.0, -4.0, 0.0, 4.0, 12.0)
    for lo, hi in zip(knots, knots[1:]):
        part, _ = quad(
            integrand, lo, hi,
            epsabs=spec.abs_tol,
            epsrel=spec.rel_tol,
            limit=spec.max_subdivisions,
        )
        val += part
    return val / math.sqrt(2.0 * math.pi)


@lru_cache(maxsize=1 << 16)
def _gauss_quad_memo(f, m, sigma, spec):
    """Memoized expectation for hashable test functions without a closed
    form; repeated sweeps revisit identical (f, m, sigma) nodes."""
    return _gauss_expectation_quad(f, m, sigma, spec)


def apply(base, f, s, x, spec=QuadratureSpec(), method="auto"):
    """P_s f(x) = E f(m_s(x) + sigma_s * Z).

    ``method`` is 'auto' (closed form when the test function provides
    one), 'closed' (require it) or 'quad' (force quadrature, used as a
    cross-check of the closed forms). Arbitrary callables are accepted
    and integrated numerically; general callables need d = 1.
    """
    if s <= 0.0:
        raise ValueError(f"s must be > 0, got {s!r}")
    x = _as_point(x, base.d)
    m, sigma = base.mean_sigma(s, x)
    if isinstance(f, Constant):
        return f.c
    if base.d != 1:
        raise ValueError("non-constant test functions are supported for d = 1 only")
    m0 = float(m[0])
    if isinstance(f, TestFunction) and method in ("auto", "closed"):
        cf = f.gauss_expect(m0, sigma)
        if cf is not None:
            return cf
        if method == "closed":
            raise ValueError(f"no closed form for {f.describe()}")
    if isinstance(f, TestFunction):
        try:
            return _gauss_quad_memo(f, m0, sigma, spec)
        except TypeError:  # unhashable subclass
            pass
    return _gauss_expectation_quad(f, m0, sigma, spec)


def subordinated_apply(base, sub, f, x, spec=QuadratureSpec()):
    """P_t^alpha f(x) = int P_s f(x) mu_t(ds)."""
    if sub.degenerate:
        return apply(base, f, sub.t, x, spec)
    return integrate_against(lambda s: apply(base, f, s, x, spec), sub, spec)


def subordinated_density(base, sub, x, y, spec=QuadratureSpec()):
    """Transition density of the time-changed kernel,
    int p_s(x, y) mu_t(ds)."""
    x = _as_point(x, base.d)
    y = _as_point(y, base.d)
    if sub.degenerate:
        return kernel_density(base, sub.t, x, y)
    rho_sq = float(np.sum((x - y) ** 2))
    breaks = [rho_sq] if rho_sq > 0 else []
    return integrate_against(
        lambda s: kernel_density(base, s, x, y), sub, spec, extra_breaks=breaks
    )


def cauchy_closed_form(d, t, x, y):
    """Poisson kernel Gamma((d+1)/2)/pi**((d+1)/2) * t/(t^2+|x-y|^2)^((d+1)/2).

    Transition density of the half-subordinated heat semigroup; the
    independent oracle for alpha = 1/2.
    """
    if t <= 0.0:
        raise ValueError("t must be > 0")
    x = _as_point(x, d)
    y = _as_point(y, d)
    rho_sq = float(np.sum((x - y) ** 2))
    n = (d + 1) / 2.0
    log_c = gammaln(n) - n * math.log(math.pi)
    return math.exp(log_c) * t / (t * t + rho_sq) ** n


def ondiag(base, sub, x, spec=QuadratureSpec()):
    """On-diagonal value of the time-changed heat kernel."""
    if base.kind != "gauss_heat":
        raise ValueError("ondiag is defined for the heat kernel base")
    return subordinated_density(base, sub, x, x, spec)
