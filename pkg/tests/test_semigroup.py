import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subharnack.semigroup import (
    BaseKernel,
    Constant,
    ExpAffine,
    GaussBump,
    Indicator,
    ShiftedForLog,
    apply,
    cauchy_closed_form,
    gauss_heat,
    kernel_density,
    ondiag,
    ou1d,
    subordinated_apply,
    subordinated_density,
)
from subharnack.subordinator import QuadratureSpec, StableSubordinator

SPEC = QuadratureSpec(rel_tol=1e-10, abs_tol=1e-13)

FUNCTIONS = [
    Constant(2.0),
    GaussBump(0.3, 0.8),
    Indicator(-1.0, 0.5),
    ExpAffine(0.4, clip=1.2),
    ExpAffine(-0.7, clip=0.0),
]


class TestKernels:
    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            BaseKernel("brownian_bridge", 1)

    def test_rejects_multidim_ou(self):
        with pytest.raises(ValueError):
            BaseKernel("ou1d", 2)

    def test_rejects_large_dimension(self):
        with pytest.raises(ValueError):
            gauss_heat(4)

    def test_heat_density_normalizes(self):
        from scipy.integrate import quad as _quad

        base = gauss_heat(1)
        total, _ = _quad(lambda z: kernel_density(base, 0.7, [0.2], [z]),
                         -30, 30)
        assert math.isclose(total, 1.0, rel_tol=1e-9)

    def test_heat_density_value(self):
        # p_s(x, y) = (4 pi s)^(-1/2) exp(-|x-y|^2/(4s))
        base = gauss_heat(1)
        s, x, y = 0.5, 0.0, 1.0
        expect = (4 * math.pi * s) ** -0.5 * math.exp(-1.0 / (4 * s))
        assert math.isclose(kernel_density(base, s, [x], [y]), expect,
                            rel_tol=1e-14)

    def test_ou_density_long_time_is_invariant(self):
        base = ou1d()
        val = kernel_density(base, 40.0, [3.0], [0.5])
        std_normal = math.exp(-0.125) / math.sqrt(2 * math.pi)
        assert math.isclose(val, std_normal, rel_tol=1e-10)

    def test_ou_reversibility(self):
        # phi(x) p_s(x, y) = phi(y) p_s(y, x) w.r.t. the standard normal
        base = ou1d()
        x, y, s = 0.4, -1.1, 0.8

        def phi(z):
            return math.exp(-0.5 * z * z) / math.sqrt(2 * math.pi)

        lhs = phi(x) * kernel_density(base, s, [x], [y])
        rhs = phi(y) * kernel_density(base, s, [y], [x])
        assert math.isclose(lhs, rhs, rel_tol=1e-12)


class TestApply:
    @pytest.mark.parametrize("f", FUNCTIONS, ids=lambda f: f.describe())
    @pytest.mark.parametrize("base", [gauss_heat(1), ou1d()],
                             ids=lambda b: b.kind)
    def test_closed_matches_quadrature(self, base, f):
        for s, x in ((0.3, 0.2), (1.5, -0.7)):
            closed = apply(base, f, s, [x], SPEC, method="closed")
            quad_val = apply(base, f, s, [x], SPEC, method="quad")
            assert math.isclose(closed, quad_val, rel_tol=1e-8)

    def test_power_closure_consistent(self):
        # f.pow(p) must agree with pointwise f(y)**p under the kernel
        base = gauss_heat(1)
        for f in FUNCTIONS:
            for p in (2.0, 3.5):
                a = apply(base, f.pow(p), 0.6, [0.1], SPEC)
                b = apply(base, lambda y, f=f, p=p: np.asarray(f(y)) ** p,
                          0.6, [0.1], SPEC)
                assert math.isclose(a, b, rel_tol=1e-8), f.describe()

    def test_constant_any_dimension(self):
        assert apply(gauss_heat(3), Constant(5.0), 1.0, [0, 0, 0], SPEC) == 5.0

    def test_contraction(self):
        # P_s is a contraction: sup P_s f <= sup f = 1 for the bump
        f = GaussBump(0.0, 1.0)
        for s in (0.1, 1.0, 10.0):
            assert apply(gauss_heat(1), f, s, [0.0], SPEC) <= 1.0

    def test_rejects_nonpositive_time(self):
        with pytest.raises(ValueError):
            apply(gauss_heat(1), Constant(1.0), 0.0, [0.0], SPEC)


class TestTestFunctions:
    def test_indicator_power_idempotent(self):
        f = Indicator(-1.0, 1.0)
        assert f.pow(3.0) is f

    def test_bump_power_narrows(self):
        f = GaussBump(0.5, 1.0)
        g = f.pow(4.0)
        assert math.isclose(g.width, 0.5)
        ys = np.linspace(-2, 3, 50)
        assert np.allclose(f(ys) ** 4.0, g(ys))

    def test_expaffine_clip_pointwise(self):
        f = ExpAffine(0.4, clip=1.2)
        assert math.isclose(float(f(5.0)), math.exp(0.4 * 1.2))
        assert math.isclose(float(f(0.0)), 1.0)

    def test_expaffine_power_keeps_clip(self):
        f = ExpAffine(0.4, clip=1.2).pow(2.0)
        ys = np.linspace(-3, 3, 30)
        assert np.allclose(f(ys), ExpAffine(0.4, clip=1.2)(ys) ** 2)

    def test_unclipped_expaffine_closed_form(self):
        # lognormal mean: E e^(lam(m + sigma Z)) = e^(lam m + lam^2 sigma^2/2)
        f = ExpAffine(0.7)
        assert math.isclose(f.gauss_expect(0.3, 1.4),
                            math.exp(0.7 * 0.3 + 0.5 * 0.49 * 1.96),
                            rel_tol=1e-14)

    def test_shifted_for_log_floor(self):
        f = ShiftedForLog(GaussBump(0.0, 1.0), 1.0)
        ys = np.linspace(-5, 5, 50)
        assert np.all(f(ys) >= 1.0)
        with pytest.raises(ValueError):
            ShiftedForLog(GaussBump(0.0, 1.0), 0.5)

    @given(st.floats(min_value=-3, max_value=3),
           st.floats(min_value=0.1, max_value=2.0),
           st.floats(min_value=-2, max_value=2),
           st.floats(min_value=0.05, max_value=3.0))
    @settings(max_examples=80, deadline=None)
    def test_bump_expectation_bounds(self, center, width, m, sigma):
        # a Gaussian average of a [0, 1] function stays in [0, 1]
        val = GaussBump(center, width).gauss_expect(m, sigma)
        assert -1e-12 <= val <= 1.0 + 1e-12


class TestSubordinated:
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_cauchy_oracle(self, d):
        base = gauss_heat(d)
        for t in (0.5, 1.0, 2.0):
            for r in (0.0, 0.5, 1.5):
                x = [0.0] * d
                y = [r] + [0.0] * (d - 1)
                sub = StableSubordinator(0.5, t)
                num = subordinated_density(base, sub, x, y, SPEC)
                exact = cauchy_closed_form(d, t, x, y)
                assert math.isclose(num, exact, rel_tol=1e-8)

    def test_cauchy_apply_indicator(self):
        # P_t^(1/2) 1_[a,b](x) = arctan-difference of the Cauchy law
        t, x = 1.0, 0.3
        f = Indicator(-1.0, 0.5)
        sub = StableSubordinator(0.5, t)
        num = subordinated_apply(gauss_heat(1), sub, f, [x], SPEC)
        exact = (math.atan((0.5 - x) / t) - math.atan((-1.0 - x) / t)) / math.pi
        assert math.isclose(num, exact, rel_tol=1e-8)

    def test_degenerate_time_change_is_base(self):
        f = GaussBump(0.0, 1.0)
        sub = StableSubordinator(1.0, 0.7)
        a = subordinated_apply(gauss_heat(1), sub, f, [0.2], SPEC)
        b = apply(gauss_heat(1), f, 0.7, [0.2], SPEC)
        assert a == b

    def test_semigroup_monotone_in_bump(self):
        # the subordinated kernel keeps total mass one
        sub = StableSubordinator(0.7, 1.0)
        total = subordinated_apply(gauss_heat(1), sub, Constant(1.0), [0.0], SPEC)
        assert math.isclose(total, 1.0, rel_tol=1e-9)

    def test_ondiag_poisson_value(self):
        # d = 1, alpha = 1/2: p_t(x,x) = 1/(pi t)
        for t in (0.5, 1.0, 2.0):
            v = ondiag(gauss_heat(1), StableSubordinator(0.5, t), [0.0], SPEC)
            assert math.isclose(v, 1.0 / (math.pi * t), rel_tol=1e-8)

    def test_ondiag_rejects_ou(self):
        with pytest.raises(ValueError):
            ondiag(ou1d(), StableSubordinator(0.5, 1.0), [0.0], SPEC)

    def test_subordinated_density_symmetry(self):
        base = gauss_heat(1)
        sub = StableSubordinator(0.7, 1.0)
        a = subordinated_density(base, sub, [0.0], [1.3], SPEC)
        b = subordinated_density(base, sub, [1.3], [0.0], SPEC)
        assert math.isclose(a, b, rel_tol=1e-10)


def test_cauchy_closed_form_values():
    # d = 1 diagonal: 1/(pi t); d = 3 diagonal: Gamma(2)/pi^2 * t^-3
    assert math.isclose(cauchy_closed_form(1, 2.0, [0.0], [0.0]),
                        1.0 / (2.0 * math.pi), rel_tol=1e-14)
    assert math.isclose(cauchy_closed_form(3, 1.0, [0, 0, 0], [0, 0, 0]),
                        1.0 / math.pi ** 2, rel_tol=1e-14)
