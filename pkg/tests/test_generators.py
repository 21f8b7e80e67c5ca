import numpy as np
import pytest

from conftest import scaled_ok
from divbound.errors import NonPositiveArgument
from divbound.families import omega_s, phi_s, zeta_s
from divbound.generators import (
    Gen,
    GeneratorSpec,
    convexity_scan,
    csiszar,
    csiszar_bulk,
    gen_d1,
    gen_d2,
    gen_d2_scalar,
    gen_eval,
    gen_value,
)
from divbound.simplex import validate

S_GRID = (-2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 3.0, 4.0)
ALL_SPECS = [GeneratorSpec(g, s) for g in Gen for s in S_GRID]
X_GRID = np.geomspace(0.1, 10.0, 64)

# the family kernel each generator feeds through the engine
ENGINE_EQUIV = {
    Gen.PHI: lambda s, p, q: phi_s(s, p, q),
    Gen.PSI: lambda s, p, q: omega_s(s, p, q),
    Gen.UPSILON: lambda s, p, q: omega_s(s, p, q, adjoint=True),
    Gen.XI: lambda s, p, q: zeta_s(s, p, q),
    Gen.VARSIGMA: lambda s, p, q: zeta_s(s, p, q, adjoint=True),
}


def central_d2(spec, x, h):
    f = lambda y: gen_value(spec, y)
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)


def central_d1(spec, x, h):
    f = lambda y: gen_value(spec, y)
    return (f(x + h) - f(x - h)) / (2.0 * h)


class TestNormalization:
    @pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
    def test_value_vanishes_at_one(self, spec):
        assert abs(gen_eval(spec, 1.0).value) <= 1e-14

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
    def test_slope_vanishes_at_one(self, spec):
        # all five families are normalized with a stationary point at 1,
        # which is why C_f(P||Q)/C_f2(P||Q) tends to f1''(1)/f2''(1) as P -> Q
        assert abs(gen_eval(spec, 1.0).d1) <= 1e-14


class TestClosedForms:
    def test_phi_at_two(self):
        gv = gen_eval(GeneratorSpec(Gen.PHI, 2.0), 2.0)
        assert gv.value == pytest.approx(0.5, abs=1e-15)
        assert gv.d2 == pytest.approx(1.0, abs=1e-15)

    def test_psi_curvature_at_one(self):
        for s in S_GRID:
            assert gen_eval(GeneratorSpec(Gen.PSI, s), 1.0).d2 == pytest.approx(
                0.25, abs=1e-15
            )

    def test_xi_curvature_at_one(self):
        # (s*1 + 4 - s)/4 = 1 independently of s
        for s in S_GRID:
            assert gen_eval(GeneratorSpec(Gen.XI, s), 1.0).d2 == pytest.approx(
                1.0, abs=1e-15
            )

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
    def test_d2_matches_central_difference(self, spec):
        h = 1e-4 * X_GRID
        fd = central_d2(spec, X_GRID, h)
        d2 = gen_d2(spec, X_GRID)
        assert scaled_ok(d2, fd, 1e-5), spec

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
    def test_d1_matches_central_difference(self, spec):
        h = 1e-5 * X_GRID
        fd = central_d1(spec, X_GRID, h)
        d1 = gen_d1(spec, X_GRID)
        assert scaled_ok(d1, fd, 1e-6), spec

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
    def test_scalar_backend_agrees(self, spec):
        f = gen_d2_scalar(spec)
        arr = gen_d2(spec, X_GRID)
        scl = np.array([f(float(x)) for x in X_GRID])
        np.testing.assert_allclose(scl, arr, rtol=1e-14)

    def test_rejects_non_positive_argument(self):
        spec = GeneratorSpec(Gen.PHI, 2.0)
        with pytest.raises(NonPositiveArgument):
            gen_eval(spec, 0.0)
        with pytest.raises(NonPositiveArgument):
            gen_eval(spec, np.array([1.0, -2.0]))


class TestEngine:
    def test_zero_on_identical(self):
        d = validate([0.2, 0.3, 0.5])
        for spec in ALL_SPECS:
            assert abs(csiszar(spec, d, d)) <= 1e-15

    @pytest.mark.parametrize("gen", list(Gen), ids=lambda g: g.value)
    def test_matches_family_kernels(self, gen, pair_matrices):
        kernel = ENGINE_EQUIV[gen]
        for n in (2, 5):
            P, Q = pair_matrices[n]
            for s in S_GRID:
                spec = GeneratorSpec(gen, s)
                assert scaled_ok(csiszar_bulk(spec, P, Q), kernel(s, P, Q), 1e-12), (
                    gen, s, n,
                )

    def test_engine_adjoint_relation(self, pair_matrices):
        # summing q f(p/q) for the swapped-argument generator equals
        # summing p f(q/p) for the original one
        P, Q = pair_matrices[3]
        for s in S_GRID:
            a = csiszar_bulk(GeneratorSpec(Gen.PSI, s), P, Q)
            b = csiszar_bulk(GeneratorSpec(Gen.UPSILON, s), Q, P)
            assert scaled_ok(a, b, 1e-12), s

    def test_worked_example(self, fixed_pair):
        P, Q = fixed_pair
        assert csiszar(GeneratorSpec(Gen.PHI, 2.0), P, Q) == pytest.approx(
            1.0 / 6.0, rel=1e-13
        )


class TestConvexityScan:
    def test_phi_cubic_convex(self):
        scan = convexity_scan(GeneratorSpec(Gen.PHI, 3.0), 0.1, 10.0, 1025)
        assert scan.convex and scan.min_d2 > 0.0

    def test_xi_outside_range_non_convex(self):
        # curvature carries the factor 5x - 1, negative below x = 0.2
        scan = convexity_scan(GeneratorSpec(Gen.XI, 5.0), 0.1, 10.0, 1025)
        assert not scan.convex
        assert scan.argmin_x < 0.2

    def test_xi_boundary_convex(self):
        scan = convexity_scan(GeneratorSpec(Gen.XI, 0.0), 0.1, 10.0, 1025)
        assert scan.convex

    def test_rejects_bad_interval(self):
        with pytest.raises(NonPositiveArgument):
            convexity_scan(GeneratorSpec(Gen.PHI, 2.0), 0.0, 1.0)
        with pytest.raises(ValueError):
            convexity_scan(GeneratorSpec(Gen.PHI, 2.0), 2.0, 1.0)
        with pytest.raises(ValueError):
            convexity_scan(GeneratorSpec(Gen.PHI, 2.0), 1.0, 2.0, grid=1)
