import math

import mpmath
import numpy as np
import pytest

from coulomb_momentum import numerics as nm
from coulomb_momentum.eigenbasis import QuantumState
from coulomb_momentum.quadrature import QuadratureError, QuadratureSpec, integrate_radial


class TestQuadratureSpec:
    def test_defaults_and_json(self):
        spec = QuadratureSpec()
        assert spec.nodes >= 16
        assert spec.to_json()["scheme"] == "gauss-legendre-graded"
        assert spec.refined().nodes == 2 * spec.nodes

    @pytest.mark.parametrize("kw", [{"nodes": 8}, {"domain_split": (1, 1)}, {"domain_split": (-1, 2)}, {"scheme": "simpson"}])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            QuadratureSpec(**kw)

    def test_log_singularity(self):
        # int_0^inf log|r-1| e^-r dr
        val, _ = integrate_radial(lambda r: np.log(np.abs(r - 1)) * np.exp(-r), QuadratureSpec(), singular=1.0)
        mpmath.mp.dps = 30
        ref = mpmath.quad(lambda r: mpmath.log(abs(r - 1)) * mpmath.exp(-r), [0, 1, mpmath.inf])
        assert abs(val - float(ref)) < 1e-10

    def test_divergence_detected(self):
        with pytest.raises(QuadratureError):
            integrate_radial(lambda r: 1.0 / (1.0 + r), QuadratureSpec())


class TestLegendreQ:
    @pytest.mark.parametrize("l", range(6))
    def test_against_mpmath(self, l):
        mpmath.mp.dps = 60
        for x in (0.01, 0.2, 0.5, 0.9, 0.999, 0.99999):
            # z - 1 = (1-x)^2 / 2x must be formed in extended precision
            xm = mpmath.mpf(x)
            z = (1 + xm * xm) / (2 * xm)
            ref = float(mpmath.legenq(l, 0, z, type=3).real)
            got = float(nm.legendre_q(l, np.array([x]))[0])
            assert abs(got - ref) <= 1e-11 * abs(ref) + 1e-300


class TestIntegralEquation:
    @pytest.mark.parametrize("n,l", [(1, 0), (2, 0), (2, 1), (3, 0), (3, 2)])
    def test_eigenstates(self, n, l):
        r = nm.integral_equation_residual(n, l, QuadratureSpec())
        assert r.passed and r.residual <= 1e-6
        assert r.metadata["prefactor_ratio"] == pytest.approx(1.0, abs=1e-8)

    def test_perturbed_input_fails(self):
        from coulomb_momentum.eigenbasis import state_a
        from coulomb_momentum.poly import PolyField

        bad = state_a(1, 0, 0) * (PolyField.constant(1) + PolyField.p_squared() / 10)
        r = nm.integral_equation_residual(1, 0, QuadratureSpec(), field=bad)
        assert r.residual > 1e-2 and not r.passed


class TestFourier:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_circular(self, n):
        assert nm.fourier_radial_check(n, QuadratureSpec()).residual <= 1e-8

    def test_wrong_power(self):
        r = nm.fourier_radial_check(1, QuadratureSpec(), power=3)
        assert r.residual > 1e-1 and not r.passed


class TestArea:
    def test_default(self):
        assert nm.sphere_area_check(QuadratureSpec()).residual <= 1e-8

    def test_half_nodes(self):
        assert nm.sphere_area_check(QuadratureSpec().coarsened()).residual <= 1e-6

    def test_wrong_weight_is_not_the_area(self):
        # 8/(1+p^2)^2 is integrable (to 8 pi^2); it just is not the 3-sphere area
        r = nm.sphere_area_check(QuadratureSpec(), weight=lambda r: 8 / (1 + r * r) ** 2)
        assert not r.passed
        assert r.metadata["value"] == pytest.approx(8 * math.pi ** 2, rel=1e-8)

    def test_divergent_weight_flagged(self):
        r = nm.sphere_area_check(QuadratureSpec(), weight=lambda r: 8 / (1 + r * r))
        assert not r.passed and r.metadata["diverged"]


class TestOverlaps:
    def test_examples(self):
        s100, s200 = QuantumState.build(1, 0, 0), QuantumState.build(2, 0, 0)
        norm = lambda s: math.sqrt(abs(nm.state_overlap(s, s)))
        assert abs(nm.state_overlap(s100, s200)) <= 1e-8 * norm(s100) * norm(s200)
        assert nm.state_overlap(QuantumState.build(2, 1, 1), QuantumState.build(2, 1, 0)) == 0
        v = nm.state_overlap(s100, s100)
        assert v.real > 0 and v.imag == 0

    def test_matrix_diagonal(self):
        from coulomb_momentum.eigenbasis import quantum_numbers

        states = [QuantumState.build(*q) for q in quantum_numbers(3)]
        mat = nm.overlap_matrix(states)
        d = np.sqrt(np.abs(np.diag(mat)))
        off = np.abs(mat) / np.outer(d, d) - np.eye(len(states))
        assert np.max(np.abs(off)) <= 1e-8


def test_radial_density():
    dens = nm.radial_density(QuantumState.build(1, 0, 0).physical("a"))
    r = np.linspace(0, 5, 11)
    np.testing.assert_allclose(dens(r), 1 / (1 + r * r) ** 4, rtol=1e-15)
    assert nm.radial_density(QuantumState.build(2, 1, 0).physical("a"))(np.array([0.0]))[0] == 0


def test_check_report_json():
    r = nm.CheckReport("x", 1e-9, 1e-8, {"a": 1})
    assert r.passed and r.to_json()["passed"] is True
    assert not nm.CheckReport("y", float("nan"), 1.0).passed
