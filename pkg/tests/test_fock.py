from fractions import Fraction

import numpy as np
import pytest
from scipy.special import eval_gegenbauer

from coulomb_momentum import fock
from coulomb_momentum.operators import runge_lenz_b
from coulomb_momentum.poly import I, PolyField

SP = fock.SpherePolynomial
INV = PolyField(1, 1)
P2 = PolyField.p_squared()


class TestProjection:
    def test_forward_examples(self):
        s = fock.stereographic_forward((0, 0, 0))
        assert s.xi == (0, 0, 0) and s.xi0 == -1
        s = fock.stereographic_forward((1, 0, 0))
        assert s.xi == (1, 0, 0) and s.xi0 == 0
        assert fock.stereographic_forward((1e9, 0.0, 0.0)).xi0 == pytest.approx(1.0)

    def test_inverse_examples(self):
        assert fock.stereographic_inverse(fock.SpherePoint((0, 0, 0), -1)) == (0, 0, 0)
        assert fock.stereographic_inverse(fock.SpherePoint((1, 0, 0), 0)) == (1, 0, 0)
        s = fock.SpherePoint((0, 0, Fraction(3, 5)), Fraction(4, 5))
        assert fock.stereographic_inverse(s) == (0, 0, 3)
        assert fock.stereographic_forward((0, 0, 3)) == s

    def test_north_pole(self):
        with pytest.raises(fock.NorthPoleError):
            fock.stereographic_inverse(fock.SpherePoint((0, 0, 0), 1))

    def test_round_trip(self):
        pts = np.random.default_rng(3).uniform(-5, 5, (1000, 3))
        err = max(
            np.max(np.abs(np.array(fock.stereographic_inverse(fock.stereographic_forward(v))) - v))
            for v in pts
        )
        assert err <= 1e-12

    def test_constraint_exact(self):
        s = fock.stereographic_forward((Fraction(1, 3), Fraction(-2, 7), 5))
        assert s.constraint_defect() == 0

    def test_json(self):
        s = fock.stereographic_forward((Fraction(1, 2), 0, 0))
        data = s.to_json()
        assert data == {"xi": ["4/5", "0", "0"], "xi0": "-3/5"}
        assert fock.SpherePoint.from_json(data) == s


class TestKernel:
    def test_examples(self):
        assert fock.kernel_identity_residual((1, 0, 0), (0, 0, 0)) == 0
        assert fock.kernel_identity_residual((2, 0, 0), (-2, 0, 0)) <= 1e-15

    def test_random_pairs(self):
        rng = np.random.default_rng(11)
        worst = max(fock.kernel_identity_residual(rng.uniform(-3, 3, 3), rng.uniform(-3, 3, 3)) for _ in range(500))
        assert worst <= 1e-12

    def test_coincident(self):
        with pytest.raises(ValueError):
            fock.kernel_identity_residual((1, 2, 3), (1, 2, 3))

    def test_weight(self):
        assert fock.sphere_weight((0, 0, 0)) == 8
        assert fock.sphere_weight((1, 0, 0)) == 1


class TestPullback:
    def test_examples(self):
        assert fock.pullback(SP.constant(1)) == PolyField.constant(1)
        assert fock.pullback(SP.zeta()) == (P2 - 1) * INV
        assert fock.pullback(SP.constraint()) == PolyField.constant(1)
        assert fock.pullback(SP.xi(2)) == PolyField.coordinate(2) * 2 * INV

    def test_rotation_examples(self):
        for axis in (1, 2, 3):
            assert fock.rotation_generator(axis, SP.zeta()) == SP.xi(axis).scale(I)
            assert fock.rotation_generator(axis, SP.constant(1)).is_zero()
        assert fock.rotation_generator(1, SP.xi(1)) == SP.zeta().scale(-I)

    def test_correspondence_degree_two(self):
        for f in fock.sphere_monomials(2):
            for axis in (1, 2, 3):
                lhs = fock.pullback(fock.rotation_generator(axis, f))
                assert lhs == runge_lenz_b(axis)(fock.pullback(f))

    def test_monomial_count(self):
        assert len(list(fock.sphere_monomials(3))) == 35


class TestGegenbauer:
    def test_examples(self):
        assert fock.gegenbauer(2.5, 0, 0.3) == 1
        assert fock.gegenbauer(1, 1, 0.5) == 1.0
        x = np.linspace(-1, 1, 9)
        np.testing.assert_allclose(fock.gegenbauer(1, 2, x), 4 * x * x - 1, atol=1e-15)

    def test_against_scipy(self):
        x = np.linspace(-0.99, 0.99, 41)
        for alpha in (1, 2, 3.5):
            for k in range(7):
                np.testing.assert_allclose(fock.gegenbauer(alpha, k, x), eval_gegenbauer(k, alpha, x), rtol=1e-12, atol=1e-12)

    def test_gauss_proportional(self):
        xs = np.linspace(-0.95, 0.95, 20)
        for n in range(1, 6):
            for l in range(n):
                assert fock.gauss_gegenbauer_spread(n, l, xs) <= 1e-10
