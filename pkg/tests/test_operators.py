import pytest
from hypothesis import given, settings

from coulomb_momentum import linop as lo
from coulomb_momentum import operators as ops
from coulomb_momentum.eigenbasis import state_a, state_b
from coulomb_momentum.poly import I, PolyField

from conftest import fields, p

INV = PolyField(1, 1)
P2 = PolyField.p_squared()
ONE = PolyField.constant(1)


class TestAngularMomentum:
    def test_lz_eigen(self):
        z = p(1) + p(2) * I
        assert ops.angular_momentum(3)(z) == z
        assert ops.angular_momentum(3)(p(3)).is_zero()
        assert ops.angular_momentum(1)(INV).is_zero()

    def test_algebra_on_monomials(self):
        lx, ly, lz = ops.angular_momentum_triple()
        test = lo.commutator(lx, ly) - lz * I
        for d in range(5):
            for a in range(d + 1):
                for b in range(d - a + 1):
                    mono = PolyField(p(1).numerator ** a * p(2).numerator ** b * p(3).numerator ** (d - a - b))
                    assert test(mono).is_zero()

    def test_l_squared_on_harmonic(self):
        y = (p(1) + p(2) * I) ** 2
        assert ops.l_squared()(y) == y * 6

    def test_bad_axis(self):
        with pytest.raises(ValueError):
            ops.angular_momentum(0)


class TestRungeLenzB:
    def test_annihilates_constant(self):
        for axis in (1, 2, 3):
            assert ops.runge_lenz_b(axis)(ONE).is_zero()

    def test_zeta_image(self):
        zeta = (P2 - 1) * INV
        for axis in (1, 2, 3):
            assert ops.runge_lenz_b(axis)(zeta) == p(axis) * 2 * I * INV

    @settings(max_examples=15)
    @given(fields(max_degree=3, max_power=2))
    def test_commutator_with_l(self, f):
        L, A = ops.angular_momentum_triple(), ops.runge_lenz_triple("b")
        assert lo.commutator(L[1], A[2])(f) == A[3](f) * I
        assert lo.commutator(A[1], A[2])(f) == L[3](f) * I

    @settings(max_examples=15)
    @given(fields(max_degree=3, max_power=2))
    def test_orthogonality(self, f):
        L, A = ops.angular_momentum_triple(), ops.runge_lenz_triple("b")
        assert sum((A[i](L[i](f)) for i in (2, 3)), A[1](L[1](f))).is_zero()
        assert sum((L[i](A[i](f)) for i in (2, 3)), L[1](A[1](f))).is_zero()


class TestRungeLenzA:
    def test_ground_state_annihilated(self):
        a100 = state_a(1, 0, 0)
        for axis in (1, 2, 3):
            assert ops.runge_lenz_a(axis)(a100).is_zero()
            # the other ordering leaves -i p_i / (1+p^2)^2
            assert ops.runge_lenz_a(axis, "multiply_last")(a100) == -p(axis) * I * PolyField(1, 2)

    def test_constant_under_each_reading(self):
        # i(l+1)(p_i * 1) = 2i p_i, while i p_i (l+1) 1 = i p_i
        assert ops.runge_lenz_a(1, "multiply_first")(ONE) == p(1) * 2 * I
        assert ops.runge_lenz_a(1, "multiply_last")(ONE) == p(1) * I

    def test_p3_image(self):
        expected = p(3) * p(3) * 3 * I - (P2 - 1) * I / 2
        assert ops.runge_lenz_a(3, "multiply_first")(p(3)) == expected
        assert ops.runge_lenz_a(3, "multiply_last")(p(3)) != expected

    def test_default_reading_is_pinned(self):
        assert ops.runge_lenz_a(2) == ops.runge_lenz_a(2, "multiply_first")

    @settings(max_examples=15)
    @given(fields(max_degree=3, max_power=2))
    def test_conjugation(self, f):
        for axis in (1, 2, 3):
            op = lo.conjugate_by_weight(ops.runge_lenz_a(axis), 2)
            assert op(f) == ops.runge_lenz_b(axis)(f)

    def test_other_reading_fails_conjugation(self):
        op = lo.conjugate_by_weight(ops.runge_lenz_a(1, "multiply_last"), 2)
        assert op(ONE) != ops.runge_lenz_b(1)(ONE)

    def test_unknown_ordering(self):
        with pytest.raises(ValueError):
            ops.runge_lenz_a(1, "sideways")


class TestHamiltonian:
    def test_examples(self):
        h = ops.hamiltonian_b()
        assert h(ONE).is_zero()
        b200 = (P2 - 1) * INV
        assert h(b200) == b200 * 3
        for m in (-1, 0, 1):
            b = state_b(2, 1, m)
            assert h(b) == b * 3

    def test_casimir_examples(self):
        c = ops.casimir_sum()
        assert c(ONE).is_zero()
        b = state_b(2, 1, 0)
        assert c(b) == b * 3

    @settings(max_examples=20)
    @given(fields(max_degree=4, max_power=3))
    def test_casimir_equals_hamiltonian(self, f):
        assert (ops.casimir_sum() - ops.hamiltonian_b())(f).is_zero()
