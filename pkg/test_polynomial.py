from itertools import product

import pytest

from frobnil.algebra.frobenius import builtin
from frobnil.algebra.linear import Element
from frobnil.algebra.polynomial import PolKey, PolynomialAlgebra, exponent_vectors, x_sign
from frobnil.algebra.relations import Gen
from frobnil.exceptions import IllegalSymbolForTarget, IndexOutOfRange, OddTraceParity


@pytest.fixture
def ground2():
    return PolynomialAlgebra(builtin("ground"), 2)


@pytest.fixture
def clifford2():
    return PolynomialAlgebra(builtin("clifford_odd"), 2)


class TestRing:
    """Multiplication and super signs of the x variables."""

    def test_exponent_vectors_by_degree(self):
        """Ordered by total degree first."""
        assert list(exponent_vectors(2, 1)) == [(0, 0), (0, 1), (1, 0)]

    def test_x_sign(self):
        """x_2 x_1 = -x_1 x_2 for an odd trace, no sign otherwise."""
        assert x_sign(1, (0, 1), (1, 0)) == -1
        assert x_sign(1, (1, 0), (0, 1)) == 1
        assert x_sign(0, (0, 1), (1, 0)) == 1

    def test_even_variables_commute(self, ground2):
        """x_1 x_2 = x_2 x_1 when p = 0."""
        assert ground2.mul(ground2.x(1), ground2.x(2)) == ground2.mul(ground2.x(2), ground2.x(1))

    def test_odd_variables_anticommute(self, clifford2):
        """x_2 x_1 = -x_1 x_2 when p = 1."""
        P = clifford2
        assert P.mul(P.x(2), P.x(1)) == -P.mul(P.x(1), P.x(2))
        assert not P.mul(P.x(1), P.x(1)).is_zero()

    def test_odd_variables_pass_odd_tokens_with_sign(self, clifford2):
        """x_1 c[2] = -c[2] x_1 when both are odd."""
        P = clifford2
        c2 = P.generator(Gen("a", 2, "c"))
        assert P.mul(P.x(1), c2) == -P.mul(c2, P.x(1))

    def test_crossings_are_rejected(self, ground2):
        """u_i does not belong to the polynomial algebra."""
        with pytest.raises(IllegalSymbolForTarget):
            ground2.generator(Gen("u", 1))

    def test_strand_range(self, ground2):
        """x_3 does not exist for n = 2."""
        with pytest.raises(IndexOutOfRange):
            ground2.x(3)


class TestSymmetricAction:
    """s_i acting on P_n(A)."""

    def test_swaps_variables(self, ground2):
        """s_1 x_1 = x_2"""
        assert ground2.s_action(1, ground2.x(1)) == ground2.x(2)

    def test_involution(self, clifford2):
        """s_1 s_1 f = f"""
        P = clifford2
        f = P.mul(P.generator(Gen("a", 1, "c")), P.mul(P.x(1), P.x(2, 2)))
        assert P.s_action(1, P.s_action(1, f)) == f

    def test_gap_range(self, ground2):
        """s_2 does not exist for n = 2."""
        with pytest.raises(IndexOutOfRange):
            ground2.s_action(2, ground2.x(1))


class TestDividedDifferences:
    """The Frobenius divided differences d_i."""

    def test_generators_over_ground(self, ground2):
        """d_1 x_1 = -1 and d_1 x_2 = 1 over the ground ring."""
        assert ground2.ddiff(1, ground2.x(1)) == -ground2.one()
        assert ground2.ddiff(1, ground2.x(2)) == ground2.one()

    def test_square(self, ground2):
        """d_1 x_1^2 = -(x_1 + x_2)"""
        assert ground2.ddiff(1, ground2.x(1, 2)) == -(ground2.x(1) + ground2.x(2))

    def test_symmetric_polynomials_are_killed(self, ground2):
        """d_1 kills x_1 + x_2 and x_1 x_2."""
        P = ground2
        assert P.ddiff(1, P.x(1) + P.x(2)).is_zero()
        assert P.ddiff(1, P.mul(P.x(1), P.x(2))).is_zero()

    def test_tokens_are_killed(self, clifford2):
        """d_1 c[1] = 0"""
        assert clifford2.ddiff(1, clifford2.generator(Gen("a", 1, "c"))).is_zero()

    def test_odd_trace_generators(self, clifford2):
        """For p = 1 both x_1 and x_2 go to tau."""
        P = clifford2
        assert P.ddiff(1, P.x(1)) == P.tau_i(1)
        assert P.ddiff(1, P.x(2)) == P.tau_i(1)

    def test_squares_to_zero(self, ground2):
        """d_1 d_1 = 0"""
        f = ground2.mul(ground2.x(1, 3), ground2.x(2))
        assert ground2.ddiff(1, ground2.ddiff(1, f)).is_zero()

    def test_twisted_leibniz(self, ground2):
        """d(fg) = d(f) g + s(f) d(g)"""
        P = ground2
        f, g = P.x(1, 2), P.x(2)
        expected = P.mul(P.ddiff(1, f), g) + P.mul(P.s_action(1, f), P.ddiff(1, g))
        assert P.ddiff(1, P.mul(f, g)) == expected

    @pytest.mark.parametrize("name", ["ground", "dual_numbers", "cyclic_group(2)"])
    def test_closed_formula_matches(self, name):
        """The quotient formula agrees with the recursive definition for p = 0."""
        P = PolynomialAlgebra(builtin(name), 2)
        f = P.mul(P.x(1, 3), P.x(2)) + P.x(2, 2)
        assert P.ddiff_closed_even(1, f) == P.ddiff(1, f)

    @pytest.mark.parametrize("name,n", [
        ("ground", 2),
        ("ground", 3),
        ("dual_numbers", 2),
        ("cyclic_group(2)", 2),
        pytest.param("dual_numbers", 3, marks=pytest.mark.slow),
        pytest.param("cyclic_group(2)", 3, marks=pytest.mark.slow),
    ])
    def test_closed_formula_on_every_monomial(self, name, n):
        """Both formulas agree on every a x^k with |k| <= 6 and every gap i."""
        A = builtin(name)
        P = PolynomialAlgebra(A, n)
        for exps in exponent_vectors(n, 6):
            for word in product(range(A.dim), repeat=n):
                f = Element.monomial(PolKey(word, exps))
                for i in range(1, n):
                    assert P.ddiff_closed_even(i, f) == P.ddiff(i, f), (word, exps, i)

    def test_closed_formula_needs_even_trace(self, clifford2):
        """The quotient formula is refused for p = 1."""
        with pytest.raises(OddTraceParity):
            clifford2.ddiff_closed_even(1, clifford2.x(1))
