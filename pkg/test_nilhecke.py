import pytest

from frobnil.algebra.frobenius import builtin
from frobnil.algebra.linear import Element
from frobnil.algebra.nilhecke import (
    GradedDegree, NilHeckeAlgebra, PolNCKey, TraceChangeDictionary, check_trace_change,
)
from frobnil.algebra.polynomial import PolKey, exponent_vectors
from frobnil.algebra.relations import Gen
from frobnil.algebra.symgroup import identity, simple
from frobnil.exceptions import NotGraded, NotSymmetric


def only_key(e):
    keys = list(e.keys())
    assert len(keys) == 1
    return keys[0]


@pytest.fixture
def ground2():
    return NilHeckeAlgebra(builtin("ground"), 2)


@pytest.fixture
def clifford2():
    return NilHeckeAlgebra(builtin("clifford_odd"), 2)


class TestConstruction:
    """Which algebras admit a nilHecke algebra."""

    def test_needs_symmetric_trace(self):
        """clifford_even is rejected."""
        with pytest.raises(NotSymmetric):
            NilHeckeAlgebra(builtin("clifford_even"), 2)


class TestRelations:
    """Normal forms satisfy the defining relations."""

    def test_dot_slides_up_over_ground(self, ground2):
        """u_1 x_2 - x_1 u_1 = 1"""
        NH = ground2
        assert NH.mul(NH.u(1), NH.x(2)) - NH.mul(NH.x(1), NH.u(1)) == NH.one()

    def test_dot_slides_down_over_ground(self, ground2):
        """x_2 u_1 - u_1 x_1 = 1"""
        NH = ground2
        assert NH.mul(NH.x(2), NH.u(1)) - NH.mul(NH.u(1), NH.x(1)) == NH.one()

    def test_dot_slides_up_over_clifford(self, clifford2):
        """u_1 x_2 - x_1 u_1 = tau_1"""
        NH = clifford2
        assert NH.mul(NH.u(1), NH.x(2)) - NH.mul(NH.x(1), NH.u(1)) == NH.tau_i(1)

    def test_crossing_squares_to_zero(self, clifford2):
        """u_1 u_1 = 0"""
        assert clifford2.mul(clifford2.u(1), clifford2.u(1)).is_zero()

    @pytest.mark.parametrize("name", ["ground", "clifford_odd", "dual_numbers", "cyclic_group(2)"])
    def test_defining_relations_hold(self, name):
        """Every defining relation instance vanishes for n = 2."""
        assert NilHeckeAlgebra(builtin(name), 2).verify_relations().passed

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["ground", "clifford_odd"])
    def test_defining_relations_hold_on_three_strands(self, name):
        """Every defining relation instance vanishes for n = 3."""
        assert NilHeckeAlgebra(builtin(name), 3).verify_relations().passed

    def test_associativity_on_generators(self, clifford2):
        """(u_1 x_1) c[2] = u_1 (x_1 c[2])"""
        NH = clifford2
        c2 = NH.generator(Gen("a", 2, "c"))
        left = NH.mul(NH.mul(NH.u(1), NH.x(1)), c2)
        right = NH.mul(NH.u(1), NH.mul(NH.x(1), c2))
        assert left == right


class TestBasisTheorem:
    """NH_n(A) = P_n(A) (x) N_n(k) as vector spaces."""

    def test_expand_inverts_split(self, clifford2):
        """Normal forms survive a trip through P (x) N."""
        NH = clifford2
        e = NH.mul(NH.u(1), NH.mul(NH.x(2), NH.generator(Gen("a", 1, "c"))))
        assert NH.bt_expand(NH.as_polnc(e)) == e

    def test_factor_groups_by_permutation(self, ground2):
        """x_1 u_1 + 1 splits into two polynomial coefficients."""
        NH = ground2
        e = NH.mul(NH.u(1), NH.x(2))
        factors = NH.bt_factor(e)
        assert [w for _, w in factors] == [identity(2), simple(2, 1)]


class TestActions:
    """The polynomial representation and the module P (x) N."""

    def test_crossing_acts_by_divided_difference(self, ground2):
        """u_1 x_2 = 1 and u_1 x_1 = -1 in the polynomial representation."""
        NH = ground2
        assert NH.act_pol(NH.u(1), NH.pol.x(2)) == NH.pol.one()
        assert NH.act_pol(NH.u(1), NH.pol.x(1)) == -NH.pol.one()

    def test_crossing_on_dual_numbers(self):
        """u_1 x_2 = tau_1 over the dual numbers."""
        NH = NilHeckeAlgebra(builtin("dual_numbers"), 2)
        assert NH.act_pol(NH.u(1), NH.pol.x(2)) == NH.pol.tau_i(1)

    def test_witness_kills_token_monomials(self):
        """(y (x) y) u_1 is nonzero but kills b x^k for every word b and |k| <= 6."""
        NH = NilHeckeAlgebra(builtin("dual_numbers"), 2)
        witness = NH.mul(NH.tensor(Element.monomial((1, 1))), NH.u(1))
        assert not witness.is_zero()
        for exps in exponent_vectors(2, 6):
            for word in [(0, 0), (1, 0), (0, 1), (1, 1)]:
                f = Element.monomial(PolKey(word, exps))
                assert NH.act_pol(witness, f).is_zero(), (word, exps)

    def test_action_is_a_module_structure(self, clifford2):
        """(e1 e2) f = e1 (e2 f)"""
        NH = clifford2
        e1 = NH.u(1)
        e2 = NH.mul(NH.x(1), NH.generator(Gen("a", 2, "c")))
        f = NH.pol.mul(NH.pol.x(1), NH.pol.x(2))
        assert NH.act_pol(NH.mul(e1, e2), f) == NH.act_pol(e1, NH.act_pol(e2, f))

    def test_crossing_on_unit_of_tensor_module(self, ground2):
        """u_1 (1 (x) u_id) = 1 (x) u_1"""
        NH = ground2
        unit = Element.monomial(PolNCKey(PolKey((0, 0), (0, 0)), identity(2)))
        expected = Element.monomial(PolNCKey(PolKey((0, 0), (0, 0)), simple(2, 1)))
        assert NH.act_polnc(NH.u(1), unit) == expected
        assert NH.counit(expected).is_zero()


class TestSymmetries:
    """The left-right and up-down symmetries."""

    def test_left_right_on_crossing(self):
        """u_1 -> -u_2 for n = 3."""
        NH = NilHeckeAlgebra(builtin("ground"), 3)
        assert NH.omega_lr(NH.u(1)) == -NH.u(2)

    def test_left_right_is_an_involution(self, clifford2):
        """Applying the symmetry twice is the identity."""
        NH = clifford2
        e = NH.mul(NH.generator(Gen("a", 1, "c")), NH.mul(NH.x(1), NH.u(1)))
        assert NH.omega_lr(NH.omega_lr(e)) == e

    def test_left_right_respects_products(self, ground2):
        """w(u_1 x_2) = w(u_1) w(x_2)"""
        NH = ground2
        product = NH.mul(NH.u(1), NH.x(2))
        assert NH.omega_lr(product) == NH.mul(NH.omega_lr(NH.u(1)), NH.omega_lr(NH.x(2)))

    def test_up_down_reverses_products(self, ground2):
        """w(u_1 x_2) = w(x_2) w(u_1) over the ground ring."""
        NH = ground2
        product = NH.mul(NH.u(1), NH.x(2))
        assert NH.omega_ud(product) == NH.mul(NH.omega_ud(NH.x(2)), NH.omega_ud(NH.u(1)))


class TestGrading:
    """Z-degrees and parities of basis keys."""

    def test_dual_numbers_degrees(self):
        """With d = 2 dots have degree 4 and crossings degree 0."""
        NH = NilHeckeAlgebra(builtin("dual_numbers"), 2)
        assert NH.z_degree(only_key(NH.x(1))) == GradedDegree(4, 0)
        assert NH.z_degree(only_key(NH.u(1))) == GradedDegree(0, 0)
        assert NH.z_degree(only_key(NH.generator(Gen("a", 1, "y")))) == GradedDegree(2, 0)

    def test_clifford_degrees(self, clifford2):
        """With d = 0 dots are odd of degree 2 and crossings have degree -2."""
        NH = clifford2
        assert NH.z_degree(only_key(NH.x(1))) == GradedDegree(2, 1)
        assert NH.z_degree(only_key(NH.u(1))) == GradedDegree(-2, 0)

    def test_ungraded_algebra(self):
        """Group algebras carry no Z-grading."""
        NH = NilHeckeAlgebra(builtin("cyclic_group(2)"), 2)
        with pytest.raises(NotGraded):
            NH.z_degree(only_key(NH.x(1)))


class TestTraceChange:
    """NH for tr(- u) written inside NH for tr."""

    def test_cyclic_group_relations_hold(self):
        """The dictionary for u = g satisfies every changed relation."""
        assert check_trace_change(builtin("cyclic_group(2)"), Element({1: 1}), 2).passed

    def test_tokens_are_kept(self, ground2):
        """Only the dots change."""
        dictionary = TraceChangeDictionary(ground2, Element({0: 2}))
        assert dictionary.generator(Gen("u", 1)) == ground2.u(1)
        assert dictionary.generator(Gen("x", 1)) == ground2.x(1).scale(2)
