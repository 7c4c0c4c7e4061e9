import pytest

from frobnil.algebra.cliffordodd import OddNilHeckeAlgebra, word_sign
from frobnil.algebra.relations import Gen
from frobnil.exceptions import IllegalSymbolForTarget, IndexOutOfRange


@pytest.fixture
def onh2():
    return OddNilHeckeAlgebra(2)


class TestOddNilHecke:
    """Normal forms in the odd nilHecke algebra with Clifford generators."""

    def test_v_squares_to_zero(self, onh2):
        """v_1 v_1 = 0"""
        assert onh2.mul(onh2.v(1), onh2.v(1)).is_zero()

    def test_clifford_generators(self, onh2):
        """c_i^2 = 1 and distinct c's anticommute."""
        A = onh2
        assert A.mul(A.c(1), A.c(1)) == A.one()
        assert (A.mul(A.c(1), A.c(2)) + A.mul(A.c(2), A.c(1))).is_zero()

    def test_dots_anticommute(self, onh2):
        """y_1 y_2 + y_2 y_1 = 0"""
        A = onh2
        assert (A.mul(A.y(1), A.y(2)) + A.mul(A.y(2), A.y(1))).is_zero()

    def test_dot_slides(self, onh2):
        """v_1 y_2 + y_1 v_1 = 1"""
        A = onh2
        assert A.mul(A.v(1), A.y(2)) + A.mul(A.y(1), A.v(1)) == A.one()

    def test_defining_relations_hold(self, onh2):
        """Every defining relation instance vanishes for n = 2."""
        assert onh2.verify_relations().passed

    @pytest.mark.slow
    def test_defining_relations_hold_on_three_strands(self):
        """Every defining relation instance vanishes for n = 3."""
        assert OddNilHeckeAlgebra(3).verify_relations().passed

    def test_crossings_of_nilhecke_are_rejected(self, onh2):
        """u_i lives in NH_n(Cl), not here."""
        with pytest.raises(IllegalSymbolForTarget):
            onh2.generator(Gen("u", 1))

    def test_strand_range(self, onh2):
        """y_3 does not exist for n = 2."""
        with pytest.raises(IndexOutOfRange):
            onh2.y(3)


class TestReducedWordSigns:
    """v along different reduced words of the same permutation."""

    def test_braid_move_keeps_sign(self):
        """v_1 v_2 v_1 = v_2 v_1 v_2"""
        assert word_sign(3, (1, 2, 1)) == word_sign(3, (2, 1, 2)) == 1

    def test_far_commutation_flips_sign(self):
        """v_1 v_3 = -v_3 v_1"""
        assert word_sign(4, (1, 3)) == -word_sign(4, (3, 1))


class TestIsomorphism:
    """The map NH_n(Cl) -> ONH_n (x) Cl^n and its inverse."""

    def test_image_of_crossing(self, onh2):
        """u_1 -> (c_1 - c_2) v_1"""
        A = onh2
        assert A.psi(A.nh.u(1)) == A.mul(A.c(1) - A.c(2), A.v(1))

    def test_roundtrip(self, onh2):
        """psi_inv(psi(e)) = e"""
        nh = onh2.nh
        e = nh.mul(nh.u(1), nh.mul(nh.x(2), nh.generator(Gen("a", 1, "c"))))
        assert onh2.psi_inv(onh2.psi(e)) == e

    def test_homomorphism(self, onh2):
        """psi(u_1 x_2) = psi(u_1) psi(x_2)"""
        nh = onh2.nh
        assert onh2.psi(nh.mul(nh.u(1), nh.x(2))) == onh2.mul(onh2.psi(nh.u(1)), onh2.psi(nh.x(2)))

    def test_inverse_is_a_homomorphism(self, onh2):
        """psi_inv(v_1 y_2) = psi_inv(v_1) psi_inv(y_2)"""
        A = onh2
        assert A.psi_inv(A.mul(A.v(1), A.y(2))) == A.nh.mul(A.psi_inv(A.v(1)), A.psi_inv(A.y(2)))
