"""
The odd nilHecke algebra with adjoined Clifford generators, and its
isomorphism with the Clifford nilHecke algebra NH_n(Cl).

All generators c_i, y_i, v_i are odd. Normal form: c-word * y-monomial * v_w
with the c's in descending strand order, the y's in increasing order and v_w
taken along the lexicographically smallest reduced word of w. Other reduced
words give +-v_w: commuting two far letters costs a sign, a braid move does
not.
"""

from collections import deque
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, NamedTuple, Tuple

from frobnil.algebra.frobenius import FrobeniusSuperalgebra, builtin
from frobnil.algebra.linear import Element, bilinear, sign
from frobnil.algebra.nilhecke import NilHeckeAlgebra, NilHeckeKey
from frobnil.algebra.polynomial import Exponents, exponent_vectors, x_sign
from frobnil.algebra.relations import Gen, Relation, check_relations, relation
from frobnil.algebra.symgroup import (
    Permutation, all_permutations, from_word, identity, length, reduced_word, right_mul,
    simple,
)
from frobnil.config import settings
from frobnil.exceptions import IllegalSymbolForTarget, IndexOutOfRange, SizeMismatch
from frobnil.models import CheckResult

__all__ = ["OddNHKey", "OddNilHeckeAlgebra", "odd_nilhecke_relations", "word_sign"]

CliffordWord = Tuple[int, ...]


class OddNHKey(NamedTuple):
    """c_n^{e_n} ... c_1^{e_1} * y^exps * v_perm; cword[j-1] = e_j."""
    cword: CliffordWord
    exps: Exponents
    perm: Permutation


@lru_cache(maxsize=None)
def _word_signs(w: Permutation) -> Dict[Tuple[int, ...], int]:
    """Sign of v along every reduced word of w, relative to the canonical one."""
    start = tuple(reduced_word(w))
    signs = {start: 1}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        s = signs[word]
        for pos in range(len(word) - 1):
            a, b = word[pos], word[pos + 1]
            if abs(a - b) > 1:
                moved = word[:pos] + (b, a) + word[pos + 2:]
                if moved not in signs:
                    signs[moved] = -s
                    queue.append(moved)
            if abs(a - b) == 1 and pos + 2 < len(word) and word[pos + 2] == a:
                moved = word[:pos] + (b, a, b) + word[pos + 3:]
                if moved not in signs:
                    signs[moved] = s
                    queue.append(moved)
    return signs


def word_sign(n: int, word: Tuple[int, ...]) -> int:
    """v_{i1} ... v_{ik} = word_sign * v_w for a reduced word of w."""
    return _word_signs(from_word(n, word))[tuple(word)]


def _append_sign(w: Permutation, i: int) -> int:
    # v_w v_i = sign * v_{w s_i} when the length goes up
    return _word_signs(right_mul(w, i))[tuple(reduced_word(w)) + (i,)]


class OddNilHeckeAlgebra:
    """ONH_n (x) Cl^{(x)n}, with the maps to and from NH_n(Cl)."""

    def __init__(self, n: int, clifford: FrobeniusSuperalgebra = None):
        if n < 1:
            raise IndexOutOfRange("an odd nilHecke algebra needs n >= 1")
        self.n = n
        self.A = clifford or builtin("clifford_odd")
        self.zero_exps: Exponents = (0,) * n
        self.empty: CliffordWord = (0,) * n
        self._nh = None
        self._key_product = lru_cache(maxsize=settings.PRODUCT_CACHE_SIZE)(self._key_product_uncached)
        self._vy = lru_cache(maxsize=None)(self._vy_uncached)

    @property
    def nh(self) -> NilHeckeAlgebra:
        if self._nh is None:
            self._nh = NilHeckeAlgebra(self.A, self.n)
        return self._nh

    # construction

    def one(self) -> Element[OddNHKey]:
        return Element.monomial(OddNHKey(self.empty, self.zero_exps, identity(self.n)))

    def c(self, i: int) -> Element[OddNHKey]:
        self._check_strand(i)
        bits = [0] * self.n
        bits[i - 1] = 1
        return Element.monomial(OddNHKey(tuple(bits), self.zero_exps, identity(self.n)))

    def y(self, i: int) -> Element[OddNHKey]:
        self._check_strand(i)
        exps = [0] * self.n
        exps[i - 1] = 1
        return Element.monomial(OddNHKey(self.empty, tuple(exps), identity(self.n)))

    def v(self, i: int) -> Element[OddNHKey]:
        return Element.monomial(OddNHKey(self.empty, self.zero_exps, simple(self.n, i)))

    def generator(self, gen: Gen) -> Element[OddNHKey]:
        if gen.kind == "c" or (gen.kind == "a" and gen.label == "c"):
            return self.c(gen.index)
        if gen.kind == "a" and gen.label == "1":
            self._check_strand(gen.index)
            return self.one()
        if gen.kind == "y":
            return self.y(gen.index)
        if gen.kind == "v":
            return self.v(gen.index)
        raise IllegalSymbolForTarget(f"{gen.render()} is not a generator of the odd nilHecke algebra")

    def _check_strand(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"strand {i} is outside 1..{self.n}")

    def check(self, e: Element[OddNHKey]) -> None:
        for key in e.keys():
            if len(key.cword) != self.n or len(key.exps) != self.n or key.perm.n != self.n:
                raise SizeMismatch(f"element on {len(key.cword)} strands used in ONH_{self.n}")

    def parity(self, key: OddNHKey) -> int:
        return (sum(key.cword) + sum(key.exps) + length(key.perm)) % 2

    # right multiplication by single generators

    def _vy_uncached(self, w: Permutation, j: int) -> Tuple[int, Element[Permutation]]:
        """v_w y_j = lead * y_{w(j)} v_w + sum t_z v_z."""
        if w.is_identity():
            return 1, Element()
        i = reduced_word(w)[-1]
        shorter = right_mul(w, i)
        m = i + 1 if j == i else i if j == i + 1 else j
        # v_i y_j = -y_{s_i j} v_i + [j in {i, i+1}]
        inner_lead, inner_tails = self._vy(shorter, m)
        pairs = []
        for z, t in inner_tails.items():
            if z(i) < z(i + 1):
                pairs.append((right_mul(z, i), -t * _append_sign(z, i)))
        if j in (i, i + 1):
            pairs.append((shorter, 1))
        return -inner_lead, Element.from_pairs(pairs)

    def _right_y(self, key: OddNHKey, j: int) -> Element[OddNHKey]:
        lead, tails = self._vy(key.perm, j)
        m = key.perm(j)
        step = tuple(int(l == m - 1) for l in range(self.n))
        exps = tuple(a + b for a, b in zip(key.exps, step))
        pairs = [(OddNHKey(key.cword, exps, key.perm), lead * x_sign(1, key.exps, step))]
        pairs.extend((OddNHKey(key.cword, key.exps, z), t) for z, t in tails.items())
        return Element.from_pairs(pairs)

    def _right_v(self, key: OddNHKey, i: int) -> Element[OddNHKey]:
        w = key.perm
        if w(i) > w(i + 1):
            return Element()
        return Element.monomial(OddNHKey(key.cword, key.exps, right_mul(w, i)), _append_sign(w, i))

    def _right_c(self, key: OddNHKey, j: int) -> Element[OddNHKey]:
        # c_j passes y^k v_w, then the c_l with l < j
        s = sign(sum(key.exps) + length(key.perm) + sum(key.cword[:j - 1]))
        bits = list(key.cword)
        bits[j - 1] ^= 1
        return Element.monomial(OddNHKey(tuple(bits), key.exps, key.perm), s)

    def _key_product_uncached(self, k1: OddNHKey, k2: OddNHKey) -> Element[OddNHKey]:
        result = Element.monomial(k1)
        for j in range(self.n, 0, -1):
            if k2.cword[j - 1]:
                result = result.map_keys(lambda key, j=j: self._right_c(key, j))
        for j, power in enumerate(k2.exps, start=1):
            for _ in range(power):
                result = result.map_keys(lambda key, j=j: self._right_y(key, j))
        for i in reduced_word(k2.perm):
            result = result.map_keys(lambda key, i=i: self._right_v(key, i))
        return result

    def mul(self, e1: Element[OddNHKey], e2: Element[OddNHKey]) -> Element[OddNHKey]:
        """Normal-form product."""
        self.check(e1)
        self.check(e2)
        return bilinear(self._key_product, e1, e2)

    # the isomorphism with NH_n(Cl)

    def _psi_key(self, key: NilHeckeKey) -> Element[OddNHKey]:
        c_index = self.A.index("c")
        cword = tuple(int(b == c_index) for b in key.word)
        result = Element.monomial(OddNHKey(cword, key.exps, identity(self.n)))
        for i in reduced_word(key.perm):
            result = self.mul(result, self.mul(self.c(i) - self.c(i + 1), self.v(i)))
        return result

    def psi(self, e: Element[NilHeckeKey]) -> Element[OddNHKey]:
        """c_i -> c_i, x_i -> y_i, u_i -> (c_i - c_{i+1}) v_i."""
        self.nh.check(e)
        return e.map_keys(self._psi_key)

    def _psi_inv_key(self, key: OddNHKey) -> Element[NilHeckeKey]:
        nh = self.nh
        c_index, unit = self.A.index("c"), self.A.unit
        word = tuple(c_index if bit else unit for bit in key.cword)
        result = Element.monomial(NilHeckeKey(word, key.exps, identity(self.n)))
        half = Fraction(1, 2)
        for i in reduced_word(key.perm):
            result = nh.mul(result, nh.mul(nh.tau_i(i), nh.u(i)).scale(half))
        return result

    def psi_inv(self, e: Element[OddNHKey]) -> Element[NilHeckeKey]:
        """c_i -> c_i, y_i -> x_i, v_i -> 1/2 tau_i u_i."""
        self.check(e)
        return e.map_keys(self._psi_inv_key)

    # enumeration and relations

    def basis_keys(self, max_degree: int) -> Iterator[OddNHKey]:
        perms = list(all_permutations(self.n))
        for exps in exponent_vectors(self.n, max_degree):
            for cword in product((0, 1), repeat=self.n):
                for w in perms:
                    yield OddNHKey(cword, exps, w)

    def verify_relations(self) -> CheckResult:
        return check_relations(f"odd nilhecke relations (n={self.n})", odd_nilhecke_relations(self.n), self)


def odd_nilhecke_relations(n: int) -> List[Relation]:
    c = lambda i: Gen("c", i)
    y = lambda i: Gen("y", i)
    v = lambda i: Gen("v", i)
    rels: List[Relation] = []
    for i in range(1, n + 1):
        rels.append(relation("c_i^2 = 1", (1, [c(i), c(i)]), (-1, [])))
        for j in range(1, n + 1):
            rels.append(relation("c passes y", (1, [y(i), c(j)]), (1, [c(j), y(i)])))
            if i < j:
                rels.append(relation("c anticommute", (1, [c(i), c(j)]), (1, [c(j), c(i)])))
                rels.append(relation("y anticommute", (1, [y(i), y(j)]), (1, [y(j), y(i)])))
    for i in range(1, n):
        rels.append(relation("v_i^2 = 0", (1, [v(i), v(i)])))
        for j in range(i + 2, n):
            rels.append(relation("v far anticommute", (1, [v(i), v(j)]), (1, [v(j), v(i)])))
        if i + 1 < n:
            rels.append(relation("odd braid", (1, [v(i), v(i + 1), v(i)]), (-1, [v(i + 1), v(i), v(i + 1)])))
        for j in range(1, n + 1):
            rels.append(relation("c passes v", (1, [v(i), c(j)]), (1, [c(j), v(i)])))
            if j not in (i, i + 1):
                rels.append(relation("y far from v", (1, [y(j), v(i)]), (1, [v(i), y(j)])))
        rels.append(relation("dot slides up", (1, [v(i), y(i + 1)]), (1, [y(i), v(i)]), (-1, [])))
        rels.append(relation("dot slides down", (1, [y(i + 1), v(i)]), (1, [v(i), y(i)]), (-1, [])))
    return rels
