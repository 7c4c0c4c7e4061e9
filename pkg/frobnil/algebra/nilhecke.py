"""
The Frobenius nilHecke algebra NH_n(A) in the basis a * x^k * u_w.

Products are computed by right multiplication with one generator at a time.
Multiplying by a token slides it left through u_w and x^k; multiplying by
u_i uses the length rule; multiplying by x_j moves the dot left through u_w
one crossing at a time. Each crossing either relabels the dot or splits off
a tau term carrying one crossing fewer, so the recursion in ``_ux`` runs on
the length of w and terminates.
"""

from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator, List, NamedTuple, Tuple

from frobnil.algebra.frobenius import (
    FrobeniusSuperalgebra, TensorWord, place, superpermute, superpermute_word,
    tau, token, trace_changed, unit_word, word_parity,
)
from frobnil.algebra.linear import Element, bilinear, sign
from frobnil.algebra.nilcoxeter import NilCoxKey, nilcoxeter_relations
from frobnil.algebra.polynomial import Exponents, PolKey, PolynomialAlgebra, exponent_vectors, x_sign
from frobnil.algebra.relations import Gen, Relation, check_relations, relation
from frobnil.algebra.symgroup import (
    Permutation, all_permutations, identity, inverse, left_mul, length, longest,
    reduced_word, right_mul, simple,
)
from frobnil.config import settings
from frobnil.exceptions import (
    AlgebraMismatch, IllegalSymbolForTarget, IndexOutOfRange, NotGraded,
    NotSymmetric, SizeMismatch,
)
from frobnil.models import CheckResult

__all__ = [
    "NilHeckeKey", "PolNCKey", "GradedDegree", "NilHeckeAlgebra",
    "nilhecke_relations", "tau_terms", "TraceChangeDictionary", "check_trace_change",
]


class NilHeckeKey(NamedTuple):
    """The basis element word * x^exps * u_perm."""
    word: TensorWord
    exps: Exponents
    perm: Permutation


class PolNCKey(NamedTuple):
    """f (x) u_perm in P_n(A) (x) N_n(k)."""
    pol: PolKey
    perm: Permutation


class GradedDegree(NamedTuple):
    z_degree: int
    parity: int


class NilHeckeAlgebra:
    """NH_n(A) for a symmetric Frobenius superalgebra A."""

    def __init__(self, A: FrobeniusSuperalgebra, n: int):
        if not A.symmetric:
            raise NotSymmetric(f"the nilHecke algebra needs a symmetric trace; {A.name} is not symmetric")
        if n < 1:
            raise IndexOutOfRange("a nilHecke algebra needs n >= 1")
        self.A = A
        self.n = n
        self.pol = PolynomialAlgebra(A, n)
        self.zero_exps: Exponents = (0,) * n
        self.tau = tau(A)
        self._key_product = lru_cache(maxsize=settings.PRODUCT_CACHE_SIZE)(self._key_product_uncached)
        self._right_x = lru_cache(maxsize=settings.PRODUCT_CACHE_SIZE)(self._right_x_uncached)
        self._ux = lru_cache(maxsize=None)(self._ux_uncached)

    # construction

    def key(self, word: TensorWord, exps: Exponents, perm: Permutation) -> NilHeckeKey:
        return NilHeckeKey(tuple(word), tuple(exps), perm)

    def one(self) -> Element[NilHeckeKey]:
        return Element.monomial(NilHeckeKey(unit_word(self.A, self.n), self.zero_exps, identity(self.n)))

    def x(self, i: int) -> Element[NilHeckeKey]:
        return self.embed_pol(self.pol.x(i))

    def u(self, i: int) -> Element[NilHeckeKey]:
        return self.u_of(simple(self.n, i))

    def u_of(self, w: Permutation) -> Element[NilHeckeKey]:
        if w.n != self.n:
            raise SizeMismatch(f"permutation of size {w.n} in NH_{self.n}")
        return Element.monomial(NilHeckeKey(unit_word(self.A, self.n), self.zero_exps, w))

    def tensor(self, words: Element[TensorWord]) -> Element[NilHeckeKey]:
        e = identity(self.n)
        return words.relabel(lambda word: (NilHeckeKey(word, self.zero_exps, e), 1))

    def tau_i(self, i: int) -> Element[NilHeckeKey]:
        return self.tensor(place(self.A, self.n, i, self.tau))

    def generator(self, gen: Gen) -> Element[NilHeckeKey]:
        if gen.kind == "a":
            return self.tensor(Element.monomial(token(self.A, self.n, gen.index, self.A.index(gen.label))))
        if gen.kind == "x":
            return self.x(gen.index)
        if gen.kind == "u":
            return self.u(gen.index)
        raise IllegalSymbolForTarget(f"{gen.render()} is not a generator of the nilHecke algebra")

    def check(self, e: Element[NilHeckeKey]) -> None:
        for key in e.keys():
            if len(key.word) != self.n or len(key.exps) != self.n or key.perm.n != self.n:
                raise SizeMismatch(f"element on {len(key.word)} strands used in NH_{self.n}")
            if any(not 0 <= b < self.A.dim for b in key.word):
                raise AlgebraMismatch(f"tensor word {key.word} is not over {self.A.name}")

    # right multiplication by single generators

    def _right_word(self, key: NilHeckeKey, b: TensorWord) -> Element[NilHeckeKey]:
        moved, s = superpermute_word(self.A, key.perm, b)
        s *= sign(self.A.p * sum(key.exps) * word_parity(self.A, b))
        return self.A.word_product(key.word, moved).relabel(
            lambda word: (NilHeckeKey(word, key.exps, key.perm), s)
        )

    def _ux_uncached(self, w: Permutation, j: int) -> Element[NilCoxKey]:
        """Tail of u_w x_j = x_{w(j)} u_w + sum t u_z, with t in A^{(x)n}."""
        if w.is_identity():
            return Element()
        i = reduced_word(w)[-1]
        shorter = right_mul(w, i)
        m = i + 1 if j == i else i if j == i + 1 else j
        pairs = []
        for (t, z), c in self._ux(shorter, m).items():
            if z(i) < z(i + 1):
                pairs.append((NilCoxKey(t, right_mul(z, i)), c))
        # u_i x_{i+1} = x_i u_i + tau_i and u_i x_i = x_{i+1} u_i - (-1)^p tau_i
        coeff = 1 if j == i + 1 else -sign(self.A.p) if j == i else 0
        if coeff:
            slid = superpermute(self.A, shorter, place(self.A, self.n, i, self.tau))
            pairs.extend((NilCoxKey(t, shorter), coeff * c) for t, c in slid.items())
        return Element.from_pairs(pairs)

    def _right_x_uncached(self, key: NilHeckeKey, j: int) -> Element[NilHeckeKey]:
        p = self.A.p
        m = key.perm(j)
        step = tuple(int(l == m - 1) for l in range(self.n))
        lead_exps = tuple(a + b for a, b in zip(key.exps, step))
        pairs = [(NilHeckeKey(key.word, lead_exps, key.perm), x_sign(p, key.exps, step))]
        degree = sum(key.exps)
        for (t, z), c in self._ux(key.perm, j).items():
            s = c * sign(p * degree * word_parity(self.A, t))
            for word, c2 in self.A.word_product(key.word, t).items():
                pairs.append((NilHeckeKey(word, key.exps, z), s * c2))
        return Element.from_pairs(pairs)

    def _right_u(self, key: NilHeckeKey, i: int) -> Element[NilHeckeKey]:
        w = key.perm
        if w(i) > w(i + 1):
            return Element()
        return Element.monomial(NilHeckeKey(key.word, key.exps, right_mul(w, i)))

    def _key_product_uncached(self, k1: NilHeckeKey, k2: NilHeckeKey) -> Element[NilHeckeKey]:
        result = self._right_word(k1, k2.word)
        for j, power in enumerate(k2.exps, start=1):
            for _ in range(power):
                result = result.map_keys(lambda key, j=j: self._right_x(key, j))
        for i in reduced_word(k2.perm):
            result = result.map_keys(lambda key, i=i: self._right_u(key, i))
        return result

    def mul(self, e1: Element[NilHeckeKey], e2: Element[NilHeckeKey]) -> Element[NilHeckeKey]:
        """Normal-form product."""
        self.check(e1)
        self.check(e2)
        return bilinear(self._key_product, e1, e2)

    # embeddings and the basis theorem

    def embed_pol(self, f: Element[PolKey]) -> Element[NilHeckeKey]:
        e = identity(self.n)
        return f.relabel(lambda key: (NilHeckeKey(key.word, key.exps, e), 1))

    def embed_nc(self, z: Element[NilCoxKey]) -> Element[NilHeckeKey]:
        """N_n(k) -> NH_n(A); the tensor word of each key is ignored."""
        word = unit_word(self.A, self.n)
        return z.relabel(lambda key: (NilHeckeKey(word, self.zero_exps, key.perm), 1))

    def embed_nilcox(self, z: Element[NilCoxKey]) -> Element[NilHeckeKey]:
        """N_n(A) -> NH_n(A)."""
        return z.relabel(lambda key: (NilHeckeKey(key.word, self.zero_exps, key.perm), 1))

    def bt_expand(self, t: Element[PolNCKey]) -> Element[NilHeckeKey]:
        """sum f (x) u_w -> sum f * u_w, computed as products in NH."""
        result = Element()
        for key, c in t.items():
            f = Element.monomial(key.pol, c)
            result = result + self.mul(self.embed_pol(f), self.u_of(key.perm))
        return result

    def bt_factor(self, e: Element[NilHeckeKey]) -> List[Tuple[Element[PolKey], Permutation]]:
        """Read a normal form back as [(f_w, w)], sorted by w."""
        grouped = {}
        for key, c in e.items():
            grouped.setdefault(key.perm, []).append((PolKey(key.word, key.exps), c))
        return [(Element.from_pairs(pairs), w) for w, pairs in sorted(grouped.items())]

    def as_polnc(self, e: Element[NilHeckeKey]) -> Element[PolNCKey]:
        return e.relabel(lambda key: (PolNCKey(PolKey(key.word, key.exps), key.perm), 1))

    # actions on P_n(A) (x) N_n(k) and on P_n(A)

    def _u_on_polnc(self, i: int, t: Element[PolNCKey]) -> Element[PolNCKey]:
        # u_i (f (x) z) = s_i(f) (x) u_i z + d_i(f) (x) z
        pairs = []
        for key, c in t.items():
            f = Element.monomial(key.pol, c)
            z = key.perm
            if z.images.index(i) < z.images.index(i + 1):
                shifted = left_mul(i, z)
                pairs.extend((PolNCKey(k, shifted), c2) for k, c2 in self.pol.s_action(i, f).items())
            pairs.extend((PolNCKey(k, z), c2) for k, c2 in self.pol.ddiff(i, f).items())
        return Element.from_pairs(pairs)

    def act_polnc(self, e: Element[NilHeckeKey], t: Element[PolNCKey]) -> Element[PolNCKey]:
        """The module structure of P_n(A) (x) N_n(k): polynomials multiply, u_i by the crossing rule."""
        self.check(e)
        result = Element()
        for key, c in e.items():
            current = t
            for i in reversed(reduced_word(key.perm)):
                current = self._u_on_polnc(i, current)
            head = Element.monomial(PolKey(key.word, key.exps), c)
            pairs = []
            for target, c2 in current.items():
                for k, c3 in self.pol.mul(head, Element.monomial(target.pol)).items():
                    pairs.append((PolNCKey(k, target.perm), c2 * c3))
            result = result + Element.from_pairs(pairs)
        return result

    def act_pol(self, e: Element[NilHeckeKey], f: Element[PolKey]) -> Element[PolKey]:
        """The polynomial representation: x_i and tokens multiply, u_j acts by d_j."""
        self.check(e)
        result = Element()
        for key, c in e.items():
            current = f
            for i in reversed(reduced_word(key.perm)):
                current = self.pol.ddiff(i, current)
            head = Element.monomial(PolKey(key.word, key.exps), c)
            result = result + self.pol.mul(head, current)
        return result

    def counit(self, t: Element[PolNCKey]) -> Element[PolKey]:
        """Kill every term whose nilCoxeter part is not u_id."""
        return Element.from_pairs((key.pol, c) for key, c in t.items() if key.perm.is_identity())

    # symmetries

    def _omega_lr_key(self, key: NilHeckeKey) -> Element[NilHeckeKey]:
        n = self.n
        result = self.tensor(superpermute(self.A, longest(n), Element.monomial(key.word)))
        for j, power in enumerate(key.exps, start=1):
            for _ in range(power):
                result = self.mul(result, self.x(n + 1 - j))
        for i in reduced_word(key.perm):
            result = self.mul(result, -self.u(n - i))
        return result

    def omega_lr(self, e: Element[NilHeckeKey]) -> Element[NilHeckeKey]:
        """u_i -> -u_{n-i}, x_i -> x_{n+1-i}, a -> pi(a)."""
        self.check(e)
        return e.map_keys(self._omega_lr_key)

    def _omega_ud_key(self, key: NilHeckeKey) -> Element[NilHeckeKey]:
        p = self.A.p
        degree = sum(key.exps)
        s = sign(p * (word_parity(self.A, key.word) * degree + comb(degree, 2) + length(key.perm)))
        result = self.u_of(inverse(key.perm))
        for j in range(self.n, 0, -1):
            for _ in range(key.exps[j - 1]):
                result = self.mul(result, self.x(j))
        return self.mul(result, self.tensor(Element.monomial(key.word))).scale(s)

    def omega_ud(self, e: Element[NilHeckeKey]) -> Element[NilHeckeKey]:
        """Anti-map u_i -> (-1)^p u_i, x_i -> x_i, a -> a, reversing products with the Koszul sign.

        It respects products only when A is supercommutative; on other
        algebras it is still defined key by key.
        """
        self.check(e)
        return e.map_keys(self._omega_ud_key)

    # gradings

    def parity(self, key: NilHeckeKey) -> int:
        return (word_parity(self.A, key.word) + sum(key.exps) * self.A.p) % 2

    def z_degree(self, key: NilHeckeKey) -> GradedDegree:
        """deg(a) + |k|(d+2) + l(w)(d-2), with the parity of the key."""
        if not self.A.is_graded:
            raise NotGraded(f"{self.A.name} carries no Z-grading")
        d = self.A.d
        degree = sum(self.A.degrees[b] for b in key.word)
        degree += sum(key.exps) * (d + 2) + length(key.perm) * (d - 2)
        return GradedDegree(degree, self.parity(key))

    # enumeration and relations

    def basis_keys(self, max_degree: int) -> Iterator[NilHeckeKey]:
        perms = list(all_permutations(self.n))
        for exps in exponent_vectors(self.n, max_degree):
            for word in product(range(self.A.dim), repeat=self.n):
                for w in perms:
                    yield NilHeckeKey(tuple(word), exps, w)

    def verify_relations(self) -> CheckResult:
        """Every defining relation instance, evaluated to normal form."""
        return check_relations(f"nilhecke relations ({self.A.name}, n={self.n})",
                               nilhecke_relations(self.A, self.n), self)


def tau_terms(A: FrobeniusSuperalgebra, i: int, two: Element[TensorWord]) -> List[Tuple[object, List[Gen]]]:
    """A two-factor element on strands i, i+1 as token products, strand i+1 first."""
    terms = []
    for (low, high), c in two.sorted_items():
        gens = []
        if high != A.unit:
            gens.append(Gen("a", i + 1, A.labels[high]))
        if low != A.unit:
            gens.append(Gen("a", i, A.labels[low]))
        terms.append((c, gens))
    return terms


def nilhecke_relations(A: FrobeniusSuperalgebra, n: int, two: Element[TensorWord] = None) -> List[Relation]:
    """Defining relations of NH_n(A); ``two`` overrides tau (used for trace changes)."""
    p = A.p
    teleporter = tau(A) if two is None else two
    rels: List[Relation] = nilcoxeter_relations(A, n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(relation("dots supercommute", (1, [Gen("x", i), Gen("x", j)]), (-sign(p), [Gen("x", j), Gen("x", i)])))
        for j in range(1, n + 1):
            for b in range(A.dim):
                if b == A.unit:
                    continue
                g = Gen("a", j, A.labels[b])
                rels.append(relation("token passes dot", (1, [g, Gen("x", i)]), (-sign(p * A.parity(b)), [Gen("x", i), g])))
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rels.append(relation("dot far from crossing", (1, [Gen("x", j), Gen("u", i)]), (-1, [Gen("u", i), Gen("x", j)])))
        tail = tau_terms(A, i, teleporter)
        rels.append(relation(
            "dot slides up",
            (1, [Gen("u", i), Gen("x", i + 1)]),
            (-1, [Gen("x", i), Gen("u", i)]),
            *[(-c, gens) for c, gens in tail],
        ))
        rels.append(relation(
            "dot slides down",
            (1, [Gen("x", i + 1), Gen("u", i)]),
            (-1, [Gen("u", i), Gen("x", i)]),
            *[(-sign(p) * c, gens) for c, gens in tail],
        ))
    return rels


class TraceChangeDictionary:
    """Generators of NH_n(A, tr a -> tr(a u)) written inside NH_n(A, tr).

    Tokens and crossings are kept, x_i -> (-1)^|u| x_i * u[i].
    """

    def __init__(self, nh: NilHeckeAlgebra, u: Element[int]):
        self.nh = nh
        self.n = nh.n
        self.A = nh.A
        self.u = u
        self.parity = next(nh.A.parity(k) for k in u.keys())

    def generator(self, gen: Gen) -> Element[NilHeckeKey]:
        if gen.kind != "x":
            return self.nh.generator(gen)
        u_on_strand = Element.from_pairs(
            (token(self.A, self.n, gen.index, b), c) for b, c in self.u.items()
        )
        return self.nh.mul(self.nh.x(gen.index), self.nh.tensor(u_on_strand)).scale(sign(self.parity))

    def mul(self, e1: Element[NilHeckeKey], e2: Element[NilHeckeKey]) -> Element[NilHeckeKey]:
        return self.nh.mul(e1, e2)

    def one(self) -> Element[NilHeckeKey]:
        return self.nh.one()


def check_trace_change(A: FrobeniusSuperalgebra, u: Element[int], n: int) -> CheckResult:
    """The defining relations for the trace tr(- u) hold in NH_n(A) under the dictionary."""
    changed = trace_changed(A, u)
    dictionary = TraceChangeDictionary(NilHeckeAlgebra(A, n), u)
    return check_relations(f"trace change ({A.name}, n={n})", nilhecke_relations(changed, n), dictionary)
