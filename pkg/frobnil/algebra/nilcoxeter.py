"""The Frobenius nilCoxeter algebra N_n(A) with basis a * u_w."""

from functools import lru_cache
from itertools import product
from typing import Iterator, List, NamedTuple, Sequence

from frobnil.algebra.frobenius import (
    FrobeniusSuperalgebra, TensorWord, superpermute_word, token, unit_word,
)
from frobnil.algebra.linear import Element, bilinear, sign
from frobnil.algebra.relations import Gen, Relation, check_relations, relation
from frobnil.algebra.symgroup import (
    Permutation, all_permutations, compose, identity, length, simple,
)
from frobnil.config import settings
from frobnil.exceptions import AlgebraMismatch, IllegalSymbolForTarget, IndexOutOfRange, SizeMismatch
from frobnil.models import CheckResult

__all__ = ["NilCoxKey", "NilCoxeterAlgebra", "token_relations", "nilcoxeter_relations"]


class NilCoxKey(NamedTuple):
    """The basis element word * u_perm."""
    word: TensorWord
    perm: Permutation


class NilCoxeterAlgebra:
    """N_n(A): tokens slide through crossings, u_w u_v = u_{wv} or 0."""

    def __init__(self, A: FrobeniusSuperalgebra, n: int):
        if n < 1:
            raise IndexOutOfRange("a nilCoxeter algebra needs n >= 1")
        self.A = A
        self.n = n
        self._key_product = lru_cache(maxsize=settings.PRODUCT_CACHE_SIZE)(self._key_product_uncached)

    def key(self, word: TensorWord, perm: Permutation) -> NilCoxKey:
        return NilCoxKey(word, perm)

    def one(self) -> Element[NilCoxKey]:
        return Element.monomial(NilCoxKey(unit_word(self.A, self.n), identity(self.n)))

    def u_of(self, w: Permutation) -> Element[NilCoxKey]:
        """u_w with trivial tensor word."""
        if w.n != self.n:
            raise SizeMismatch(f"permutation of size {w.n} in N_{self.n}")
        return Element.monomial(NilCoxKey(unit_word(self.A, self.n), w))

    def u_of_word(self, word: Sequence[int]) -> Element[NilCoxKey]:
        """u_{i1} ... u_{ik} as an actual product of generators."""
        result = self.one()
        for i in word:
            result = self.mul(result, self.u_of(simple(self.n, i)))
        return result

    def tensor(self, words: Element[TensorWord]) -> Element[NilCoxKey]:
        e = identity(self.n)
        return words.relabel(lambda word: (NilCoxKey(word, e), 1))

    def generator(self, gen: Gen) -> Element[NilCoxKey]:
        if gen.kind == "a":
            return self.tensor(Element.monomial(token(self.A, self.n, gen.index, self.A.index(gen.label))))
        if gen.kind == "u":
            return self.u_of(simple(self.n, gen.index))
        raise IllegalSymbolForTarget(f"{gen.render()} is not a generator of the nilCoxeter algebra")

    def check(self, e: Element[NilCoxKey]) -> None:
        for key in e.keys():
            if len(key.word) != self.n or key.perm.n != self.n:
                raise SizeMismatch(f"element on {len(key.word)} strands used in N_{self.n}")
            if any(not 0 <= b < self.A.dim for b in key.word):
                raise AlgebraMismatch(f"tensor word {key.word} is not over {self.A.name}")

    def _key_product_uncached(self, k1: NilCoxKey, k2: NilCoxKey) -> Element[NilCoxKey]:
        wv = compose(k1.perm, k2.perm)
        if length(wv) != length(k1.perm) + length(k2.perm):
            return Element()
        moved, s = superpermute_word(self.A, k1.perm, k2.word)
        return self.A.word_product(k1.word, moved).relabel(lambda word: (NilCoxKey(word, wv), s))

    def mul(self, e1: Element[NilCoxKey], e2: Element[NilCoxKey]) -> Element[NilCoxKey]:
        """(a u_w)(b u_v) = a w(b) u_{wv} when lengths add, else 0."""
        self.check(e1)
        self.check(e2)
        return bilinear(self._key_product, e1, e2)

    def basis_keys(self) -> Iterator[NilCoxKey]:
        for word in product(range(self.A.dim), repeat=self.n):
            for w in all_permutations(self.n):
                yield NilCoxKey(tuple(word), w)

    def rank(self) -> int:
        return sum(1 for _ in self.basis_keys())

    def verify_relations(self) -> CheckResult:
        """Every defining relation instance, evaluated to normal form."""
        return check_relations(f"nilcoxeter relations ({self.A.name}, n={self.n})",
                               nilcoxeter_relations(self.A, self.n), self)


def token_relations(A: FrobeniusSuperalgebra, n: int) -> List[Relation]:
    """A^{(x)n} as generated by single-strand tokens.

    Products on one strand follow A; tokens on different strands
    supercommute; the unit token on any strand is 1.
    """
    rels: List[Relation] = []
    for i in range(1, n + 1):
        rels.append(relation("unit token", (1, [Gen("a", i, A.labels[A.unit])]), (-1, [])))
        for a, b in product(range(A.dim), repeat=2):
            terms = [(1, [Gen("a", i, A.labels[a]), Gen("a", i, A.labels[b])])]
            terms += [(-c, [Gen("a", i, A.labels[k])]) for k, c in A.mul(a, b).items()]
            rels.append(relation("token product", *terms))
    for i, j in product(range(1, n + 1), repeat=2):
        if i >= j:
            continue
        for a, b in product(range(A.dim), repeat=2):
            if a == A.unit or b == A.unit:
                continue
            ga, gb = Gen("a", i, A.labels[a]), Gen("a", j, A.labels[b])
            rels.append(relation(
                "interchange",
                (1, [ga, gb]),
                (-sign(A.parity(a) * A.parity(b)), [gb, ga]),
            ))
    return rels


def nilcoxeter_relations(A: FrobeniusSuperalgebra, n: int) -> List[Relation]:
    rels = token_relations(A, n)
    for i in range(1, n):
        rels.append(relation("u_i^2 = 0", (1, [Gen("u", i), Gen("u", i)])))
        for j in range(i + 2, n):
            rels.append(relation("far commutation", (1, [Gen("u", i), Gen("u", j)]), (-1, [Gen("u", j), Gen("u", i)])))
        if i + 1 < n:
            rels.append(relation(
                "braid",
                (1, [Gen("u", i), Gen("u", i + 1), Gen("u", i)]),
                (-1, [Gen("u", i + 1), Gen("u", i), Gen("u", i + 1)]),
            ))
        s = simple(n, i)
        for j in range(1, n + 1):
            for b in range(A.dim):
                if b == A.unit:
                    continue
                rels.append(relation(
                    "crossing slide",
                    (1, [Gen("u", i), Gen("a", j, A.labels[b])]),
                    (-1, [Gen("a", s(j), A.labels[b]), Gen("u", i)]),
                ))
    return rels
