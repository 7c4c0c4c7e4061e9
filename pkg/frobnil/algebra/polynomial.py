"""
The Frobenius polynomial algebra P_n(A), the S_n action on it and the
Frobenius divided-difference operators.

Monomials are kept in the normal order a * x_1^{k_1} ... x_n^{k_n}. The x_i
have the parity p of the trace, so they anticommute with each other and
with odd tokens when p is odd.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, NamedTuple, Tuple

from frobnil.algebra.frobenius import (
    FrobeniusSuperalgebra, TensorWord, place, superpermute_word, tau, token,
    unit_word, word_parity,
)
from frobnil.algebra.linear import Element, bilinear, sign
from frobnil.algebra.relations import Gen
from frobnil.algebra.symgroup import simple
from frobnil.config import settings
from frobnil.exceptions import (
    AlgebraMismatch, IllegalSymbolForTarget, IndexOutOfRange, NonDivisible,
    OddTraceParity, SizeMismatch,
)

__all__ = ["Exponents", "PolKey", "PolynomialAlgebra", "exponent_vectors", "x_sign"]

Exponents = Tuple[int, ...]


class PolKey(NamedTuple):
    """The monomial word * x^exps."""
    word: TensorWord
    exps: Exponents


def exponent_vectors(n: int, max_degree: int) -> Iterator[Exponents]:
    """All k in N^n with |k| <= max_degree, by total degree then lexicographically."""
    for total in range(max_degree + 1):
        for k in product(range(total + 1), repeat=n):
            if sum(k) == total:
                yield k


def x_sign(p: int, left: Exponents, right: Exponents) -> int:
    """Sign of x^left x^right -> x^(left+right): each x_j of right passes x_l, l > j."""
    if not p:
        return 1
    exponent = 0
    tail = 0
    for j in range(len(left) - 1, -1, -1):
        exponent += right[j] * tail
        tail += left[j]
    return sign(exponent)


def _add(k: Exponents, m: Exponents) -> Exponents:
    return tuple(a + b for a, b in zip(k, m))


class PolynomialAlgebra:
    """P_n(A) = A^{(x)n} (x) k[x_1..x_n] with super signs."""

    def __init__(self, A: FrobeniusSuperalgebra, n: int):
        if n < 1:
            raise IndexOutOfRange("a polynomial algebra needs n >= 1")
        self.A = A
        self.n = n
        self.zero_exps: Exponents = (0,) * n
        self._key_product = lru_cache(maxsize=settings.PRODUCT_CACHE_SIZE)(self._key_product_uncached)
        self._ddiff_monomial = lru_cache(maxsize=settings.PRODUCT_CACHE_SIZE)(self._ddiff_monomial_uncached)
        self._tau: Dict[int, Element[PolKey]] = {}

    # construction

    def one(self) -> Element[PolKey]:
        return Element.monomial(PolKey(unit_word(self.A, self.n), self.zero_exps))

    def x(self, i: int, power: int = 1) -> Element[PolKey]:
        self._check_strand(i)
        exps = [0] * self.n
        exps[i - 1] = power
        return Element.monomial(PolKey(unit_word(self.A, self.n), tuple(exps)))

    def monomial(self, exps: Exponents) -> Element[PolKey]:
        return Element.monomial(PolKey(unit_word(self.A, self.n), tuple(exps)))

    def tensor(self, words: Element[TensorWord]) -> Element[PolKey]:
        return words.relabel(lambda word: (PolKey(word, self.zero_exps), 1))

    def tau_i(self, i: int) -> Element[PolKey]:
        """tau placed on strands i, i+1."""
        if i not in self._tau:
            self._check_gap(i)
            self._tau[i] = self.tensor(place(self.A, self.n, i, tau(self.A)))
        return self._tau[i]

    def generator(self, gen: Gen) -> Element[PolKey]:
        if gen.kind == "a":
            return self.tensor(Element.monomial(token(self.A, self.n, gen.index, self.A.index(gen.label))))
        if gen.kind == "x":
            return self.x(gen.index)
        raise IllegalSymbolForTarget(f"{gen.render()} is not a generator of the polynomial algebra")

    def _check_strand(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"strand {i} is outside 1..{self.n}")

    def _check_gap(self, i: int) -> None:
        if not 1 <= i < self.n:
            raise IndexOutOfRange(f"s_{i} needs 1 <= {i} <= {self.n - 1}")

    def check(self, e: Element[PolKey]) -> None:
        for key in e.keys():
            if len(key.word) != self.n or len(key.exps) != self.n:
                raise SizeMismatch(f"element on {len(key.word)} strands used in P_{self.n}")
            if any(not 0 <= b < self.A.dim for b in key.word):
                raise AlgebraMismatch(f"tensor word {key.word} is not over {self.A.name}")

    def parity(self, key: PolKey) -> int:
        return (word_parity(self.A, key.word) + sum(key.exps) * self.A.p) % 2

    # multiplication

    def _key_product_uncached(self, k1: PolKey, k2: PolKey) -> Element[PolKey]:
        p = self.A.p
        s = sign(p * sum(k1.exps) * word_parity(self.A, k2.word)) * x_sign(p, k1.exps, k2.exps)
        exps = _add(k1.exps, k2.exps)
        return self.A.word_product(k1.word, k2.word).relabel(lambda word: (PolKey(word, exps), s))

    def mul(self, e1: Element[PolKey], e2: Element[PolKey]) -> Element[PolKey]:
        """Product in normal order: x's pass tokens with (-1)^(p|b|), each other with (-1)^p."""
        self.check(e1)
        self.check(e2)
        return bilinear(self._key_product, e1, e2)

    # symmetric group action

    def s_key(self, i: int, key: PolKey) -> Tuple[PolKey, int]:
        word, s = superpermute_word(self.A, simple(self.n, i), key.word)
        exps = list(key.exps)
        exps[i - 1], exps[i] = exps[i], exps[i - 1]
        s *= sign(self.A.p * key.exps[i - 1] * key.exps[i])
        return PolKey(word, tuple(exps)), s

    def s_action(self, i: int, f: Element[PolKey]) -> Element[PolKey]:
        """s_i acting as a superalgebra automorphism; x_j -> x_{s_i(j)}."""
        self._check_gap(i)
        return f.relabel(lambda key: self.s_key(i, key))

    # divided differences

    def _ddiff_generator(self, i: int, m: int) -> Element[PolKey]:
        if m == i:
            return self.tau_i(i).scale(sign(self.A.p + 1))
        if m == i + 1:
            return self.tau_i(i)
        return Element()

    def _ddiff_monomial_uncached(self, i: int, exps: Exponents) -> Element[PolKey]:
        # peel the leftmost x_m: d(x_m x^rest) = d(x_m) x^rest + x_{s_i m} d(x^rest)
        m = next((j for j, k in enumerate(exps) if k), None)
        if m is None:
            return Element()
        rest = list(exps)
        rest[m] -= 1
        rest = tuple(rest)
        strand = m + 1
        moved = i + 1 if strand == i else i if strand == i + 1 else strand
        return (
            self.mul(self._ddiff_generator(i, strand), self.monomial(rest))
            + self.mul(self.x(moved), self._ddiff_monomial(i, rest))
        )

    def ddiff(self, i: int, f: Element[PolKey]) -> Element[PolKey]:
        """The divided difference d_i, by peeling generators with the twisted Leibniz rule.

        d_i(a x^k) = s_i(a) d_i(x^k) since tokens are killed.
        """
        self._check_gap(i)
        self.check(f)
        self.tau_i(i)
        result = Element()
        for key, coeff in f.items():
            word, s = superpermute_word(self.A, simple(self.n, i), key.word)
            head = Element.monomial(PolKey(word, self.zero_exps), s * coeff)
            result = result + self.mul(head, self._ddiff_monomial(i, key.exps))
        return result

    def ddiff_closed_even(self, i: int, f: Element[PolKey]) -> Element[PolKey]:
        """tau_i * a * (g - s_i g) / (x_{i+1} - x_i) for an even trace."""
        if self.A.p:
            raise OddTraceParity(f"the closed divided-difference formula needs an even trace; {self.A.name} has p = 1")
        self._check_gap(i)
        self.check(f)
        tau_i = self.tau_i(i)
        result = Element()
        for key, coeff in f.items():
            swapped = list(key.exps)
            swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
            numerator: Dict[Exponents, Fraction] = {}
            for exps, c in ((key.exps, 1), (tuple(swapped), -1)):
                numerator[exps] = numerator.get(exps, 0) + c
            quotient = _divide_by_difference(
                {k: Fraction(c) for k, c in numerator.items() if c}, i
            )
            head = Element.monomial(PolKey(key.word, self.zero_exps), coeff)
            poly = Element({PolKey(unit_word(self.A, self.n), k): c for k, c in quotient.items()})
            result = result + self.mul(tau_i, self.mul(head, poly))
        return result

    # enumeration

    def monomial_keys(self, max_degree: int) -> Iterator[PolKey]:
        for exps in exponent_vectors(self.n, max_degree):
            for word in product(range(self.A.dim), repeat=self.n):
                yield PolKey(tuple(word), exps)


def _divide_by_difference(poly: Dict[Exponents, Fraction], i: int) -> Dict[Exponents, Fraction]:
    """Exact quotient of a commutative polynomial by x_{i+1} - x_i.

    Synthetic division in the variable x_{i+1} with root x_i.
    """
    var, root = i, i - 1
    by_power: Dict[int, Dict[Exponents, Fraction]] = {}
    for exps, c in poly.items():
        stripped = list(exps)
        stripped[var] = 0
        by_power.setdefault(exps[var], {})[tuple(stripped)] = c
    if not by_power:
        return {}
    top = max(by_power)

    def times_root(q: Dict[Exponents, Fraction]) -> Dict[Exponents, Fraction]:
        out = {}
        for exps, c in q.items():
            shifted = list(exps)
            shifted[root] += 1
            out[tuple(shifted)] = c
        return out

    def plus(a: Dict[Exponents, Fraction], b: Dict[Exponents, Fraction]) -> Dict[Exponents, Fraction]:
        out = dict(a)
        for exps, c in b.items():
            total = out.get(exps, 0) + c
            if total:
                out[exps] = total
            else:
                out.pop(exps, None)
        return out

    quotient: Dict[int, Dict[Exponents, Fraction]] = {}
    carry: Dict[Exponents, Fraction] = {}
    for power in range(top, 0, -1):
        carry = plus(by_power.get(power, {}), times_root(carry))
        quotient[power - 1] = carry
    remainder = plus(by_power.get(0, {}), times_root(carry))
    if remainder:
        raise NonDivisible(f"numerator is not divisible by x{i + 1} - x{i}")
    result: Dict[Exponents, Fraction] = {}
    for power, coeffs in quotient.items():
        for exps, c in coeffs.items():
            raised = list(exps)
            raised[var] = power
            result[tuple(raised)] = c
    return result
