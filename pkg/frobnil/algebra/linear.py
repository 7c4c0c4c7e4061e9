"""
Exact scalars, parities and finitely supported linear combinations.

An Element is a map from hashable, totally ordered keys to nonzero
Fractions. Zero coefficients are pruned on construction, so two elements
are equal exactly when their term maps are equal.

>>> e = Element({"a": Fraction(1, 2)})
>>> (e + e).coefficient("a")
Fraction(1, 1)
>>> (e - e).is_zero()
True
"""

from enum import IntEnum
from fractions import Fraction
from typing import (
    Callable, Dict, Generic, Hashable, Iterable, Iterator, List, Mapping,
    Optional, Tuple, TypeVar, Union,
)

from frobnil.exceptions import SingularMatrix

__all__ = [
    "Scalar", "Parity", "Element", "sign", "add", "scale", "is_zero",
    "bilinear", "invert_matrix", "mat_vec",
]

# exact rationals are the only ground ring
Scalar = Fraction
ScalarLike = Union[Fraction, int]

K = TypeVar("K", bound=Hashable)
K2 = TypeVar("K2", bound=Hashable)
K3 = TypeVar("K3", bound=Hashable)


class Parity(IntEnum):
    """Z/2 grading; addition is mod 2."""
    EVEN = 0
    ODD = 1

    @classmethod
    def of(cls, value: int) -> "Parity":
        return cls(value % 2)

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__


def sign(exponent: int) -> int:
    """(-1)^exponent."""
    return -1 if exponent % 2 else 1


class Element(Generic[K]):
    """Immutable sparse linear combination with exact coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[K, ScalarLike]] = None):
        self._terms: Dict[K, Fraction] = {}
        self._hash: Optional[int] = None
        if terms:
            for key, coeff in terms.items():
                if coeff != 0:
                    self._terms[key] = Fraction(coeff)

    @classmethod
    def zero(cls) -> "Element[K]":
        return cls()

    @classmethod
    def monomial(cls, key: K, coeff: ScalarLike = 1) -> "Element[K]":
        return cls({key: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[K, ScalarLike]]) -> "Element[K]":
        """Sum (key, coefficient) pairs, merging repeated keys."""
        acc: Dict[K, Fraction] = {}
        for key, coeff in pairs:
            _accumulate(acc, key, coeff)
        return cls._wrap(acc)

    @classmethod
    def _wrap(cls, acc: Dict[K, Fraction]) -> "Element[K]":
        # acc is already pruned; take ownership without copying
        result = cls.__new__(cls)
        result._terms = acc
        result._hash = None
        return result

    # read access

    def coefficient(self, key: K) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def items(self) -> Iterable[Tuple[K, Fraction]]:
        return self._terms.items()

    def keys(self) -> Iterable[K]:
        return self._terms.keys()

    def sorted_items(self, key: Optional[Callable[[K], object]] = None) -> List[Tuple[K, Fraction]]:
        if key is None:
            return sorted(self._terms.items(), key=lambda item: item[0])
        return sorted(self._terms.items(), key=lambda item: key(item[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[K]:
        return iter(self._terms)

    def __contains__(self, key: object) -> bool:
        return key in self._terms

    # vector space structure

    def __add__(self, other: "Element[K]") -> "Element[K]":
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            _accumulate(acc, key, coeff)
        return Element._wrap(acc)

    def __sub__(self, other: "Element[K]") -> "Element[K]":
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            _accumulate(acc, key, -coeff)
        return Element._wrap(acc)

    def __neg__(self) -> "Element[K]":
        return Element._wrap({key: -coeff for key, coeff in self._terms.items()})

    def scale(self, c: ScalarLike) -> "Element[K]":
        if c == 0:
            return Element()
        c = Fraction(c)
        return Element._wrap({key: c * coeff for key, coeff in self._terms.items()})

    def __rmul__(self, c: ScalarLike) -> "Element[K]":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def map_keys(self, fn: Callable[[K], "Element[K2]"]) -> "Element[K2]":
        """Extend a key-level map linearly: sum of c * fn(key)."""
        acc: Dict[K2, Fraction] = {}
        for key, coeff in self._terms.items():
            for image_key, image_coeff in fn(key).items():
                _accumulate(acc, image_key, coeff * image_coeff)
        return Element._wrap(acc)

    def relabel(self, fn: Callable[[K], Tuple[K2, int]]) -> "Element[K2]":
        """Apply a signed key bijection fn(key) -> (new_key, +-1)."""
        acc: Dict[K2, Fraction] = {}
        for key, coeff in self._terms.items():
            new_key, s = fn(key)
            _accumulate(acc, new_key, s * coeff)
        return Element._wrap(acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{key!r}: {coeff}" for key, coeff in self.sorted_items())
        return f"Element({{{body}}})"


def _accumulate(acc: Dict, key, coeff) -> None:
    if coeff == 0:
        return
    total = acc.get(key, 0) + coeff
    if total == 0:
        del acc[key]
    else:
        acc[key] = Fraction(total)


def add(e1: Element[K], e2: Element[K]) -> Element[K]:
    """Coefficientwise sum."""
    return e1 + e2


def scale(c: ScalarLike, e: Element[K]) -> Element[K]:
    """Multiply every coefficient by c."""
    return e.scale(c)


def is_zero(e: Element) -> bool:
    return e.is_zero()


def bilinear(
    product: Callable[[K, K2], Element[K3]],
    e1: Element[K],
    e2: Element[K2],
) -> Element[K3]:
    """Extend a product of keys bilinearly to elements."""
    acc: Dict[K3, Fraction] = {}
    for k1, c1 in e1.items():
        for k2, c2 in e2.items():
            c = c1 * c2
            for key, coeff in product(k1, k2).items():
                _accumulate(acc, key, c * coeff)
    return Element._wrap(acc)


def invert_matrix(matrix: List[List[ScalarLike]]) -> List[List[Fraction]]:
    """Exact Gauss-Jordan inverse of a square matrix of rationals.

    Raises SingularMatrix when no pivot can be found in some column.
    """
    size = len(matrix)
    rows = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
        for i, row in enumerate(matrix)
    ]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"matrix is singular in column {col + 1}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return [row[size:] for row in rows]


def mat_vec(matrix: List[List[Fraction]], vector: List[ScalarLike]) -> List[Fraction]:
    return [sum((a * Fraction(b) for a, b in zip(row, vector)), Fraction(0)) for row in matrix]
