"""
Frobenius superalgebras: validation, dual bases, the teleporter element tau,
the Nakayama automorphism, tensor powers with Koszul signs and the
superpermutation action of S_n.

Basis elements are referred to by their index. A tensor word is a tuple of
indices; entry 0 is factor 1, the rightmost tensor factor, so the word
(a1, a2) reads a2 (x) a1.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from frobnil.algebra.linear import (
    Element, Parity, ScalarLike, bilinear, invert_matrix, mat_vec, sign,
)
from frobnil.algebra.symgroup import Permutation, from_word
from frobnil.exceptions import (
    AlgebraMismatch, GramSingular, IndexOutOfRange, LengthMismatch, NotAssociative,
    NotAutomorphism, NotSymmetric, NotUnital, SingularMatrix, UnknownAlgebra,
    ValidationFailed,
)
from frobnil.models import CheckResult, ValidationReport

__all__ = [
    "FrobeniusSuperalgebra", "TensorWord", "validate", "dual_basis", "tau",
    "nakayama", "is_symmetric", "teleporters", "tensor_mul", "superpermute",
    "superpermute_word", "superpermute_along", "builtin", "BUILTIN_NAMES",
    "unit_word", "token", "place", "word_parity", "change_basis",
    "transport_words", "nakayama_inverse", "trace_changed",
]

TensorWord = Tuple[int, ...]
StructureConstants = Mapping[Tuple[int, int], Mapping[int, ScalarLike]]

BUILTIN_NAMES = ("ground", "clifford_odd", "clifford_even", "dual_numbers", "cyclic_group")


class FrobeniusSuperalgebra:
    """A finite-dimensional superalgebra with a homogeneous trace.

    Construction validates the axioms and raises the matching typed error
    (NotAssociative, NotUnital, GramSingular, ValidationFailed) unless
    ``check=False``. Supersymmetry of the trace is recorded, not enforced.
    """

    def __init__(
        self,
        name: str,
        labels: Sequence[str],
        parities: Sequence[int],
        mult: StructureConstants,
        unit: int,
        trace: Sequence[ScalarLike],
        trace_parity: int,
        degrees: Optional[Sequence[int]] = None,
        trace_degree: Optional[int] = None,
        check: bool = True,
    ):
        self.name = name
        self.labels: Tuple[str, ...] = tuple(labels)
        self.parities: Tuple[Parity, ...] = tuple(Parity.of(p) for p in parities)
        self.unit = unit
        self.trace: Tuple[Fraction, ...] = tuple(Fraction(t) for t in trace)
        self.trace_parity = Parity.of(trace_parity)
        self.degrees: Optional[Tuple[int, ...]] = tuple(degrees) if degrees is not None else None
        self.trace_degree = trace_degree
        size = len(self.labels)
        self._mult: Tuple[Tuple[Element[int], ...], ...] = tuple(
            tuple(Element(dict(mult.get((i, j), {}))) for j in range(size))
            for i in range(size)
        )
        self._word_products: Dict[Tuple[TensorWord, TensorWord], Element[TensorWord]] = {}
        self._duals: Optional[Tuple[Element[int], ...]] = None
        self._gram_inverse: Optional[List[List[Fraction]]] = None
        self._gram_error: Optional[str] = None
        self._nakayama: Optional[Tuple[Element[int], ...]] = None
        self.report = validate(self)
        self.symmetric = self.report.symmetric
        if check:
            _raise_for_failure(self.report)

    # basic data

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def p(self) -> int:
        return int(self.trace_parity)

    @property
    def is_graded(self) -> bool:
        return self.degrees is not None and self.trace_degree is not None

    @property
    def d(self) -> int:
        """The integer d with tr of Z-degree -d."""
        return -(self.trace_degree or 0)

    def parity(self, i: int) -> int:
        return int(self.parities[i])

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise IndexOutOfRange(f"{label!r} is not a basis label of {self.name}") from None

    def basis(self, i: int) -> Element[int]:
        return Element.monomial(i)

    def mul(self, i: int, j: int) -> Element[int]:
        return self._mult[i][j]

    def mul_elements(self, e1: Element[int], e2: Element[int]) -> Element[int]:
        return bilinear(self.mul, e1, e2)

    def tr(self, e: Element[int]) -> Fraction:
        return sum((c * self.trace[i] for i, c in e.items()), Fraction(0))

    def is_commutative(self) -> bool:
        return all(
            self._mult[i][j] == self._mult[j][i] for i in range(self.dim) for j in range(self.dim)
        )

    def is_purely_even(self) -> bool:
        return all(p == Parity.EVEN for p in self.parities)

    def is_supercommutative(self) -> bool:
        """ab = (-1)^(|a||b|) ba on all basis pairs."""
        return all(
            self._mult[i][j] == self._mult[j][i].scale(sign(self.parity(i) * self.parity(j)))
            for i in range(self.dim)
            for j in range(self.dim)
        )

    def gram(self) -> List[List[Fraction]]:
        return [[self.tr(self._mult[i][j]) for j in range(self.dim)] for i in range(self.dim)]

    def gram_inverse(self) -> List[List[Fraction]]:
        if self._gram_inverse is None:
            if self._gram_error is not None:
                raise GramSingular(self._gram_error)
            try:
                self._gram_inverse = invert_matrix(self.gram())
            except SingularMatrix as e:
                self._gram_error = f"trace form of {self.name} is degenerate: {e}"
                raise GramSingular(self._gram_error) from None
        return self._gram_inverse

    def word_product(self, u: TensorWord, v: TensorWord) -> Element[TensorWord]:
        """Product of two basis tensor words with the Koszul sign."""
        cached = self._word_products.get((u, v))
        if cached is not None:
            return cached
        if len(u) != len(v):
            raise LengthMismatch(f"tensor words of lengths {len(u)} and {len(v)}")
        # b_j passes every a_i standing to its right (i < j)
        exponent = 0
        odd_seen = 0
        for a, b in zip(u, v):
            exponent += odd_seen * self.parity(b)
            odd_seen += self.parity(a)
        s = sign(exponent)
        factors = [self._mult[a][b] for a, b in zip(u, v)]
        pairs = []
        for combo in product(*(f.items() for f in factors)):
            coeff = Fraction(s)
            for _, c in combo:
                coeff *= c
            pairs.append((tuple(k for k, _ in combo), coeff))
        result = Element.from_pairs(pairs)
        self._word_products[(u, v)] = result
        return result

    def structurally_equal(self, other: "FrobeniusSuperalgebra") -> bool:
        return (
            self.labels == other.labels
            and self.parities == other.parities
            and self.unit == other.unit
            and self.trace == other.trace
            and self.trace_parity == other.trace_parity
            and self._mult == other._mult
        )

    def __repr__(self) -> str:
        return f"FrobeniusSuperalgebra({self.name!r}, dim={self.dim}, p={self.p})"


def _label_product(A: FrobeniusSuperalgebra, *indices: int) -> str:
    return "*".join(A.labels[i] for i in indices)


def validate(A: FrobeniusSuperalgebra) -> ValidationReport:
    """Check every axiom of a Frobenius superalgebra and report each one."""
    dim = A.dim
    rng = range(dim)
    checks: List[CheckResult] = []

    failures = []
    for i, j, k in product(rng, rng, rng):
        left = A.mul_elements(A.mul(i, j), A.basis(k))
        right = A.mul_elements(A.basis(i), A.mul(j, k))
        if left != right:
            failures.append(f"({_label_product(A, i, j)})*{A.labels[k]} != {A.labels[i]}*({_label_product(A, j, k)})")
    checks.append(CheckResult(name="associativity", passed=not failures, instances=dim ** 3, failures=failures))

    failures = []
    if not 0 <= A.unit < dim:
        failures.append(f"unit index {A.unit} out of range")
    else:
        for i in rng:
            if A.mul(A.unit, i) != A.basis(i) or A.mul(i, A.unit) != A.basis(i):
                failures.append(f"{A.labels[A.unit]}*{A.labels[i]} != {A.labels[i]}")
    checks.append(CheckResult(name="unitality", passed=not failures, instances=dim, failures=failures))

    failures = []
    for i, j in product(rng, rng):
        expected = A.parity(i) ^ A.parity(j)
        if any(A.parity(k) != expected for k in A.mul(i, j).keys()):
            failures.append(f"{_label_product(A, i, j)} is not of parity {expected}")
    checks.append(CheckResult(name="parity_additivity", passed=not failures, instances=dim ** 2, failures=failures))

    failures = [
        f"tr({A.labels[i]}) != 0 but {A.labels[i]} has parity {A.parity(i)}"
        for i in rng
        if A.trace[i] != 0 and A.parity(i) != A.p
    ]
    checks.append(CheckResult(name="trace_homogeneity", passed=not failures, instances=dim, failures=failures))

    failures = []
    for i, j in product(rng, rng):
        lhs = A.tr(A.mul(i, j))
        rhs = sign(A.parity(i) * A.parity(j)) * A.tr(A.mul(j, i))
        if lhs != rhs:
            failures.append(f"tr({_label_product(A, i, j)}) != (-1)^(|a||b|) tr({_label_product(A, j, i)})")
    checks.append(CheckResult(name="supersymmetry", passed=not failures, instances=dim ** 2, failures=failures))
    symmetric = not failures

    failures = []
    try:
        A.gram_inverse()
    except GramSingular as e:
        failures.append(str(e))
    checks.append(CheckResult(name="gram_invertible", passed=not failures, instances=1, failures=failures))

    if A.degrees is not None:
        failures = []
        if len(A.degrees) != dim:
            failures.append("one degree per basis element is required")
        else:
            for i, j in product(rng, rng):
                if any(A.degrees[k] != A.degrees[i] + A.degrees[j] for k in A.mul(i, j).keys()):
                    failures.append(f"{_label_product(A, i, j)} does not add degrees")
            if A.trace_degree is not None:
                failures.extend(
                    f"tr({A.labels[i]}) != 0 off degree {-A.trace_degree}"
                    for i in rng
                    if A.trace[i] != 0 and A.degrees[i] != -A.trace_degree
                )
        checks.append(CheckResult(name="grading", passed=not failures, instances=dim ** 2, failures=failures))

    return ValidationReport(algebra=A.name, checks=checks, symmetric=symmetric)


def _raise_for_failure(report: ValidationReport) -> None:
    errors = {
        "associativity": NotAssociative,
        "unitality": NotUnital,
        "gram_invertible": GramSingular,
    }
    for check in report.checks:
        if check.passed or check.name == "supersymmetry":
            continue
        message = f"{report.algebra}: {check.name} fails: {'; '.join(check.failures[:3])}"
        error = errors.get(check.name)
        if error is not None:
            raise error(message)
        raise ValidationFailed(message, report)


def dual_basis(A: FrobeniusSuperalgebra) -> Tuple[Element[int], ...]:
    """b -> b^v with tr(a^v b) = delta(a, b); row a of the inverse Gram matrix."""
    if A._duals is None:
        inverse = A.gram_inverse()
        A._duals = tuple(
            Element({k: inverse[a][k] for k in range(A.dim)}) for a in range(A.dim)
        )
    return A._duals


def double_dual(A: FrobeniusSuperalgebra) -> Tuple[Element[int], ...]:
    """(b^v)^v, from an independent solve against the basis {b^v}."""
    duals = dual_basis(A)
    gram = [[A.tr(A.mul_elements(a, b)) for b in duals] for a in duals]
    try:
        inverse = invert_matrix(gram)
    except SingularMatrix as e:
        raise GramSingular(str(e)) from None
    result = []
    for a in range(A.dim):
        acc = Element()
        for k in range(A.dim):
            acc = acc + duals[k].scale(inverse[a][k])
        result.append(acc)
    return tuple(result)


def _require_symmetric(A: FrobeniusSuperalgebra, what: str) -> None:
    if not A.symmetric:
        raise NotSymmetric(f"{what} needs a symmetric trace; {A.name} is not symmetric")


def tau(A: FrobeniusSuperalgebra) -> Element[TensorWord]:
    """Sum over b of (-1)^(p|b|) b (x) b^v, with b on factor 2."""
    _require_symmetric(A, "tau")
    return teleporters(A)[0]


def teleporters(A: FrobeniusSuperalgebra) -> Tuple[Element[TensorWord], Element[TensorWord]]:
    """The two teleporter elements; the first is tau when A is symmetric.

    The first is sum (-1)^(p|b|) b (x) b^v, the second
    sum (-1)^(p|b|) (-1)^(|b|(|b|+p)) b^v (x) b.
    """
    duals = dual_basis(A)
    first, second = [], []
    for b in range(A.dim):
        s1 = sign(A.p * A.parity(b))
        s2 = s1 * sign(A.parity(b) * (A.parity(b) + A.p))
        for v, c in duals[b].items():
            first.append(((v, b), s1 * c))
            second.append(((b, v), s2 * c))
    return Element.from_pairs(first), Element.from_pairs(second)


def nakayama(A: FrobeniusSuperalgebra) -> Tuple[Element[int], ...]:
    """Images psi(b_i) with tr(ab) = (-1)^(|a||b|) tr(b psi(a)).

    Raises NotAutomorphism if the solved map is not multiplicative.
    """
    if A._nakayama is not None:
        return A._nakayama
    gram = A.gram()
    inverse = A.gram_inverse()
    images = []
    for i in range(A.dim):
        rhs = [sign(A.parity(i) * A.parity(j)) * gram[i][j] for j in range(A.dim)]
        images.append(Element(dict(enumerate(mat_vec(inverse, rhs)))))
    psi = tuple(images)
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = A.mul(i, j).map_keys(lambda k: psi[k])
            if lhs != A.mul_elements(psi[i], psi[j]):
                raise NotAutomorphism(
                    f"psi({_label_product(A, i, j)}) != psi({A.labels[i]})psi({A.labels[j]}) in {A.name}"
                )
    if psi[A.unit] != A.basis(A.unit):
        raise NotAutomorphism(f"psi does not fix the unit of {A.name}")
    A._nakayama = psi
    return psi


def is_symmetric(A: FrobeniusSuperalgebra) -> bool:
    """Supersymmetric trace with trivial Nakayama automorphism."""
    psi = nakayama(A)
    return A.symmetric and all(psi[i] == A.basis(i) for i in range(A.dim))


def nakayama_inverse(A: FrobeniusSuperalgebra) -> Tuple[Element[int], ...]:
    psi = nakayama(A)
    matrix = [[psi[i].coefficient(k) for k in range(A.dim)] for i in range(A.dim)]
    inverse = invert_matrix(matrix)
    return tuple(Element({k: inverse[i][k] for k in range(A.dim)}) for i in range(A.dim))


def trace_changed(A: FrobeniusSuperalgebra, u: Element[int]) -> FrobeniusSuperalgebra:
    """The same superalgebra with the trace a -> tr(a u).

    u must be homogeneous; it is invertible exactly when the new trace
    form is nondegenerate, otherwise GramSingular is raised.
    """
    parities = {A.parity(k) for k in u.keys()}
    if len(parities) != 1:
        raise AlgebraMismatch("the trace-change element must be nonzero and homogeneous")
    return FrobeniusSuperalgebra(
        f"{A.name}*u",
        A.labels,
        A.parities,
        {(i, j): dict(A.mul(i, j).items()) for i in range(A.dim) for j in range(A.dim)},
        A.unit,
        [A.tr(A.mul_elements(A.basis(i), u)) for i in range(A.dim)],
        (A.p + parities.pop()) % 2,
    )


# tensor powers

def word_parity(A: FrobeniusSuperalgebra, word: TensorWord) -> int:
    return sum(A.parity(i) for i in word) % 2


def unit_word(A: FrobeniusSuperalgebra, n: int) -> TensorWord:
    return (A.unit,) * n


def token(A: FrobeniusSuperalgebra, n: int, strand: int, b: int) -> TensorWord:
    """The word with basis element b on the given strand and units elsewhere."""
    if not 1 <= strand <= n:
        raise IndexOutOfRange(f"strand {strand} is outside 1..{n}")
    word = list(unit_word(A, n))
    word[strand - 1] = b
    return tuple(word)


def place(A: FrobeniusSuperalgebra, n: int, i: int, two: Element[TensorWord]) -> Element[TensorWord]:
    """Put a two-factor element on strands i (its factor 1) and i+1."""
    if not 1 <= i < n:
        raise IndexOutOfRange(f"strands {i}, {i + 1} are outside 1..{n}")

    def _placed(key: TensorWord) -> Tuple[TensorWord, int]:
        word = list(unit_word(A, n))
        word[i - 1], word[i] = key
        return tuple(word), 1

    return two.relabel(_placed)


def _check_lengths(e1: Element[TensorWord], e2: Element[TensorWord]) -> None:
    lengths = {len(k) for k in e1.keys()} | {len(k) for k in e2.keys()}
    if len(lengths) > 1:
        raise LengthMismatch(f"tensor words of lengths {sorted(lengths)} cannot be multiplied")


def tensor_mul(A: FrobeniusSuperalgebra, u: Element[TensorWord], v: Element[TensorWord]) -> Element[TensorWord]:
    """Componentwise product with the Koszul sign (-1)^(sum_{i<j} |a_i||b_j|)."""
    _check_lengths(u, v)
    return bilinear(A.word_product, u, v)


def superpermute_word(A: FrobeniusSuperalgebra, w: Permutation, word: TensorWord) -> Tuple[TensorWord, int]:
    """Move the factor at position j to position w(j); sign from odd inversions."""
    if w.n != len(word):
        raise LengthMismatch(f"permutation of size {w.n} on a word of length {len(word)}")
    moved = [0] * len(word)
    for j, b in enumerate(word):
        moved[w.images[j] - 1] = b
    exponent = 0
    for j in range(len(word)):
        if not A.parity(word[j]):
            continue
        for k in range(j + 1, len(word)):
            if w.images[j] > w.images[k]:
                exponent += A.parity(word[k])
    return tuple(moved), sign(exponent)


def superpermute(A: FrobeniusSuperalgebra, w: Permutation, u: Element[TensorWord]) -> Element[TensorWord]:
    return u.relabel(lambda word: superpermute_word(A, w, word))


def superpermute_along(
    A: FrobeniusSuperalgebra, n: int, word: Sequence[int], u: Element[TensorWord]
) -> Element[TensorWord]:
    """Act by s_{i1} ... s_{ik}, one transposition at a time (rightmost first)."""
    for i in reversed(list(word)):
        u = superpermute(A, from_word(n, [i]), u)
    return u


# change of basis

def change_basis(A: FrobeniusSuperalgebra, matrix: Sequence[Sequence[ScalarLike]]) -> FrobeniusSuperalgebra:
    """Transport A to the basis b'_i = sum_k matrix[i][k] b_k.

    The matrix must be invertible, parity preserving and keep the unit row.
    """
    g = [[Fraction(x) for x in row] for row in matrix]
    g_inv = invert_matrix(g)
    dim = A.dim
    for i in range(dim):
        for k in range(dim):
            if g[i][k] != 0 and A.parity(i) != A.parity(k):
                raise AlgebraMismatch("basis change must preserve parity")

    def _to_new(e: Element[int]) -> Dict[int, Fraction]:
        row = [e.coefficient(k) for k in range(dim)]
        return {j: sum(row[k] * g_inv[k][j] for k in range(dim)) for j in range(dim)}

    old = [Element({k: g[i][k] for k in range(dim)}) for i in range(dim)]
    mult = {
        (i, j): _to_new(A.mul_elements(old[i], old[j]))
        for i in range(dim)
        for j in range(dim)
    }
    trace = [A.tr(old[i]) for i in range(dim)]
    return FrobeniusSuperalgebra(
        f"{A.name}'",
        [f"{label}'" for label in A.labels],
        [A.parity(i) for i in range(dim)],
        mult,
        A.unit,
        trace,
        A.p,
    )


def transport_words(matrix: Sequence[Sequence[ScalarLike]], e: Element[TensorWord]) -> Element[TensorWord]:
    """Rewrite an element given in the basis {b'} in terms of the original basis."""
    g = [[Fraction(x) for x in row] for row in matrix]

    def _expand(word: TensorWord) -> Element[TensorWord]:
        pairs = []
        for combo in product(*(range(len(g)) for _ in word)):
            coeff = Fraction(1)
            for i, k in zip(word, combo):
                coeff *= g[i][k]
            pairs.append((combo, coeff))
        return Element.from_pairs(pairs)

    return e.map_keys(_expand)


# built-in algebras

def _ground() -> FrobeniusSuperalgebra:
    return FrobeniusSuperalgebra(
        "ground", ["1"], [0], {(0, 0): {0: 1}}, 0, [1], 0, degrees=[0], trace_degree=0,
    )


def _clifford(odd_trace: bool) -> FrobeniusSuperalgebra:
    mult = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}}
    if odd_trace:
        return FrobeniusSuperalgebra(
            "clifford_odd", ["1", "c"], [0, 1], mult, 0, [0, 1], 1, degrees=[0, 0], trace_degree=0,
        )
    return FrobeniusSuperalgebra("clifford_even", ["1", "c"], [0, 1], mult, 0, [1, 0], 0)


def _dual_numbers() -> FrobeniusSuperalgebra:
    mult = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}
    return FrobeniusSuperalgebra(
        "dual_numbers", ["1", "y"], [0, 0], mult, 0, [0, 1], 0, degrees=[0, 2], trace_degree=-2,
    )


def _cyclic_group(m: int) -> FrobeniusSuperalgebra:
    if m < 1:
        raise IndexOutOfRange(f"cyclic_group needs m >= 1, got {m}")
    labels = ["1"] + ["g" if k == 1 else f"g{k}" for k in range(1, m)]
    mult = {(a, b): {(a + b) % m: 1} for a in range(m) for b in range(m)}
    return FrobeniusSuperalgebra(
        f"cyclic_group({m})", labels, [0] * m, mult, 0, [1] + [0] * (m - 1), 0,
    )


_BUILTIN_CACHE: Dict[str, FrobeniusSuperalgebra] = {}


def builtin(name: str, m: Optional[int] = None) -> FrobeniusSuperalgebra:
    """A named built-in algebra; cyclic groups as ``cyclic_group(m)`` or with m."""
    key = name if m is None else f"{name}({m})"
    if key in _BUILTIN_CACHE:
        return _BUILTIN_CACHE[key]
    if key.startswith("cyclic_group(") and key.endswith(")"):
        try:
            order = int(key[len("cyclic_group("):-1])
        except ValueError:
            raise IndexOutOfRange(f"bad cyclic group order in {name!r}") from None
        algebra = _cyclic_group(order)
    elif key == "ground":
        algebra = _ground()
    elif key == "clifford_odd":
        algebra = _clifford(odd_trace=True)
    elif key == "clifford_even":
        algebra = _clifford(odd_trace=False)
    elif key == "dual_numbers":
        algebra = _dual_numbers()
    else:
        raise UnknownAlgebra(f"unknown built-in algebra {name!r}")
    logging.debug(f"Constructed built-in algebra {key}")
    _BUILTIN_CACHE[key] = algebra
    return algebra
