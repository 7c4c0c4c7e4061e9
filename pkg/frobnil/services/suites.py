"""
Invariant suites run by ``frobnil verify``.

Every suite returns a CheckResult. Randomized suites draw from a
``random.Random`` seeded by the caller, so a report is reproducible from
its seed. Failures are recorded as text; where the identity can be written
in the expression grammar the text replays with ``frobnil normalize``.
"""

import logging
import random
import time
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Callable, List, Optional, Tuple

from frobnil.algebra.cliffordodd import OddNilHeckeAlgebra
from frobnil.algebra.frobenius import (
    FrobeniusSuperalgebra, TensorWord, builtin, change_basis, double_dual, dual_basis,
    nakayama, nakayama_inverse, place, superpermute, superpermute_along, tau,
    teleporters, tensor_mul, transport_words,
)
from frobnil.algebra.linear import Element, sign
from frobnil.algebra.nilcoxeter import NilCoxeterAlgebra, NilCoxKey
from frobnil.algebra.nilhecke import NilHeckeAlgebra, NilHeckeKey, PolNCKey
from frobnil.algebra.polynomial import Exponents, PolKey, PolynomialAlgebra, exponent_vectors
from frobnil.algebra.symgroup import (
    Permutation, all_permutations, all_reduced_words, compose, from_word, identity,
    length, reduced_word, REDUCED_WORDS_MAX_N,
)
from frobnil.exceptions import FrobnilError
from frobnil.models import CheckResult
from frobnil.textio.printer import print_element

__all__ = ["SuiteContext", "frobenius_suites", "algebra_suites", "clifford_suites", "is_clifford_odd"]

MAX_REPORTED_FAILURES = 20
BASIS_THEOREM_MAX_N = 3
BASIS_THEOREM_DEGREE = 3
SQUARE_DEGREE = 5
BRAID_DEGREE = 4
RANDOM_KEY_DEGREE = 2
BASIS_CHANGES = 10


class SuiteContext:
    """One (A, n) pair with its algebras built on first use."""

    def __init__(self, A: FrobeniusSuperalgebra, n: int, seed: int, degree_cap: int, samples: int):
        self.A = A
        self.n = n
        self.seed = seed
        self.degree_cap = degree_cap
        self.samples = samples
        self.rng = random.Random(seed)

    @cached_property
    def nc(self) -> NilCoxeterAlgebra:
        return NilCoxeterAlgebra(self.A, self.n)

    @cached_property
    def pol(self) -> PolynomialAlgebra:
        return PolynomialAlgebra(self.A, self.n)

    @cached_property
    def nh(self) -> NilHeckeAlgebra:
        return NilHeckeAlgebra(self.A, self.n)

    @cached_property
    def onh(self) -> OddNilHeckeAlgebra:
        return OddNilHeckeAlgebra(self.n, self.A)

    # random data

    def word(self) -> TensorWord:
        return tuple(self.rng.randrange(self.A.dim) for _ in range(self.n))

    def exps(self, max_degree: int = RANDOM_KEY_DEGREE) -> Exponents:
        exps = [0] * self.n
        for _ in range(self.rng.randint(0, max_degree)):
            exps[self.rng.randrange(self.n)] += 1
        return tuple(exps)

    def perm(self) -> Permutation:
        images = list(range(1, self.n + 1))
        self.rng.shuffle(images)
        return Permutation(tuple(images))

    def gap(self) -> int:
        return self.rng.randint(1, self.n - 1)

    def nh_key(self) -> NilHeckeKey:
        return NilHeckeKey(self.word(), self.exps(), self.perm())

    def pol_key(self, max_degree: int = RANDOM_KEY_DEGREE) -> PolKey:
        return PolKey(self.word(), self.exps(max_degree))

    def show(self, e: Element) -> str:
        return print_element(e, self.A)


class _Tally:
    """Counts instances and keeps the first failures of one suite."""

    def __init__(self, name: str, informational: bool = False):
        self.name = name
        self.informational = informational
        self.instances = 0
        self.failures: List[str] = []
        self.failed = 0
        self.start_time = time.time()

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.instances += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(describe())

    def result(self, detail: Optional[str] = None) -> CheckResult:
        elapsed_ms = (time.time() - self.start_time) * 1000
        logging.info(
            f"{self.name}: {self.instances - self.failed}/{self.instances} instances hold ({elapsed_ms:.0f} ms)"
        )
        return CheckResult(
            name=self.name,
            passed=self.failed == 0,
            instances=self.instances,
            failures=self.failures,
            informational=self.informational,
            detail=detail,
        )


def _on_factor(A: FrobeniusSuperalgebra, e: Element[int], factor: int) -> Element[TensorWord]:
    """e (x) 1 for factor 2, 1 (x) e for factor 1."""
    unit = A.unit
    return e.relabel(lambda k: ((unit, k) if factor == 2 else (k, unit), 1))


# Frobenius superalgebra suites

def suite_dual_basis(ctx: SuiteContext) -> CheckResult:
    A = ctx.A
    tally = _Tally("dual basis expansions")
    duals = dual_basis(A)
    for a in range(A.dim):
        left = Element({b: A.tr(A.mul_elements(duals[b], A.basis(a))) for b in range(A.dim)})
        right = Element()
        for b in range(A.dim):
            right = right + duals[b].scale(A.tr(A.mul(a, b)))
        tally.record(left == A.basis(a), lambda: f"sum tr(b^v {A.labels[a]}) b != {A.labels[a]}")
        tally.record(right == A.basis(a), lambda: f"sum tr({A.labels[a]} b) b^v != {A.labels[a]}")
    return tally.result()


def suite_double_dual(ctx: SuiteContext) -> CheckResult:
    """(b^v)^v = (-1)^(|b| + p|b|) psi^-1(b); psi is the identity for symmetric A."""
    A = ctx.A
    tally = _Tally("double dual")
    twice = double_dual(A)
    psi_inv = nakayama_inverse(A)
    for b in range(A.dim):
        expected = psi_inv[b].scale(sign(A.parity(b) + A.p * A.parity(b)))
        tally.record(twice[b] == expected, lambda: f"({A.labels[b]}^v)^v = {twice[b]!r}")
    return tally.result()


def suite_teleporters(ctx: SuiteContext) -> CheckResult:
    """Tokens slide through both teleporters, twisted by psi."""
    A = ctx.A
    tally = _Tally("teleporter slides")
    first, second = teleporters(A)
    psi = nakayama(A)
    for a in range(A.dim):
        s = sign(A.p * A.parity(a))
        high = _on_factor(A, A.basis(a), 2)
        low = _on_factor(A, A.basis(a), 1)
        label = A.labels[a]
        checks = [
            (tensor_mul(A, high, first), tensor_mul(A, first, low).scale(s), f"({label}(x)1) T1"),
            (tensor_mul(A, first, _on_factor(A, psi[a], 2)), tensor_mul(A, low, first).scale(s), f"T1 (psi({label})(x)1)"),
            (tensor_mul(A, second, high), tensor_mul(A, low, second).scale(s), f"T2 ({label}(x)1)"),
            (tensor_mul(A, high, second), tensor_mul(A, second, _on_factor(A, psi[a], 1)).scale(s), f"({label}(x)1) T2"),
        ]
        for lhs, rhs, what in checks:
            tally.record(lhs == rhs, lambda what=what: f"{what} does not slide")
    if A.symmetric:
        tally.record(second == first.scale(sign(A.p)), lambda: "the teleporters of a symmetric algebra differ by more than (-1)^p")
    return tally.result()


def suite_nakayama(ctx: SuiteContext) -> CheckResult:
    A = ctx.A
    tally = _Tally("nakayama automorphism")
    try:
        psi = nakayama(A)
    except FrobnilError as e:
        tally.record(False, lambda: str(e))
        return tally.result()
    for a, b in product(range(A.dim), repeat=2):
        lhs = A.tr(A.mul(a, b))
        rhs = sign(A.parity(a) * A.parity(b)) * A.tr(A.mul_elements(A.basis(b), psi[a]))
        tally.record(lhs == rhs, lambda: f"tr({A.labels[a]}*{A.labels[b]}) is not twisted by psi")
    if A.symmetric:
        for a in range(A.dim):
            tally.record(psi[a] == A.basis(a), lambda: f"psi({A.labels[a]}) != {A.labels[a]} on a symmetric algebra")
    return tally.result(detail=None if A.symmetric else "nonsymmetric: psi is nontrivial")


def _random_basis_change(ctx: SuiteContext) -> List[List[Fraction]]:
    A = ctx.A
    scales = [Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(3)]
    matrix = [[Fraction(int(i == k)) for k in range(A.dim)] for i in range(A.dim)]
    for i in range(A.dim):
        if i == A.unit:
            continue
        matrix[i][i] = ctx.rng.choice(scales)
        for k in range(i):
            if A.parity(k) == A.parity(i):
                matrix[i][k] = Fraction(ctx.rng.randint(-2, 2))
    return matrix


def suite_tau_basis_change(ctx: SuiteContext) -> CheckResult:
    """tau computed in a random new basis transports back to tau."""
    A = ctx.A
    tally = _Tally("tau basis independence")
    reference = tau(A)
    for _ in range(BASIS_CHANGES):
        matrix = _random_basis_change(ctx)
        moved = transport_words(matrix, tau(change_basis(A, matrix)))
        tally.record(moved == reference, lambda matrix=matrix: f"tau changes under the basis change {matrix}")
    return tally.result()


def suite_superpermute(ctx: SuiteContext) -> CheckResult:
    """Acting along any reduced word of w gives the action of w."""
    A, n = ctx.A, ctx.n
    tally = _Tally("superpermutation action")
    if n > REDUCED_WORDS_MAX_N:
        return tally.result(detail=f"skipped for n > {REDUCED_WORDS_MAX_N}")
    for w in all_permutations(n):
        words = sorted(all_reduced_words(w))
        e = Element.from_pairs((ctx.word(), ctx.rng.randint(1, 3)) for _ in range(3))
        reference = superpermute(A, w, e)
        for word in words:
            tally.record(
                superpermute_along(A, n, word, e) == reference,
                lambda word=word: f"reduced word {word} acts differently from {w}",
            )
    return tally.result()


def suite_reduced_words(ctx: SuiteContext) -> CheckResult:
    n = ctx.n
    tally = _Tally("reduced words")
    if n <= REDUCED_WORDS_MAX_N:
        for w in all_permutations(n):
            words = all_reduced_words(w)
            tally.record(min(words) == tuple(reduced_word(w)), lambda: f"canonical word of {w} is not minimal")
            for word in words:
                tally.record(
                    from_word(n, word) == w and len(word) == length(w),
                    lambda word=word: f"{word} is not a reduced word of {w}",
                )
    for _ in range(ctx.samples):
        w, v = ctx.perm(), ctx.perm()
        concatenated = reduced_word(w) + reduced_word(v)
        additive = length(compose(w, v)) == length(w) + length(v)
        tally.record(
            length(compose(w, v)) <= length(w) + length(v)
            and additive == (length(from_word(n, concatenated)) == len(concatenated)),
            lambda w=w, v=v: f"length is not subadditive on {w}, {v}",
        )
    return tally.result()


def frobenius_suites(ctx: SuiteContext) -> List[CheckResult]:
    suites = [
        suite_dual_basis(ctx),
        suite_double_dual(ctx),
        suite_nakayama(ctx),
        suite_teleporters(ctx),
        suite_superpermute(ctx),
    ]
    if ctx.A.symmetric:
        suites.append(suite_tau_basis_change(ctx))
    return suites


# nilCoxeter suites

def suite_nilcoxeter_rank(ctx: SuiteContext) -> CheckResult:
    """Products of tokens and crossings reach dim(A)^n n! distinct keys."""
    A, n, nc = ctx.A, ctx.n, ctx.nc
    tally = _Tally("nilcoxeter rank")
    reached = set()
    for w in all_permutations(n):
        u_w = nc.u_of_word(reduced_word(w))
        tally.record(u_w == nc.u_of(w), lambda w=w: f"u along the reduced word of {w} is not u_w")
        for word in product(range(A.dim), repeat=n):
            value = nc.mul(nc.tensor(Element.monomial(tuple(word))), u_w)
            tally.record(len(value) == 1, lambda word=word, w=w: f"{word} u_{w} is not a basis key")
            reached.update(value.keys())
    expected = A.dim ** n * len(list(all_permutations(n)))
    tally.record(len(reached) == expected, lambda: f"reached {len(reached)} keys, expected {expected}")
    return tally.result()


def _nc_key(ctx: SuiteContext) -> NilCoxKey:
    return NilCoxKey(ctx.word(), ctx.perm())


def suite_nilcoxeter_associativity(ctx: SuiteContext) -> CheckResult:
    nc = ctx.nc
    tally = _Tally("nilcoxeter associativity")
    for _ in range(max(100, ctx.samples // 2)):
        a, b, c = (Element.monomial(_nc_key(ctx)) for _ in range(3))
        tally.record(
            nc.mul(nc.mul(a, b), c) == nc.mul(a, nc.mul(b, c)),
            lambda a=a, b=b, c=c: f"({ctx.show(a)})*(({ctx.show(b)})*({ctx.show(c)})) - (({ctx.show(a)})*({ctx.show(b)}))*({ctx.show(c)})",
        )
    return tally.result()


def suite_nilcoxeter_subalgebras(ctx: SuiteContext) -> CheckResult:
    nc, n = ctx.nc, ctx.n
    tally = _Tally("nilcoxeter subalgebras")
    e = identity(n)
    for _ in range(max(100, ctx.samples // 2)):
        words = nc.mul(nc.tensor(Element.monomial(ctx.word())), nc.tensor(Element.monomial(ctx.word())))
        tally.record(all(key.perm == e for key in words.keys()), lambda: "tokens produced a crossing")
        crossings = nc.mul(nc.u_of(ctx.perm()), nc.u_of(ctx.perm()))
        unit = (ctx.A.unit,) * n
        tally.record(all(key.word == unit for key in crossings.keys()), lambda: "crossings produced a token")
    return tally.result()


# polynomial suites

def suite_polynomial_ring(ctx: SuiteContext) -> CheckResult:
    pol = ctx.pol
    tally = _Tally("polynomial associativity")
    one = pol.one()
    for _ in range(ctx.samples):
        a, b, c = (Element.monomial(ctx.pol_key()) for _ in range(3))
        tally.record(
            pol.mul(pol.mul(a, b), c) == pol.mul(a, pol.mul(b, c)),
            lambda a=a, b=b, c=c: f"({ctx.show(a)})*(({ctx.show(b)})*({ctx.show(c)})) - (({ctx.show(a)})*({ctx.show(b)}))*({ctx.show(c)})",
        )
        tally.record(pol.mul(one, a) == a == pol.mul(a, one), lambda a=a: f"1 is not a unit for {ctx.show(a)}")
    return tally.result()


def suite_s_action(ctx: SuiteContext) -> CheckResult:
    pol = ctx.pol
    tally = _Tally("symmetric group action on polynomials")
    if ctx.n < 2:
        return tally.result(detail="no transpositions for n = 1")
    for _ in range(ctx.samples):
        i = ctx.gap()
        f, g = Element.monomial(ctx.pol_key()), Element.monomial(ctx.pol_key())
        tally.record(pol.s_action(i, pol.s_action(i, f)) == f, lambda f=f, i=i: f"s{i} is not an involution on {ctx.show(f)}")
        tally.record(
            pol.s_action(i, pol.mul(f, g)) == pol.mul(pol.s_action(i, f), pol.s_action(i, g)),
            lambda f=f, g=g, i=i: f"s{i} is not multiplicative on {ctx.show(f)}, {ctx.show(g)}",
        )
    return tally.result()


def suite_leibniz(ctx: SuiteContext) -> CheckResult:
    """d_i(fg) = d_i(f) g + s_i(f) d_i(g)."""
    pol = ctx.pol
    tally = _Tally("twisted Leibniz rule")
    for _ in range(ctx.samples):
        i = ctx.gap()
        f, g = Element.monomial(ctx.pol_key(3)), Element.monomial(ctx.pol_key(3))
        lhs = pol.ddiff(i, pol.mul(f, g))
        rhs = pol.mul(pol.ddiff(i, f), g) + pol.mul(pol.s_action(i, f), pol.ddiff(i, g))
        tally.record(lhs == rhs, lambda f=f, g=g, i=i: f"d{i}(({ctx.show(f)})*({ctx.show(g)}))")
    return tally.result()


def _all_pol_keys(ctx: SuiteContext, max_degree: int):
    return [Element.monomial(key) for key in ctx.pol.monomial_keys(max_degree)]


def suite_closed_ddiff(ctx: SuiteContext) -> CheckResult:
    """Peeled and closed divided differences agree for an even trace."""
    pol = ctx.pol
    tally = _Tally("closed divided difference")
    for f in _all_pol_keys(ctx, ctx.degree_cap):
        for i in range(1, ctx.n):
            tally.record(pol.ddiff(i, f) == pol.ddiff_closed_even(i, f), lambda f=f, i=i: f"d{i}({ctx.show(f)})")
    return tally.result()


def suite_symmetric_killed(ctx: SuiteContext) -> CheckResult:
    """d_i kills f + s_i(f)."""
    pol = ctx.pol
    tally = _Tally("invariants killed by divided differences")
    for f in _all_pol_keys(ctx, ctx.degree_cap):
        for i in range(1, ctx.n):
            invariant = f + pol.s_action(i, f)
            tally.record(pol.ddiff_closed_even(i, invariant).is_zero(), lambda f=f, i=i: f"d{i}({ctx.show(f)} + s{i}(...))")
    return tally.result()


def suite_ddiff_squares(ctx: SuiteContext) -> CheckResult:
    """d_i d_i = 0 and d_i s_i = -s_i d_i."""
    pol = ctx.pol
    tally = _Tally("divided difference squares")
    for f in _all_pol_keys(ctx, min(ctx.degree_cap, SQUARE_DEGREE)):
        for i in range(1, ctx.n):
            d = pol.ddiff(i, f)
            tally.record(pol.ddiff(i, d).is_zero(), lambda f=f, i=i: f"d{i}(d{i}({ctx.show(f)}))")
            tally.record(
                pol.ddiff(i, pol.s_action(i, f)) == -pol.s_action(i, d),
                lambda f=f, i=i: f"d{i}(s{i}({ctx.show(f)}))",
            )
    return tally.result()


def suite_ddiff_braid(ctx: SuiteContext) -> CheckResult:
    """Measured only: d_i d_{i+1} d_i against d_{i+1} d_i d_{i+1}."""
    pol = ctx.pol
    tally = _Tally("divided difference braid relation", informational=True)
    for f in _all_pol_keys(ctx, min(ctx.degree_cap, BRAID_DEGREE)):
        for i in range(1, ctx.n - 1):
            lhs = pol.ddiff(i, pol.ddiff(i + 1, pol.ddiff(i, f)))
            rhs = pol.ddiff(i + 1, pol.ddiff(i, pol.ddiff(i + 1, f)))
            tally.record(lhs == rhs, lambda f=f, i=i: f"braid of d{i}, d{i + 1} on {ctx.show(f)}")
    return tally.result()


# nilHecke suites

def suite_nilhecke_associativity(ctx: SuiteContext) -> CheckResult:
    nh = ctx.nh
    tally = _Tally("nilhecke associativity")
    for _ in range(ctx.samples):
        a, b, c = (Element.monomial(ctx.nh_key()) for _ in range(3))
        tally.record(
            nh.mul(nh.mul(a, b), c) == nh.mul(a, nh.mul(b, c)),
            lambda a=a, b=b, c=c: f"({ctx.show(a)})*(({ctx.show(b)})*({ctx.show(c)})) - (({ctx.show(a)})*({ctx.show(b)}))*({ctx.show(c)})",
        )
    return tally.result()


def suite_basis_theorem(ctx: SuiteContext) -> CheckResult:
    """(f, w) -> f u_w hits every key once; bt_factor inverts bt_expand."""
    nh = ctx.nh
    tally = _Tally("basis theorem")
    if ctx.n > BASIS_THEOREM_MAX_N:
        return tally.result(detail=f"exhaustive check limited to n <= {BASIS_THEOREM_MAX_N}")
    seen = set()
    for key in nh.basis_keys(min(ctx.degree_cap, BASIS_THEOREM_DEGREE)):
        pol_key = PolKey(key.word, key.exps)
        expanded = nh.bt_expand(Element.monomial(PolNCKey(pol_key, key.perm)))
        tally.record(expanded == Element.monomial(key), lambda key=key: f"f u_w for {key} is not a basis key")
        factored = nh.bt_factor(expanded)
        tally.record(
            factored == [(Element.monomial(pol_key), key.perm)],
            lambda key=key: f"bt_factor does not invert bt_expand on {key}",
        )
        seen.add(key)
    tally.record(len(seen) == tally.instances // 2, lambda: "basis keys repeat")
    return tally.result()


def suite_crossing_commutator(ctx: SuiteContext) -> CheckResult:
    """u_i f = s_i(f) u_i + d_i(f)."""
    nh, pol = ctx.nh, ctx.pol
    tally = _Tally("crossing commutator")
    for f in _all_pol_keys(ctx, ctx.degree_cap):
        for i in range(1, ctx.n):
            lhs = nh.mul(nh.u(i), nh.embed_pol(f))
            rhs = nh.mul(nh.embed_pol(pol.s_action(i, f)), nh.u(i)) + nh.embed_pol(pol.ddiff(i, f))
            tally.record(lhs == rhs, lambda f=f, i=i: f"u{i}*{ctx.show(f)}")
    return tally.result()


def suite_module_actions(ctx: SuiteContext) -> CheckResult:
    """Both polynomial representations are modules, and the counit links them."""
    nh = ctx.nh
    tally = _Tally("module actions")
    for _ in range(ctx.samples):
        e1, e2 = Element.monomial(ctx.nh_key()), Element.monomial(ctx.nh_key())
        f = Element.monomial(ctx.pol_key(3))
        t = Element.monomial(PolNCKey(ctx.pol_key(3), ctx.perm()))
        product_ = nh.mul(e1, e2)
        tally.record(
            nh.act_polnc(product_, t) == nh.act_polnc(e1, nh.act_polnc(e2, t)),
            lambda e1=e1, e2=e2: f"({ctx.show(e1)})*({ctx.show(e2)}) on P (x) N",
        )
        tally.record(
            nh.act_pol(product_, f) == nh.act_pol(e1, nh.act_pol(e2, f)),
            lambda e1=e1, e2=e2, f=f: f"({ctx.show(e1)})*({ctx.show(e2)}) on {ctx.show(f)}",
        )
        lifted = Element.monomial(PolNCKey(next(iter(f.keys())), identity(ctx.n)))
        tally.record(
            nh.act_pol(e1, f) == nh.counit(nh.act_polnc(e1, lifted)),
            lambda e1=e1, f=f: f"{ctx.show(e1)} acts differently on {ctx.show(f)} and its lift",
        )
    return tally.result()


def suite_omega_lr(ctx: SuiteContext) -> CheckResult:
    nh = ctx.nh
    tally = _Tally("left-right symmetry")
    for _ in range(max(100, ctx.samples // 2)):
        a, b = Element.monomial(ctx.nh_key()), Element.monomial(ctx.nh_key())
        image = nh.omega_lr(a)
        tally.record(len(image) == 1, lambda a=a: f"omega_lr({ctx.show(a)}) is not a single key")
        tally.record(
            nh.omega_lr(nh.mul(a, b)) == nh.mul(image, nh.omega_lr(b)),
            lambda a=a, b=b: f"omega_lr(({ctx.show(a)})*({ctx.show(b)}))",
        )
    return tally.result()


def suite_omega_ud(ctx: SuiteContext) -> CheckResult:
    """omega_ud(ab) = (-1)^(|a||b|) omega_ud(b) omega_ud(a); exact for supercommutative A."""
    nh = ctx.nh
    tally = _Tally("up-down symmetry", informational=not ctx.A.is_supercommutative())
    for _ in range(max(100, ctx.samples // 2)):
        ka, kb = ctx.nh_key(), ctx.nh_key()
        a, b = Element.monomial(ka), Element.monomial(kb)
        s = sign(nh.parity(ka) * nh.parity(kb))
        tally.record(
            nh.omega_ud(nh.mul(a, b)) == nh.mul(nh.omega_ud(b), nh.omega_ud(a)).scale(s),
            lambda a=a, b=b: f"omega_ud(({ctx.show(a)})*({ctx.show(b)}))",
        )
    detail = None if not tally.informational else f"{ctx.A.name} is not supercommutative"
    return tally.result(detail=detail)


def suite_parity(ctx: SuiteContext) -> CheckResult:
    nh = ctx.nh
    tally = _Tally("parity of products")
    for _ in range(max(100, ctx.samples // 2)):
        ka, kb = ctx.nh_key(), ctx.nh_key()
        expected = (nh.parity(ka) + nh.parity(kb)) % 2
        value = nh.mul(Element.monomial(ka), Element.monomial(kb))
        tally.record(
            all(nh.parity(key) == expected for key in value.keys()),
            lambda ka=ka, kb=kb: f"({ctx.show(Element.monomial(ka))})*({ctx.show(Element.monomial(kb))}) is not homogeneous",
        )
    return tally.result()


def suite_z_degree(ctx: SuiteContext) -> CheckResult:
    """deg(ab) = deg(a) + deg(b); a hard check only when d = 0.

    With deg u = d-2 and deg x = d+2 the dot-crossing relation has degree 2d
    on the left and deg tau = d on the right, so for d != 0 the products
    that rewrite through tau are measured and reported but cannot fail a run.
    """
    nh = ctx.nh
    d = ctx.A.d
    tally = _Tally("Z-degree of products", informational=d != 0)
    for _ in range(max(100, ctx.samples // 2)):
        ka, kb = ctx.nh_key(), ctx.nh_key()
        expected = nh.z_degree(ka).z_degree + nh.z_degree(kb).z_degree
        value = nh.mul(Element.monomial(ka), Element.monomial(kb))
        tally.record(
            all(nh.z_degree(key).z_degree == expected for key in value.keys()),
            lambda ka=ka, kb=kb: f"({ctx.show(Element.monomial(ka))})*({ctx.show(Element.monomial(kb))}) mixes degrees",
        )
    detail = None if d == 0 else f"informational: d = {d} and the grading is additive only for d = 0"
    return tally.result(detail=detail)


def suite_witness(ctx: SuiteContext) -> CheckResult:
    """Words a with a tau_1 = 0 give nonzero a u_1 acting by zero on polynomials."""
    A, n, nh = ctx.A, ctx.n, ctx.nh
    tally = _Tally("non-faithfulness witnesses")
    tau_1 = place(A, n, 1, nh.tau)
    monomials = [
        Element.monomial(PolKey(tuple(word), exps))
        for exps in exponent_vectors(n, ctx.degree_cap)
        for word in product(range(A.dim), repeat=n)
    ]
    witnesses = []
    for word in product(range(A.dim), repeat=n):
        if tensor_mul(A, Element.monomial(tuple(word)), tau_1).is_zero():
            witnesses.append(tuple(word))
    for word in witnesses:
        e = nh.mul(nh.tensor(Element.monomial(word)), nh.u(1))
        tally.record(not e.is_zero(), lambda e=e: f"{ctx.show(e)} vanishes")
        for f in monomials:
            tally.record(nh.act_pol(e, f).is_zero(), lambda e=e, f=f: f"{ctx.show(e)} acts on {ctx.show(f)}")
    return tally.result(detail=f"{len(witnesses)} witness words")


def algebra_suites(ctx: SuiteContext) -> List[CheckResult]:
    """Every suite that applies to (A, n), in a fixed order."""
    A, n = ctx.A, ctx.n
    suites = [
        suite_reduced_words(ctx),
        ctx.nc.verify_relations(),
        suite_nilcoxeter_rank(ctx),
        suite_nilcoxeter_associativity(ctx),
        suite_nilcoxeter_subalgebras(ctx),
        suite_polynomial_ring(ctx),
        suite_s_action(ctx),
    ]
    if not A.symmetric:
        suites.append(CheckResult(
            name="nilhecke suites", passed=True, informational=True,
            detail=f"skipped: {A.name} is not symmetric",
        ))
        return suites
    if n >= 2:
        suites += [suite_leibniz(ctx), suite_ddiff_squares(ctx)]
        if A.p == 0:
            suites.append(suite_closed_ddiff(ctx))
            if A.is_supercommutative():
                suites.append(suite_symmetric_killed(ctx))
        if n >= 3:
            suites.append(suite_ddiff_braid(ctx))
    suites += [
        ctx.nh.verify_relations(),
        suite_nilhecke_associativity(ctx),
        suite_basis_theorem(ctx),
        suite_module_actions(ctx),
        suite_parity(ctx),
    ]
    if n >= 2:
        suites += [suite_crossing_commutator(ctx), suite_omega_lr(ctx), suite_omega_ud(ctx)]
        if A.is_commutative() and A.is_purely_even():
            suites.append(suite_witness(ctx))
    if A.is_graded:
        suites.append(suite_z_degree(ctx))
    return suites


# Clifford bridge suites

def is_clifford_odd(A: FrobeniusSuperalgebra) -> bool:
    return A.structurally_equal(builtin("clifford_odd"))


def _onh_keys(ctx: SuiteContext) -> Tuple[list, list]:
    degree = min(ctx.degree_cap, BASIS_THEOREM_DEGREE)
    return list(ctx.onh.nh.basis_keys(degree)), list(ctx.onh.basis_keys(degree))


def suite_psi_roundtrip(ctx: SuiteContext) -> CheckResult:
    onh = ctx.onh
    tally = _Tally("clifford isomorphism round trip")
    if ctx.n > BASIS_THEOREM_MAX_N:
        return tally.result(detail=f"exhaustive check limited to n <= {BASIS_THEOREM_MAX_N}")
    nh_keys, onh_keys = _onh_keys(ctx)
    for key in nh_keys:
        e = Element.monomial(key)
        tally.record(onh.psi_inv(onh.psi(e)) == e, lambda e=e: f"psi_inv(psi({ctx.show(e)}))")
    for key in onh_keys:
        e = Element.monomial(key)
        tally.record(onh.psi(onh.psi_inv(e)) == e, lambda e=e: f"psi(psi_inv({print_element(e)}))")
    degree = min(ctx.degree_cap, BASIS_THEOREM_DEGREE)
    rank = 2 ** ctx.n * len(list(exponent_vectors(ctx.n, degree))) * len(list(all_permutations(ctx.n)))
    tally.record(
        len(nh_keys) == len(onh_keys) == rank,
        lambda: f"truncated ranks differ: {len(nh_keys)} and {len(onh_keys)}",
    )
    return tally.result()


def suite_psi_homomorphism(ctx: SuiteContext) -> CheckResult:
    """psi is multiplicative and keeps parity."""
    onh, nh = ctx.onh, ctx.onh.nh
    tally = _Tally("clifford isomorphism products")
    for _ in range(ctx.samples):
        ka, kb = ctx.nh_key(), ctx.nh_key()
        a, b = Element.monomial(ka), Element.monomial(kb)
        tally.record(
            onh.psi(nh.mul(a, b)) == onh.mul(onh.psi(a), onh.psi(b)),
            lambda a=a, b=b: f"psi(({ctx.show(a)})*({ctx.show(b)}))",
        )
        tally.record(
            all(onh.parity(key) == nh.parity(ka) for key in onh.psi(a).keys()),
            lambda a=a: f"psi({ctx.show(a)}) changes parity",
        )
    return tally.result()


def clifford_suites(ctx: SuiteContext) -> List[CheckResult]:
    return [
        ctx.onh.verify_relations(),
        suite_psi_roundtrip(ctx),
        suite_psi_homomorphism(ctx),
    ]
