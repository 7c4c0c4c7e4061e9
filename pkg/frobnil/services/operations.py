"""Operations shared by the CLI and the HTTP API."""

import logging
import time
from typing import List, Tuple

from frobnil.algebra.frobenius import FrobeniusSuperalgebra, dual_basis, nakayama, tau, teleporters
from frobnil.algebra.linear import Element
from frobnil.algebra.nilhecke import NilHeckeAlgebra
from frobnil.algebra.polynomial import PolKey, PolynomialAlgebra
from frobnil.algebra.relations import GeneratedAlgebra
from frobnil.config import settings
from frobnil.exceptions import IndexOutOfRange, SizeTooLarge
from frobnil.models import GradedTerm
from frobnil.textio.evaluator import Target, make_target, normalize
from frobnil.textio.printer import print_element


def check_size(n: int) -> None:
    if n < 1:
        raise IndexOutOfRange("n must be at least 1")
    if n > settings.MAX_STRANDS:
        raise SizeTooLarge(f"n = {n} exceeds FROBNIL_MAX_STRANDS = {settings.MAX_STRANDS}")


def normalize_expression(A: FrobeniusSuperalgebra, n: int, expr: str,
                         target: Target = Target.NILHECKE) -> Tuple[Element, GeneratedAlgebra]:
    """Normal form of expr in the target algebra over A."""
    check_size(n)
    start_time = time.time()
    algebra = make_target(Target(target), A, n)
    result = normalize(expr, algebra)
    logging.info(
        f"Normalized {expr!r} in {Target(target).value} over {A.name}, n={n}: "
        f"{len(result)} terms ({(time.time() - start_time) * 1000:.0f} ms)"
    )
    return result, algebra


def act_expression(A: FrobeniusSuperalgebra, n: int, expr: str, on: str) -> Element[PolKey]:
    """expr in NH_n(A) acting on the polynomial on."""
    check_size(n)
    nh = NilHeckeAlgebra(A, n)
    e = normalize(expr, nh)
    f = normalize(on, PolynomialAlgebra(A, n))
    return nh.act_pol(e, f)


def graded_terms(A: FrobeniusSuperalgebra, n: int, expr: str) -> List[GradedTerm]:
    """Z-degree and parity of every term of the nilHecke normal form."""
    check_size(n)
    nh = NilHeckeAlgebra(A, n)
    e = normalize(expr, nh)
    terms = []
    for key, coeff in e.sorted_items():
        term = print_element(Element.monomial(key, coeff), A)
        z_degree = nh.z_degree(key).z_degree if A.is_graded else None
        terms.append(GradedTerm(term=term, z_degree=z_degree, parity=nh.parity(key)))
    return terms


def dual_basis_lines(A: FrobeniusSuperalgebra) -> List[str]:
    return [f"{label}^v = {print_element(dual, A)}" for label, dual in zip(A.labels, dual_basis(A))]


def nakayama_lines(A: FrobeniusSuperalgebra) -> List[str]:
    return [f"psi({label}) = {print_element(image, A)}" for label, image in zip(A.labels, nakayama(A))]


def tau_lines(A: FrobeniusSuperalgebra) -> List[str]:
    """tau for a symmetric algebra, otherwise both teleporters."""
    if A.symmetric:
        return [print_element(tau(A), A)]
    first, second = teleporters(A)
    return [f"T1 = {print_element(first, A)}", f"T2 = {print_element(second, A)}"]
