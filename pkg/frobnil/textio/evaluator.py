"""Evaluation of parsed expressions into a target algebra."""

from enum import Enum
from typing import Optional

from frobnil.algebra.cliffordodd import OddNilHeckeAlgebra
from frobnil.algebra.frobenius import FrobeniusSuperalgebra
from frobnil.algebra.linear import Element
from frobnil.algebra.nilcoxeter import NilCoxeterAlgebra
from frobnil.algebra.nilhecke import NilHeckeAlgebra
from frobnil.algebra.polynomial import PolynomialAlgebra
from frobnil.algebra.relations import GeneratedAlgebra
from frobnil.textio.parser import (
    ExprAST, Number, ParseContext, Power, Product, Sum, Symbol, parse,
)

__all__ = ["Target", "make_target", "context_for", "evaluate", "normalize"]


class Target(str, Enum):
    """Algebras an expression can be evaluated in."""
    NILHECKE = "nilhecke"
    POLYNOMIAL = "polynomial"
    NILCOXETER = "nilcoxeter"
    ODD_NILHECKE = "odd-nilhecke"


def make_target(target: Target, A: Optional[FrobeniusSuperalgebra], n: int) -> GeneratedAlgebra:
    if target == Target.POLYNOMIAL:
        return PolynomialAlgebra(A, n)
    if target == Target.NILCOXETER:
        return NilCoxeterAlgebra(A, n)
    if target == Target.ODD_NILHECKE:
        return OddNilHeckeAlgebra(n)
    return NilHeckeAlgebra(A, n)


def context_for(algebra: GeneratedAlgebra) -> ParseContext:
    return ParseContext(algebra.n, tuple(algebra.A.labels))


def evaluate(tree: ExprAST, algebra: GeneratedAlgebra) -> Element:
    """Reduce an expression tree to normal form in algebra."""
    if isinstance(tree, Number):
        return algebra.one().scale(tree.value)
    if isinstance(tree, Symbol):
        return algebra.generator(tree.gen)
    if isinstance(tree, Power):
        base = evaluate(tree.base, algebra)
        result = algebra.one()
        for _ in range(tree.exponent):
            result = algebra.mul(result, base)
        return result
    if isinstance(tree, Product):
        result = evaluate(tree.factors[0], algebra)
        for factor in tree.factors[1:]:
            result = algebra.mul(result, evaluate(factor, algebra))
        return result
    if isinstance(tree, Sum):
        total = Element()
        for s, term in tree.terms:
            total = total + evaluate(term, algebra).scale(s)
        return total
    raise TypeError(f"not an expression tree: {tree!r}")


def normalize(source: str, algebra: GeneratedAlgebra) -> Element:
    """Parse and evaluate source text in algebra."""
    return evaluate(parse(source, context_for(algebra)), algebra)
