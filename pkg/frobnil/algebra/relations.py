"""
Formal relation instances over generator symbols.

A relation is a linear combination of generator products that must vanish.
Instances are evaluated in any algebra exposing ``generator``, ``mul`` and
``one``, and render as text accepted by the expression parser, so a failing
instance can be replayed with ``frobnil normalize``.
"""

import logging
import time
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Protocol, Sequence, Tuple

from frobnil.algebra.linear import Element, ScalarLike
from frobnil.models import CheckResult

__all__ = ["Gen", "Relation", "GeneratedAlgebra", "relation", "evaluate", "check_relations", "render_product"]


class Gen(NamedTuple):
    """A single generator: kind is one of "a", "x", "u", "c", "y", "v"."""
    kind: str
    index: int
    label: str = ""     # basis label, tokens only

    def render(self) -> str:
        if self.kind == "a":
            return f"{self.label}[{self.index}]"
        if self.kind == "c":
            return f"c[{self.index}]"
        return f"{self.kind}{self.index}"


class Relation(NamedTuple):
    name: str
    terms: Tuple[Tuple[Fraction, Tuple[Gen, ...]], ...]

    def render(self) -> str:
        parts: List[str] = []
        for coeff, gens in self.terms:
            if coeff == 0:
                continue
            body = render_product(gens)
            magnitude = abs(coeff)
            if magnitude != 1:
                body = f"{magnitude}*{body}" if gens else str(magnitude)
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts) if parts else "0"


class GeneratedAlgebra(Protocol):
    def generator(self, gen: Gen) -> Element: ...

    def mul(self, e1: Element, e2: Element) -> Element: ...

    def one(self) -> Element: ...


def render_product(gens: Sequence[Gen]) -> str:
    return "*".join(g.render() for g in gens) if gens else "1"


def relation(name: str, *terms: Tuple[ScalarLike, Sequence[Gen]]) -> Relation:
    return Relation(name, tuple((Fraction(c), tuple(gens)) for c, gens in terms))


def evaluate(rel: Relation, algebra: GeneratedAlgebra) -> Element:
    total = Element()
    for coeff, gens in rel.terms:
        value = algebra.one()
        for g in gens:
            value = algebra.mul(value, algebra.generator(g))
        total = total + value.scale(coeff)
    return total


def check_relations(name: str, relations: Iterable[Relation], algebra: GeneratedAlgebra) -> CheckResult:
    """Evaluate every instance; failures are listed as replayable expressions."""
    start_time = time.time()
    failures: List[str] = []
    count = 0
    for rel in relations:
        count += 1
        if not evaluate(rel, algebra).is_zero():
            failures.append(f"{rel.name}: {rel.render()}")
    elapsed_ms = (time.time() - start_time) * 1000
    logging.info(f"{name}: {count - len(failures)}/{count} relation instances vanish ({elapsed_ms:.0f} ms)")
    return CheckResult(name=name, passed=not failures, instances=count, failures=failures)
