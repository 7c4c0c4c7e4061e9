"""
Reading and writing user-defined Frobenius superalgebras.

The format is line oriented, ``#`` starts a comment::

    frobnil-algebra v1
    name = cyclic_group2
    unit = 1

    [basis]
    # label parity [degree]
    1 even
    g even

    [trace]
    parity = even
    1 = 1

    [mult]
    g*g = 1

Products with the unit are implied. Coefficients are exact rationals
written ``p/q``; a right-hand side is a sum of ``coeff*label`` terms and a
bare rational stands for a multiple of the unit. In ``[trace]`` the keys
``parity`` and ``degree`` set the trace parity and Z-degree, every other
key is a basis label.
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Tuple, Union

from pydantic import ValidationError

from frobnil.algebra.frobenius import FrobeniusSuperalgebra
from frobnil.algebra.linear import Element
from frobnil.exceptions import ConfigError, ParseError, ValidationFailed
from frobnil.models import AlgebraConfig, BasisEntry, MultEntry

__all__ = ["HEADER", "parse_config", "build_algebra", "load_config", "dump_config", "parse_element"]

HEADER = "frobnil-algebra v1"
SECTIONS = ("basis", "trace", "mult")

_LABEL = r"[A-Za-z0-9_']+"
_PARITIES = {"even": 0, "0": 0, "odd": 1, "1": 1}
_TERM_RE = re.compile(r"([+-])?\s*([^\s+-][^+-]*)")


def _rational(text: str, line: int) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{text.strip()!r} is not a rational", line) from None


def _key_value(text: str, line: int) -> Tuple[str, str]:
    if "=" not in text:
        raise ParseError("expected 'key = value'", line)
    key, value = text.split("=", 1)
    return key.strip(), value.strip()


def _parse_rhs(text: str, labels: List[str], unit: str, line: int) -> Dict[str, str]:
    terms: Dict[str, Fraction] = {}
    consumed = 0
    for match in _TERM_RE.finditer(text):
        if text[consumed:match.start()].strip():
            raise ParseError(f"cannot read {text!r}", line)
        consumed = match.end()
        s = -1 if match.group(1) == "-" else 1
        body = match.group(2).strip()
        if "*" in body:
            coeff_text, label = (part.strip() for part in body.split("*", 1))
            coeff = _rational(coeff_text, line)
        elif body in labels:
            coeff, label = Fraction(1), body
        else:
            coeff, label = _rational(body, line), unit
        if label not in labels:
            raise ParseError(f"undeclared basis label {label!r}", line)
        terms[label] = terms.get(label, Fraction(0)) + s * coeff
    if not terms and text.strip():
        raise ParseError(f"cannot read {text!r}", line)
    return {label: str(c) for label, c in terms.items() if c != 0}


def parse_config(text: str) -> AlgebraConfig:
    """Parse config text into an AlgebraConfig; errors carry the line number."""
    lines = text.splitlines()
    body = [(number, raw.split("#", 1)[0].strip()) for number, raw in enumerate(lines, start=1)]
    body = [(number, content) for number, content in body if content]
    if not body or body[0][1] != HEADER:
        raise ParseError(f"the first line must be {HEADER!r}", body[0][0] if body else 1)

    header: Dict[str, str] = {}
    sections: Dict[str, List[Tuple[int, str]]] = {name: [] for name in SECTIONS}
    current = None
    for number, content in body[1:]:
        section = re.fullmatch(r"\[(\w+)\]", content)
        if section:
            current = section.group(1)
            if current not in SECTIONS:
                raise ParseError(f"unknown section [{current}]", number)
            continue
        if current is None:
            key, value = _key_value(content, number)
            header[key] = value
        else:
            sections[current].append((number, content))

    for key in ("name", "unit"):
        if key not in header:
            raise ParseError(f"missing '{key} = ...' before the first section", 1)

    basis: List[BasisEntry] = []
    for number, content in sections["basis"]:
        fields = content.split()
        if len(fields) not in (2, 3) or not re.fullmatch(_LABEL, fields[0]) or fields[1] not in _PARITIES:
            raise ParseError("expected 'label parity [degree]'", number)
        degree = None
        if len(fields) == 3:
            try:
                degree = int(fields[2])
            except ValueError:
                raise ParseError(f"{fields[2]!r} is not an integer degree", number) from None
        basis.append(BasisEntry(label=fields[0], parity=_PARITIES[fields[1]], degree=degree))
    labels = [entry.label for entry in basis]
    if not labels:
        raise ParseError("the [basis] section is empty", 1)
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate basis label", sections["basis"][0][0])
    if len({entry.degree is None for entry in basis}) > 1:
        raise ParseError("declare a degree for every basis element or for none", sections["basis"][0][0])
    unit = header["unit"]
    if unit not in labels:
        raise ParseError(f"unit {unit!r} is not a declared basis label", 1)

    trace: Dict[str, str] = {}
    trace_parity, trace_degree = 0, None
    for number, content in sections["trace"]:
        key, value = _key_value(content, number)
        if key == "parity":
            if value not in _PARITIES:
                raise ParseError(f"unknown parity {value!r}", number)
            trace_parity = _PARITIES[value]
        elif key == "degree":
            try:
                trace_degree = int(value)
            except ValueError:
                raise ParseError(f"{value!r} is not an integer degree", number) from None
        elif key in labels:
            trace[key] = str(_rational(value, number))
        else:
            raise ParseError(f"undeclared basis label {key!r}", number)

    mult: List[MultEntry] = []
    seen = set()
    for number, content in sections["mult"]:
        key, value = _key_value(content, number)
        pair = re.fullmatch(rf"({_LABEL})\s*\*\s*({_LABEL})", key)
        if pair is None:
            raise ParseError("expected 'left*right = ...'", number)
        left, right = pair.groups()
        for label in (left, right):
            if label not in labels:
                raise ParseError(f"undeclared basis label {label!r}", number)
        if (left, right) in seen:
            raise ParseError(f"{left}*{right} is defined twice", number)
        seen.add((left, right))
        mult.append(MultEntry(left=left, right=right, terms=_parse_rhs(value, labels, unit, number)))

    try:
        return AlgebraConfig(
            name=header["name"], basis=basis, unit=unit, trace=trace,
            trace_parity=trace_parity, trace_degree=trace_degree, mult=mult,
        )
    except ValidationError as e:
        raise ParseError(str(e), 1) from None


def build_algebra(config: AlgebraConfig) -> FrobeniusSuperalgebra:
    """Construct and validate; a failed axiom raises ValidationFailed with the report."""
    labels = [entry.label for entry in config.basis]
    index = {label: i for i, label in enumerate(labels)}
    unit = index[config.unit]
    mult: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for i in range(len(labels)):
        mult[(unit, i)] = {i: Fraction(1)}
        mult[(i, unit)] = {i: Fraction(1)}
    for entry in config.mult:
        mult[(index[entry.left], index[entry.right])] = {
            index[label]: Fraction(c) for label, c in entry.terms.items()
        }
    degrees = None
    if config.basis[0].degree is not None:
        degrees = [entry.degree for entry in config.basis]
    algebra = FrobeniusSuperalgebra(
        config.name,
        labels,
        [entry.parity for entry in config.basis],
        mult,
        unit,
        [Fraction(config.trace.get(label, "0")) for label in labels],
        config.trace_parity,
        degrees=degrees,
        trace_degree=config.trace_degree,
        check=False,
    )
    if not algebra.report.passed:
        failed = [check.name for check in algebra.report.checks if not check.passed and check.name != "supersymmetry"]
        raise ValidationFailed(f"{config.name} fails {', '.join(failed)}", algebra.report)
    return algebra


def load_config(path: Union[str, Path]) -> FrobeniusSuperalgebra:
    """Read, parse and validate an algebra config file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}") from e
    algebra = build_algebra(parse_config(text))
    logging.info(f"Loaded algebra {algebra.name} (dim {algebra.dim}) from {path}")
    return algebra


def dump_config(A: FrobeniusSuperalgebra) -> str:
    """Config text that loads back to an algebra structurally equal to A."""
    out = [HEADER, f"name = {A.name}", f"unit = {A.labels[A.unit]}", "", "[basis]"]
    for i, label in enumerate(A.labels):
        parity = "odd" if A.parity(i) else "even"
        degree = f" {A.degrees[i]}" if A.degrees is not None else ""
        out.append(f"{label} {parity}{degree}")
    out += ["", "[trace]", f"parity = {'odd' if A.p else 'even'}"]
    if A.trace_degree is not None:
        out.append(f"degree = {A.trace_degree}")
    out += [f"{label} = {A.trace[i]}" for i, label in enumerate(A.labels) if A.trace[i] != 0]
    out += ["", "[mult]"]
    for i in range(A.dim):
        for j in range(A.dim):
            if A.unit in (i, j):
                continue
            terms = [
                f"{'-' if c < 0 else '+'} {abs(c)}*{A.labels[k]}" for k, c in A.mul(i, j).sorted_items()
            ]
            rhs = " ".join(terms).lstrip("+ ") if terms else "0"
            out.append(f"{A.labels[i]}*{A.labels[j]} = {rhs}")
    return "\n".join(out) + "\n"


def parse_element(text: str, A: FrobeniusSuperalgebra) -> Element[int]:
    """A linear combination of basis labels, e.g. ``1/2*g - 1``."""
    terms = _parse_rhs(text, list(A.labels), A.labels[A.unit], 1)
    return Element({A.index(label): Fraction(c) for label, c in terms.items()})
