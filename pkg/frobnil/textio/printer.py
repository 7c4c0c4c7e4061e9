"""Deterministic text rendering of elements of every supported algebra."""

from fractions import Fraction
from typing import List, Optional, Protocol, Sequence, Tuple

from frobnil.algebra.linear import Element
from frobnil.algebra.symgroup import reduced_word


class Labelled(Protocol):
    labels: Tuple[str, ...]
    unit: int


def _sort_key(key) -> tuple:
    if isinstance(key, int):
        return (key,)
    # reading order: tensor factor n first
    if isinstance(key, tuple) and key and isinstance(key[0], int):
        return (tuple(reversed(key)),)
    parts = []
    for field in ("word", "cword"):
        if hasattr(key, field):
            parts.append(tuple(reversed(getattr(key, field))))
    if hasattr(key, "pol"):
        parts.append(tuple(reversed(key.pol.word)))
        parts.append(key.pol.exps)
    if hasattr(key, "exps"):
        parts.append(key.exps)
    if hasattr(key, "perm"):
        parts.append(key.perm.images)
    return tuple(parts)


def _word_parts(word: Sequence[int], algebra: Optional[Labelled]) -> List[str]:
    unit = algebra.unit if algebra is not None else 0
    parts = []
    for strand in range(len(word), 0, -1):
        b = word[strand - 1]
        if b != unit:
            label = algebra.labels[b] if algebra is not None else str(b)
            parts.append(f"{label}[{strand}]")
    return parts


def _dot_parts(exps: Sequence[int], symbol: str) -> List[str]:
    parts = []
    for strand, power in enumerate(exps, start=1):
        if power == 1:
            parts.append(f"{symbol}{strand}")
        elif power > 1:
            parts.append(f"{symbol}{strand}^{power}")
    return parts


def print_monomial(key, algebra: Optional[Labelled] = None) -> str:
    """One basis key as a product of generators; the unit key prints as "1"."""
    if isinstance(key, int):
        # a basis element of A itself
        return algebra.labels[key] if algebra is not None else f"b{key}"
    if isinstance(key, tuple) and key and isinstance(key[0], int):
        parts = _word_parts(key, algebra)
    elif hasattr(key, "cword"):
        parts = [f"c[{j}]" for j in range(len(key.cword), 0, -1) if key.cword[j - 1]]
        parts += _dot_parts(key.exps, "y")
        parts += [f"v{i}" for i in reduced_word(key.perm)]
    elif hasattr(key, "pol"):
        parts = _word_parts(key.pol.word, algebra) + _dot_parts(key.pol.exps, "x")
        parts += [f"u{i}" for i in reduced_word(key.perm)]
    else:
        parts = _word_parts(key.word, algebra)
        if hasattr(key, "exps"):
            parts += _dot_parts(key.exps, "x")
        if hasattr(key, "perm"):
            parts += [f"u{i}" for i in reduced_word(key.perm)]
    return "*".join(parts) if parts else "1"


def _format_term(coeff: Fraction, body: str, first: bool) -> str:
    magnitude = abs(coeff)
    if body == "1":
        text = str(magnitude)
    elif magnitude == 1:
        text = body
    else:
        text = f"{magnitude}*{body}"
    if first:
        return f"-{text}" if coeff < 0 else text
    return f"- {text}" if coeff < 0 else f"+ {text}"


def print_element(e: Element, algebra: Optional[Labelled] = None) -> str:
    """Render e with keys in reading order; the zero element prints as "0"."""
    if e.is_zero():
        return "0"
    terms = [
        _format_term(coeff, print_monomial(key, algebra), first=index == 0)
        for index, (key, coeff) in enumerate(e.sorted_items(_sort_key))
    ]
    return " ".join(terms)
