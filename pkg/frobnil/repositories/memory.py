"""Built-in algebras, constructed in memory."""

from typing import List

from frobnil.algebra.frobenius import BUILTIN_NAMES, FrobeniusSuperalgebra, builtin
from .base import AlgebraRepository

LISTED_CYCLIC_ORDERS = (2, 3)


class BuiltinAlgebraRepository(AlgebraRepository):
    """ground, both Clifford algebras, dual numbers and cyclic group algebras.

    Any ``cyclic_group(m)`` resolves; only small orders are listed.
    """

    def get_names(self) -> List[str]:
        names = [name for name in BUILTIN_NAMES if name != "cyclic_group"]
        return names + [f"cyclic_group({m})" for m in LISTED_CYCLIC_ORDERS]

    def get_by_name(self, name: str) -> FrobeniusSuperalgebra:
        return builtin(name)
