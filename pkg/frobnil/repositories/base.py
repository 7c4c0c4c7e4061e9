"""Abstract repository of named Frobenius superalgebras."""

from abc import ABC, abstractmethod
from typing import List

from frobnil.algebra.frobenius import FrobeniusSuperalgebra


class AlgebraRepository(ABC):
    """Where the CLI and the API look algebras up by name."""

    @abstractmethod
    def get_names(self) -> List[str]:
        """Names of all algebras available without arguments."""
        pass

    @abstractmethod
    def get_by_name(self, name: str) -> FrobeniusSuperalgebra:
        """The algebra called ``name``; raises UnknownAlgebra."""
        pass

    def get_all(self) -> List[FrobeniusSuperalgebra]:
        return [self.get_by_name(name) for name in self.get_names()]
