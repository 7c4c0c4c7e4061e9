"""Algebras read from config files, falling back to the built-ins."""

import logging
from pathlib import Path
from typing import Dict, List, Optional

from frobnil.algebra.frobenius import FrobeniusSuperalgebra
from frobnil.config import settings
from frobnil.exceptions import FrobnilError, UnknownAlgebra
from frobnil.textio.algebra_file import load_config
from .base import AlgebraRepository
from .memory import BuiltinAlgebraRepository

SUFFIX = ".alg"


class FileAlgebraRepository(AlgebraRepository):
    """Every ``*.alg`` file in a directory, keyed by the name it declares."""

    def __init__(self, directory: str = None, fallback: Optional[AlgebraRepository] = None):
        self.directory = Path(directory or settings.ALGEBRA_DIR)
        self.fallback = fallback or BuiltinAlgebraRepository()
        self._algebras: Optional[Dict[str, FrobeniusSuperalgebra]] = None

    def _load(self) -> Dict[str, FrobeniusSuperalgebra]:
        if self._algebras is not None:
            return self._algebras
        self._algebras = {}
        if not self.directory.is_dir():
            logging.warning(f"Algebra directory {self.directory} not found; only built-ins are available")
            return self._algebras
        reserved = set(self.fallback.get_names())
        for path in sorted(self.directory.glob(f"*{SUFFIX}")):
            try:
                algebra = load_config(path)
            except FrobnilError as e:
                logging.warning(f"Skipping {path}: {e}")
                continue
            if algebra.name in reserved or algebra.name in self._algebras:
                logging.warning(f"Skipping {path}: the name {algebra.name!r} is already taken")
                continue
            self._algebras[algebra.name] = algebra
        return self._algebras

    def reload(self) -> None:
        self._algebras = None

    def get_names(self) -> List[str]:
        return self.fallback.get_names() + list(self._load())

    def get_by_name(self, name: str) -> FrobeniusSuperalgebra:
        algebras = self._load()
        if name in algebras:
            return algebras[name]
        try:
            return self.fallback.get_by_name(name)
        except UnknownAlgebra:
            raise UnknownAlgebra(f"no built-in or configured algebra is named {name!r}") from None
