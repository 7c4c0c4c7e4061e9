# Repositories package
from .base import AlgebraRepository
from .files import FileAlgebraRepository
from .memory import BuiltinAlgebraRepository

__all__ = ["AlgebraRepository", "BuiltinAlgebraRepository", "FileAlgebraRepository"]
