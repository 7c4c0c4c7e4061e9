"""Dependency injection for the FastAPI application."""

from typing import Optional

from frobnil.repositories.base import AlgebraRepository
from frobnil.repositories.files import FileAlgebraRepository
from frobnil.services.cache import RedisCache
from frobnil.services.verification import VerificationService

# Singleton instances
_repository_instance: Optional[AlgebraRepository] = None
_cache_instance: Optional[RedisCache] = None
_verification_service_instance: Optional[VerificationService] = None


def get_algebra_repository() -> AlgebraRepository:
    """Built-ins plus the configs in FROBNIL_ALGEBRA_DIR."""
    global _repository_instance
    if _repository_instance is None:
        _repository_instance = FileAlgebraRepository()
    return _repository_instance


def get_cache() -> RedisCache:
    global _cache_instance
    if _cache_instance is None:
        _cache_instance = RedisCache()
    return _cache_instance


def get_verification_service() -> VerificationService:
    global _verification_service_instance
    if _verification_service_instance is None:
        _verification_service_instance = VerificationService(get_cache())
    return _verification_service_instance
