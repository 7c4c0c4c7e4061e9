"""Health check endpoints."""

from fastapi import APIRouter, Depends
from fastapi.responses import JSONResponse

from frobnil.dependencies import get_cache
from frobnil.services.cache import RedisCache

router = APIRouter()


@router.get("/ping")
def ping():
    """Simple liveness check."""
    return "pong"


@router.get("/health")
def health(cache: RedisCache = Depends(get_cache)):
    """Overall status and Redis status.

    Returns 200 when the report cache is reachable, otherwise 503. The
    algebra endpoints keep working without Redis.
    """
    redis_ok = cache.is_available()
    payload = {
        "status": "ok" if redis_ok else "degraded",
        "redis": "ok" if redis_ok else "unavailable",
    }
    return JSONResponse(status_code=200 if redis_ok else 503, content=payload)
