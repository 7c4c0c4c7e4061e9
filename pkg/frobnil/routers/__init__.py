# Routers package
from .algebras import router as algebras_router
from .health import router as health_router

__all__ = ["algebras_router", "health_router"]
