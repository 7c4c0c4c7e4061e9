"""
Frobnil API

A FastAPI application serving normal forms, structure data and cached
verification reports for Frobenius nilHecke algebras.
"""

import logging

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from frobnil.config import settings
from frobnil.routers import algebras_router, health_router

logging.basicConfig(level=settings.LOG_LEVEL.upper())

app = FastAPI(
    title=settings.API_TITLE,
    description=settings.API_DESCRIPTION,
    version=settings.API_VERSION
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.ALLOWED_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(health_router)
app.include_router(algebras_router)
