"""HTTP layer: pydantic models and the FastAPI app factory."""

from .app import create_app

__all__ = ["create_app"]
