"""HTTP service wrapping the exact circle-set library."""

from .app import app, create_app

__all__ = ["app", "create_app"]
