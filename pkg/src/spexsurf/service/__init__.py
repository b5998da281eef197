"""HTTP face of the package; see ``app`` for the endpoint table."""
from .app import app, build_app

__all__ = ["app", "build_app"]
