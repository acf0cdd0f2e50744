"""Quiver Grassmannians of acyclic quivers over finite fields."""

from .kernel import BACKEND
from .quiver import Quiver

__all__ = ["BACKEND", "Quiver"]
__version__ = "0.1.0"
