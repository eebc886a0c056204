"""Overlap (Ufnarovskii) quivers of monomial algebras and exact checks of f̄: A -> kQ."""

from .presentation import Presentation, load_presentation, normalize, parse_presentation
from .quiver import Quiver, build_quiver

__all__ = [
    "Presentation",
    "Quiver",
    "build_quiver",
    "load_presentation",
    "normalize",
    "parse_presentation",
]
