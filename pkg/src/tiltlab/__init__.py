"""Support-tilting modules, thick subcategories and their bijections for Dynkin quivers over F_p."""

from .census import Census, build_census, decompose
from .quiverroots import Quiver, family_quiver, positive_roots, validate

__all__ = ["Census", "Quiver", "build_census", "decompose", "family_quiver", "positive_roots", "validate"]
__version__ = "0.1.0"
