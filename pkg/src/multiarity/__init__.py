"""Finite, law-checked multi-ary structures: clones, multicategories,
premulticategories, effectful and arrow-enriched multicategories, the
funny tensor on arrows of sets, and free constructions."""

from .errors import CapacityError, CoverageError, LawError, MultiarityError, ShapeError
from .report import CheckConfig, Report

__all__ = ["CapacityError", "CheckConfig", "CoverageError", "LawError", "MultiarityError", "Report", "ShapeError"]
__version__ = "0.1.0"
