"""Abelian Cover - exact invariants of abelian covers of the plane branched along lines."""

__version__ = "0.1.0"

from .arrangement import Arrangement, build_arrangement, build_ceva
from .config import ToolkitConfig
from .cover import CharacterMap, ceva_character
from .models import Report
from .pipeline import CoverPipeline, run_ceva_full, run_custom

__all__ = [
    "Arrangement",
    "CharacterMap",
    "CoverPipeline",
    "Report",
    "ToolkitConfig",
    "build_arrangement",
    "build_ceva",
    "ceva_character",
    "run_ceva_full",
    "run_custom",
]
