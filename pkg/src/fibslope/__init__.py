"""Exact intersection-theoretic toolkit for slopes of fibrations on rational surfaces."""

from .analysis import AnalysisReport, analyze, analyze_model, decompose
from .inequalities import SlopeContext, SlopePolynomial, VerdictReport, evaluate_all
from .invariants import InvariantReport, invariants, numbers
from .lattice import BaseSurface, DivisorClass, SurfaceModel, arithmetic_genus, build_surface, canonical_class, chi
from .pencil import (
    ChainSpec,
    FibrationModel,
    PencilSpec,
    PencilValidationError,
    build_fibration,
    fibration_from_spec,
    gonality_bounds,
    relative_minimality_check,
    validate_pencil,
)
from .search import SearchRequest, search
from .zariski import CurveCatalog, ZariskiDecomposition, verify_decomposition, zariski_fujita

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport", "BaseSurface", "ChainSpec", "CurveCatalog", "DivisorClass", "FibrationModel",
    "InvariantReport", "PencilSpec", "PencilValidationError", "SearchRequest", "SlopeContext",
    "SlopePolynomial", "SurfaceModel", "VerdictReport", "ZariskiDecomposition", "analyze",
    "analyze_model", "arithmetic_genus", "build_fibration", "build_surface", "canonical_class", "chi",
    "decompose", "evaluate_all", "fibration_from_spec", "gonality_bounds", "invariants", "numbers",
    "relative_minimality_check", "search", "validate_pencil", "verify_decomposition", "zariski_fujita",
]
