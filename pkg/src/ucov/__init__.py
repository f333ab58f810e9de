"""Syntactic API usage analysis: usage models, footprints, and coverage.

The library side computes a usage model (every exported symbol of an API
mapped to its legal use kinds); the client side extracts a usage footprint
(every located actual use). Metrics derive coverage scores, coverage
levels, popularity rankings, usage profiles, and cross-footprint
intersection regions from the two.
"""

from .errors import (
    CyclicHierarchy,
    DuplicateSymbol,
    ModelMismatch,
    ParseError,
    UcovError,
    UnknownSymbol,
)
from .footprint import (
    Diagnostic,
    DiagnosticKind,
    Footprint,
    UseTriple,
    diff,
    extract_uses,
    footprint_from_dict,
    footprint_of_corpus,
    footprint_to_dict,
    merge,
)
from .metrics import (
    CoverageLevel,
    CoverageReport,
    IntersectionRegions,
    ProfileDistribution,
    compute_coverage,
    coverage_level,
    exclusive_regions,
    popularity,
    profile,
)
from .model import (
    Symbol,
    SymbolKind,
    UsageModel,
    UseKind,
    build_sum,
    is_effectively_extensible,
    is_exported,
    legal_uses,
    model_from_dict,
    model_to_dict,
)
from .nodes import Location, SourceUnit
from .parser import parse_unit
from .symtab import SymbolTable, build_symbol_table
from .typing_env import Env, static_type_of

__version__ = "0.1.0"

__all__ = [
    "CoverageLevel",
    "CoverageReport",
    "CyclicHierarchy",
    "Diagnostic",
    "DiagnosticKind",
    "DuplicateSymbol",
    "Env",
    "Footprint",
    "IntersectionRegions",
    "Location",
    "ModelMismatch",
    "ParseError",
    "ProfileDistribution",
    "SourceUnit",
    "Symbol",
    "SymbolKind",
    "SymbolTable",
    "UcovError",
    "UnknownSymbol",
    "UsageModel",
    "UseKind",
    "UseTriple",
    "build_sum",
    "build_symbol_table",
    "compute_coverage",
    "coverage_level",
    "diff",
    "exclusive_regions",
    "extract_uses",
    "footprint_from_dict",
    "footprint_of_corpus",
    "footprint_to_dict",
    "is_effectively_extensible",
    "is_exported",
    "legal_uses",
    "merge",
    "model_from_dict",
    "model_to_dict",
    "parse_unit",
    "popularity",
    "profile",
    "static_type_of",
]
