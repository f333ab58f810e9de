"""Coverage scores, coverage levels, popularity, profiles, and intersection
regions derived from a usage model and one or more footprints."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .errors import ModelMismatch, UnknownSymbol
from .footprint import Footprint
from .model import Symbol, UsageModel, UseKind

log = logging.getLogger("ucov")

UsePair = tuple[Symbol, UseKind]


class CoverageLevel(Enum):
    FULL = "Full"
    PARTIAL = "Partial"
    NONE = "None"


@dataclass
class CoverageReport:
    covered_symbols: set[Symbol]
    covered_uses: set[UsePair]
    symbol_coverage: Fraction
    use_coverage: Fraction
    levels: dict[Symbol, CoverageLevel]
    uncovered_symbols: set[Symbol]
    uncovered_uses: set[UsePair]
    total_uses: int


@dataclass
class ProfileDistribution:
    weights: dict[UseKind, Fraction]
    basis: str  # "LegalUses" or "ActualUniqueUses"


@dataclass
class IntersectionRegions:
    labels: list[str]
    regions: dict[frozenset[str], int]


def _check_governed(model: UsageModel, fp: Footprint) -> None:
    if fp.library != model.library_name:
        raise ModelMismatch(
            f"footprint is for {fp.library!r}, model is {model.library_name!r}"
        )


def _covered_pairs(model: UsageModel, fp: Footprint) -> set[UsePair]:
    return {(t.symbol, t.use) for t in fp.triples if t.symbol in model.entries}


def compute_coverage(model: UsageModel, fp: Footprint) -> CoverageReport:
    """Coverage of a footprint with respect to its governing model.

    Both scores are exact rationals: covered symbols over API symbols, and
    covered unique uses over legal uses. Coverage of an empty model is 1
    by vacuous truth (with a warning).
    """
    _check_governed(model, fp)
    covered_uses = _covered_pairs(model, fp)
    covered_symbols = {s for s, _ in covered_uses}
    api_symbols = set(model.entries)
    all_uses = {(s, u) for s, uses in model.entries.items() for u in uses}
    if not api_symbols:
        log.warning("coverage over an empty API is vacuously 1.0")
        symbol_coverage = Fraction(1)
    else:
        symbol_coverage = Fraction(len(covered_symbols), len(api_symbols))
    if not all_uses:
        if api_symbols:
            log.warning("model has no legal uses; use coverage is vacuously 1.0")
        use_coverage = Fraction(1)
    else:
        use_coverage = Fraction(len(covered_uses), len(all_uses))
    levels = {s: _level_of(s, model.entries[s], covered_uses) for s in api_symbols}
    return CoverageReport(
        covered_symbols=covered_symbols,
        covered_uses=covered_uses,
        symbol_coverage=symbol_coverage,
        use_coverage=use_coverage,
        levels=levels,
        uncovered_symbols=api_symbols - covered_symbols,
        uncovered_uses=all_uses - covered_uses,
        total_uses=len(fp.triples),
    )


def _level_of(
    sym: Symbol, legal: frozenset[UseKind], covered: set[UsePair]
) -> CoverageLevel:
    hit = {u for u in legal if (sym, u) in covered}
    if not hit:
        return CoverageLevel.NONE
    if hit == set(legal):
        return CoverageLevel.FULL
    return CoverageLevel.PARTIAL


def coverage_level(sym: Symbol, model: UsageModel, fp: Footprint) -> CoverageLevel:
    _check_governed(model, fp)
    if sym not in model.entries:
        raise UnknownSymbol(f"{sym.fqn} is not an exported symbol of the model")
    return _level_of(sym, model.entries[sym], _covered_pairs(model, fp))


def popularity(fp: Footprint, by: str = "SymbolUse") -> list[tuple[object, int]]:
    """Occurrence counts of triples, ranked descending.

    ``by`` is "Symbol" (counts per symbol) or "SymbolUse" (counts per
    (symbol, use) pair). Ties are broken lexicographically by
    fqn/signature/use so the ranking is deterministic.
    """
    counts: dict[object, int] = {}
    for t in fp.triples:
        key: object = t.symbol if by == "Symbol" else (t.symbol, t.use)
        counts[key] = counts.get(key, 0) + 1

    def tie_break(key: object) -> tuple:
        if isinstance(key, tuple):
            sym, use = key
            return (sym.fqn, sym.signature or "", use.value)
        return (key.fqn, key.signature or "", "")

    return sorted(counts.items(), key=lambda kv: (-kv[1], tie_break(kv[0])))


def profile(basis: Union[UsageModel, Footprint]) -> ProfileDistribution:
    """Normalized distribution of use kinds.

    For a model the distribution is over legal uses; for a footprint it is
    over unique (symbol, use) pairs. Every use kind appears in the output,
    with weight zero when absent; all-zero when the basis set is empty.
    """
    if isinstance(basis, UsageModel):
        kinds = [u for uses in basis.entries.values() for u in uses]
        basis_name = "LegalUses"
    else:
        kinds = [use for (_, _, use) in basis.unique_uses]
        basis_name = "ActualUniqueUses"
    total = len(kinds)
    weights: dict[UseKind, Fraction] = {k: Fraction(0) for k in UseKind}
    for k in kinds:
        weights[k] += Fraction(1, total)
    return ProfileDistribution(weights, basis_name)


def exclusive_regions(footprints: list[Footprint]) -> IntersectionRegions:
    """Partition the union of unique uses by the exact subset of labeled
    footprints containing each use. Zero-count regions are included for
    every non-empty subset of labels."""
    if len(footprints) < 2:
        raise ValueError("at least two footprints are required")
    libraries = {fp.library for fp in footprints}
    if len(libraries) > 1:
        raise ModelMismatch(f"footprints span different models: {sorted(libraries)}")
    labels = [fp.label for fp in footprints]
    if len(set(labels)) != len(labels):
        raise ValueError(f"footprint labels are not unique: {labels}")
    membership: dict[tuple, frozenset[str]] = {}
    for fp in footprints:
        for pair in fp.unique_uses:
            membership[pair] = membership.get(pair, frozenset()) | {fp.label}
    regions: dict[frozenset[str], int] = {}
    for r in range(1, 2 ** len(labels)):
        subset = frozenset(l for i, l in enumerate(labels) if r >> i & 1)
        regions[subset] = 0
    for subset in membership.values():
        regions[subset] += 1
    return IntersectionRegions(labels, regions)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _fmt_ratio(x: Fraction) -> float:
    return float(f"{float(x):.4f}")


def coverage_to_dict(report: CoverageReport, model: UsageModel) -> dict:
    unique_uses = len(report.covered_uses)
    level_names = {}
    for sym, level in sorted(report.levels.items(), key=lambda kv: kv[0].sort_key()):
        key = f"{sym.fqn}{'#' + sym.signature if sym.signature else ''}"
        level_names[key] = level.value
    uncovered = sorted(
        [
            {"fqn": s.fqn, "signature": s.signature, "use": u.value}
            for s, u in report.uncovered_uses
        ],
        key=lambda d: (d["fqn"], d["signature"] or "", d["use"]),
    )
    return {
        "symbol_coverage": _fmt_ratio(report.symbol_coverage),
        "use_coverage": _fmt_ratio(report.use_coverage),
        "totals": {
            "api_symbols": len(model.entries),
            "legal_uses": model.legal_use_count,
            "symbols_used": len(report.covered_symbols),
            "unique_uses": unique_uses,
            "total_uses": report.total_uses,
        },
        "levels": level_names,
        "uncovered_uses": uncovered,
    }


def profile_to_dict(dist: ProfileDistribution) -> dict:
    return {
        "basis": dist.basis,
        "weights": {k.value: _fmt_ratio(w) for k, w in sorted(
            dist.weights.items(), key=lambda kv: kv[0].value
        )},
    }


def regions_to_dict(regions: IntersectionRegions) -> dict:
    entries = [
        {"members": sorted(subset), "count": count}
        for subset, count in regions.regions.items()
    ]
    entries.sort(key=lambda e: (len(e["members"]), e["members"], e["count"]))
    return {"labels": list(regions.labels), "regions": entries}
