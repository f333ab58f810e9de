"""Command-line interface.

Commands:
  ucov sum <lib> -o sum.json
  ucov suf --sum sum.json --label tests <roots...> -o suf.json [--lenient]
  ucov suf --sum sum.json --config corpus.json -o <outdir>
  ucov coverage --sum sum.json <suf...> [--format json|text]
  ucov compare --sum sum.json <suf...> -o regions.json
  ucov profile --sum sum.json [--suf f.json]

Exit codes: 0 success, 1 usage/consistency error, 2 parse error (strict
mode), 3 internal failure. UCOV_LOG={error,warn,info,debug} controls
logging verbosity.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import footprint as suf
from . import metrics
from .errors import ModelMismatch, ParseError, UcovError
from .footprint import Footprint
from .model import UsageModel, build_sum, model_from_dict, model_to_dict
from .parser import parse_unit

log = logging.getLogger("ucov")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3


class UsageError(UcovError):
    pass


@dataclass
class CorpusConfig:
    library_root: Optional[str] = None
    groups: dict[str, list[str]] = field(default_factory=dict)
    lenient: bool = True

    @classmethod
    def load(cls, path: str) -> "CorpusConfig":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        groups = data.get("groups", {})
        if len(set(groups)) != len(groups) or any(not k for k in groups):
            raise UsageError("corpus config labels must be unique and non-empty")
        return cls(
            library_root=data.get("library_root"),
            groups={k: list(v) for k, v in groups.items()},
            lenient=bool(data.get("lenient", True)),
        )


def _setup_logging() -> None:
    level_name = os.environ.get("UCOV_LOG", "warn").lower()
    level = {
        "error": logging.ERROR,
        "warn": logging.WARNING,
        "warning": logging.WARNING,
        "info": logging.INFO,
        "debug": logging.DEBUG,
    }.get(level_name, logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _dump_json(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _atomic_write(path: Path, content: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_library(root: Path) -> list:
    if not root.exists():
        raise UsageError(f"library root {root} does not exist")
    files = suf.collect_source_files([root])
    if not files:
        raise UsageError(f"no source files found under {root}")
    return [parse_unit(p.read_text(encoding="utf-8"), str(p)) for p in files]


def _load_model(path: str) -> UsageModel:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from exc
    return model_from_dict(data)


def _load_footprint(path: str, model: UsageModel) -> Footprint:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from exc
    return suf.footprint_from_dict(data, model)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_sum(args: argparse.Namespace) -> int:
    root = Path(args.library)
    units = _parse_library(root)
    name = args.name or root.name
    model = build_sum(units, name)
    _atomic_write(Path(args.output), _dump_json(model_to_dict(model)))
    print(f"symbols: {len(model.entries)}, legal uses: {model.legal_use_count}")
    return EXIT_OK


def cmd_suf(args: argparse.Namespace) -> int:
    model = _load_model(args.sum)
    if args.config:
        config = CorpusConfig.load(args.config)
        lenient = True if args.lenient else config.lenient
        if not config.groups:
            raise UsageError("corpus config defines no groups")
        footprints = suf.footprint_of_corpus(config.groups, model, lenient=lenient)
        outdir = Path(args.output)
        for label, fp in sorted(footprints.items()):
            _atomic_write(outdir / f"{label}.json", _dump_json(suf.footprint_to_dict(fp)))
            _report_footprint(fp)
        return EXIT_OK
    if not args.roots:
        raise UsageError("at least one client root is required")
    for root in args.roots:
        if not Path(root).exists():
            raise UsageError(f"client root {root} does not exist")
    footprints = suf.footprint_of_corpus(
        {args.label: args.roots}, model, lenient=args.lenient
    )
    fp = footprints[args.label]
    _atomic_write(Path(args.output), _dump_json(suf.footprint_to_dict(fp)))
    _report_footprint(fp)
    return EXIT_OK


def _report_footprint(fp: Footprint) -> None:
    print(f"{fp.label}: unique uses: {len(fp.unique_uses)}, total uses: {fp.total_uses}")
    if fp.diagnostics:
        counts: dict[str, int] = {}
        for d in fp.diagnostics:
            counts[d.kind.value] = counts.get(d.kind.value, 0) + 1
        summary = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
        print(f"{fp.label}: diagnostics: {summary}", file=sys.stderr)


def cmd_coverage(args: argparse.Namespace) -> int:
    model = _load_model(args.sum)
    footprints = [_load_footprint(p, model) for p in args.sufs]
    reports = [(fp.label, metrics.compute_coverage(model, fp)) for fp in footprints]
    if len(footprints) > 1:
        merged = footprints[0]
        for fp in footprints[1:]:
            merged = suf.merge(merged, fp)
        reports.append(("All", metrics.compute_coverage(model, merged)))
    if args.format == "json":
        payload = {
            "library": model.library_name,
            "reports": [
                {"label": label, **metrics.coverage_to_dict(report, model)}
                for label, report in reports
            ],
        }
        sys.stdout.write(_dump_json(payload))
    else:
        sys.stdout.write(_coverage_text(model, reports))
    return EXIT_OK


def _coverage_text(model: UsageModel, reports) -> str:
    labels = [label for label, _ in reports]
    width = max(16, *(len(l) + 2 for l in labels))
    rows = [
        ("API symbols", lambda r: str(len(model.entries))),
        ("Legal uses", lambda r: str(model.legal_use_count)),
        ("Symbols used", lambda r: str(len(r.covered_symbols))),
        ("Unique uses", lambda r: str(len(r.covered_uses))),
        ("Total uses", lambda r: str(r.total_uses)),
        ("Symbol coverage", lambda r: f"{float(r.symbol_coverage):.4f}"),
        ("Use coverage", lambda r: f"{float(r.use_coverage):.4f}"),
    ]
    lines = ["".rjust(18) + "".join(l.rjust(width) for l in labels)]
    for title, getter in rows:
        cells = "".join(getter(report).rjust(width) for _, report in reports)
        lines.append(title.ljust(18) + cells)
    return "\n".join(lines) + "\n"


def cmd_compare(args: argparse.Namespace) -> int:
    if len(args.sufs) < 2:
        raise UsageError("compare requires at least two footprints")
    model = _load_model(args.sum)
    footprints = [_load_footprint(p, model) for p in args.sufs]
    regions = metrics.exclusive_regions(footprints)
    content = _dump_json(metrics.regions_to_dict(regions))
    if args.output:
        _atomic_write(Path(args.output), content)
    else:
        sys.stdout.write(content)
    return EXIT_OK


def cmd_profile(args: argparse.Namespace) -> int:
    model = _load_model(args.sum)
    if args.suf:
        fp = _load_footprint(args.suf, model)
        if not fp.triples:
            log.warning("footprint %r is empty; profile weights are all zero", fp.label)
        dist = metrics.profile(fp)
    else:
        dist = metrics.profile(model)
    sys.stdout.write(_dump_json(metrics.profile_to_dict(dist)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ucov", description="Syntactic API usage models, footprints, and coverage."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", help="build a usage model from library sources")
    p.add_argument("library", help="library source root")
    p.add_argument("-o", "--output", required=True, help="output JSON path")
    p.add_argument("--name", help="library name (default: root directory name)")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("suf", help="extract a usage footprint from client sources")
    p.add_argument("roots", nargs="*", help="client source roots")
    p.add_argument("--sum", required=True, help="usage model JSON")
    p.add_argument("--label", default="client", help="footprint label")
    p.add_argument("-o", "--output", required=True, help="output JSON path (or directory with --config)")
    p.add_argument("--lenient", action="store_true", help="skip unparseable files")
    p.add_argument("--config", help="corpus config JSON defining labeled groups")
    p.set_defaults(func=cmd_suf)

    p = sub.add_parser("coverage", help="coverage of footprints against a model")
    p.add_argument("sufs", nargs="+", help="footprint JSON files")
    p.add_argument("--sum", required=True, help="usage model JSON")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("compare", help="intersection regions of labeled footprints")
    p.add_argument("sufs", nargs="+", help="footprint JSON files (>= 2)")
    p.add_argument("--sum", required=True, help="usage model JSON")
    p.add_argument("-o", "--output", help="output JSON path (default: stdout)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("profile", help="use-kind distribution of a model or footprint")
    p.add_argument("--sum", required=True, help="usage model JSON")
    p.add_argument("--suf", help="footprint JSON (actual-use basis)")
    p.set_defaults(func=cmd_profile)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    _setup_logging()
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, ModelMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UcovError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - defensive
        log.exception("internal failure")
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
