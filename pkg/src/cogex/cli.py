"""Command-line interface.

Subcommands: enumerate, construct, verify, analyze, export.  Machine
output (JSON, CSV, graph6, DOT) goes to --output or stdout; the human
summary always goes to stderr.  Exit codes: 0 ok, 1 check failed,
2 usage error, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .constructions import (
    clique_product_family,
    k2t_extremal,
    k33_extremal,
    pump,
    regular_cograph,
    regular_infeasibility_reason,
    star_extremal,
)
from .cotree import CapacityError, Cotree, biclique_sequence, to_adjacency, to_formula
from .enumerator import analyze_periodicity, extremal_function, extremal_series_for_profile
from .profile import forbidden_biclique_profile, fulfills, parse_profile
from .serialize import (
    cotree_to_obj,
    dumps_cotree,
    graph6_bytes,
    loads_cotree,
    series_from_obj,
    series_to_csv,
    series_to_obj,
    to_dot,
)
from .verification import run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

OUTPUT_DIR_ENV = "COGEX_OUTPUT_DIR"


@dataclass
class RunConfig:
    """Validated parameters of one CLI invocation."""

    subcommand: str
    s: int | None = None
    t: int | None = None
    n: int | None = None
    n_min: int | None = None
    n_max: int | None = None
    d: int | None = None
    r: int | None = None
    k: int | None = None
    profile_text: str | None = None
    family: str | None = None
    check: str | None = None
    path: tuple[int, ...] = ()
    input_path: str | None = None
    output_path: str | None = None
    fmt: str = "json"
    exhaustive: bool = False
    small: bool = False
    witness_max: int = 8
    catalog_max: int = 10
    max_records: int | None = None
    alpha: Fraction | None = None
    periods: list[int] = field(default_factory=list)
    seed: int = 20240817
    threads: int = 1


def _human(msg: str) -> None:
    print(msg, file=sys.stderr)


def _resolve_output(path: str | None) -> Path | None:
    if path is None:
        return None
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _emit(text: str, path: Path | None) -> None:
    """Write the full artifact at once; no partial files on errors."""
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text(text)
        tmp.replace(path)
        _human(f"wrote {path}")


def _emit_json(obj, path: Path | None) -> None:
    _emit(json.dumps(obj, indent=2, sort_keys=True), path)


# =============================================================================
# enumerate
# =============================================================================

def cmd_enumerate(cfg: RunConfig) -> int:
    if cfg.profile_text:
        prof = parse_profile(cfg.profile_text)
        series = extremal_series_for_profile(
            prof, range(cfg.n_min or 1, (cfg.n_max or 10) + 1),
            exhaustive=cfg.exhaustive, witness_limit=cfg.witness_max,
            max_records=cfg.max_records)
    else:
        series = extremal_function(
            cfg.s, cfg.t, range(cfg.n_min or 1, (cfg.n_max or 10) + 1),
            exhaustive=cfg.exhaustive, witness_limit=cfg.witness_max,
            max_records=cfg.max_records)
    report = analyze_periodicity(series) if series.values else None
    period = report.detected_period if report else None
    out = _resolve_output(cfg.output_path)
    if cfg.fmt == "csv":
        _emit(series_to_csv(series, period), out)
    else:
        obj = series_to_obj(series, period)
        obj["periodicity"] = report.to_json() if report else None
        _emit_json(obj, out)
    bound_violations = [
        n for n, ex in series.values.items()
        if (series.s or 2) >= 2 and not Fraction(ex) < series.alpha * n
    ]
    for n in sorted(series.values):
        marker = "<" if Fraction(series.values[n]) < series.alpha * n else ">="
        _human(f"  n={n:3d}  ex={series.values[n]:5d}  {marker} {series.alpha * n}")
    if bound_violations:
        _human(f"strict bound violated at n={bound_violations}")
        return EXIT_CHECK_FAILED
    _human(f"enumerated {series.constraint} for {len(series.values)} values of n; "
           f"strict bound holds throughout")
    return EXIT_OK


# =============================================================================
# construct
# =============================================================================

def _construct_graph(cfg: RunConfig) -> tuple[Cotree, dict]:
    fam = cfg.family
    if fam == "regular":
        if cfg.n is None or cfg.d is None:
            raise ValueError("regular needs --n and --d")
        g = regular_cograph(cfg.n, cfg.d)
        if g is None:
            raise _Infeasible(regular_infeasibility_reason(cfg.n, cfg.d))
        return g, {"regular_degree": cfg.d}
    if fam == "star":
        if cfg.n is None or cfg.t is None:
            raise ValueError("star needs --n and --t")
        return star_extremal(cfg.t, cfg.n), {"constraint": f"K{{1,{cfg.t}}}"}
    if fam == "k2t":
        if cfg.n is None or cfg.t is None:
            raise ValueError("k2t needs --n and --t")
        return k2t_extremal(cfg.t, cfg.n), {"constraint": f"K{{2,{cfg.t}}}"}
    if fam == "k33":
        if cfg.n is None:
            raise ValueError("k33 needs --n")
        return k33_extremal(cfg.n), {"constraint": "K{3,3}"}
    if fam == "clique-product":
        if None in (cfg.s, cfg.t, cfg.r):
            raise ValueError("clique-product needs --s, --t and --r")
        return clique_product_family(cfg.s, cfg.t, cfg.r), {
            "constraint": f"K{{{cfg.s},{cfg.t}}}"}
    if fam == "pump":
        if cfg.input_path is None or cfg.k is None or not cfg.path:
            raise ValueError("pump needs --input, --path and --k")
        g = loads_cotree(Path(cfg.input_path).read_text())
        return pump(g, cfg.path, cfg.k), {"pumped_path": list(cfg.path), "k": cfg.k}
    raise ValueError(f"unknown family {fam!r}")


class _Infeasible(Exception):
    pass


def cmd_construct(cfg: RunConfig) -> int:
    try:
        g, extra = _construct_graph(cfg)
    except _Infeasible as exc:
        _human(f"infeasible: {exc.args[0]}")
        print(json.dumps({"infeasible": True, "reason": exc.args[0]}))
        return EXIT_CHECK_FAILED

    verification = {
        "vertices": g.n,
        "edges": g.edges,
        "formula": to_formula(g),
        **extra,
    }
    if g.n <= 16:
        adj = to_adjacency(g)
        degs = sorted(set(adj.degree_sequence()))
        verification["degrees"] = degs
        if cfg.family in ("star", "k2t", "k33", "clique-product"):
            s, t = {"star": (1, cfg.t), "k2t": (2, cfg.t), "k33": (3, 3),
                    "clique-product": (cfg.s, cfg.t)}[cfg.family]
            verification["fulfills_constraint"] = fulfills(
                biclique_sequence(g, g.n), forbidden_biclique_profile(s, t))

    out = _resolve_output(cfg.output_path)
    if cfg.fmt == "graph6":
        _emit(graph6_bytes(to_adjacency(g, limit=62)).decode("ascii"), out)
    elif cfg.fmt == "dot":
        _emit(to_dot(g), out)
    else:
        _emit_json({"format": "cogex.cotree/1", "cotree": cotree_to_obj(g),
                    "verification": verification}, out)
    _human(f"constructed {to_formula(g)}: {g.n} vertices, {g.edges} edges")
    return EXIT_OK


# =============================================================================
# verify / analyze / export
# =============================================================================

def cmd_verify(cfg: RunConfig) -> int:
    report = run_suite(
        which=cfg.check or "all",
        small=cfg.small,
        seed=cfg.seed,
        threads=cfg.threads,
        n=cfg.n,
        n_max=cfg.n_max,
        s=cfg.s,
        t=cfg.t,
        catalog_max=cfg.catalog_max,
    )
    _emit_json(report, _resolve_output(cfg.output_path))
    for c in report["checks"]:
        status = "PASS" if c["passed"] else "FAIL"
        _human(f"  {status} {c['check']} {c['params']}")
    if report["passed"]:
        _human("all checks passed")
        return EXIT_OK
    _human("some checks FAILED")
    return EXIT_CHECK_FAILED


def cmd_analyze(cfg: RunConfig) -> int:
    if cfg.input_path:
        series = series_from_obj(json.loads(Path(cfg.input_path).read_text()))
    elif cfg.profile_text:
        prof = parse_profile(cfg.profile_text)
        series = extremal_series_for_profile(
            prof, range(cfg.n_min or 1, (cfg.n_max or 20) + 1),
            witness_limit=cfg.witness_max, max_records=cfg.max_records)
    else:
        series = extremal_function(
            cfg.s, cfg.t, range(cfg.n_min or 1, (cfg.n_max or 20) + 1),
            witness_limit=cfg.witness_max, max_records=cfg.max_records)
    report = analyze_periodicity(series, alpha=cfg.alpha,
                                 periods=cfg.periods or None)
    obj = report.to_json()
    obj["constraint"] = series.constraint
    _emit_json(obj, _resolve_output(cfg.output_path))
    if report.status == "periodic":
        consts = ", ".join(f"a_{q}={a}" for q, a in sorted(report.constants.items()))
        _human(f"period R={report.detected_period} from n={report.onset}: {consts}")
        _human(f"all constants negative: {report.all_negative}; "
               f"strict bound: {report.strict_bound}")
    else:
        _human("no candidate period stabilized (inconclusive)")
    return EXIT_OK


def cmd_export(cfg: RunConfig) -> int:
    if cfg.input_path is None:
        raise ValueError("export needs --input")
    g = loads_cotree(Path(cfg.input_path).read_text())
    out = _resolve_output(cfg.output_path)
    if cfg.fmt == "graph6":
        _emit(graph6_bytes(to_adjacency(g, limit=62)).decode("ascii"), out)
    elif cfg.fmt == "dot":
        _emit(to_dot(g), out)
    else:
        _emit(dumps_cotree(g), out)
    _human(f"exported {to_formula(g)} as {cfg.fmt}")
    return EXIT_OK


# =============================================================================
# argument parsing
# =============================================================================

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", "-o", help="output file (default: stdout); relative "
                   f"paths resolve under ${OUTPUT_DIR_ENV} when set")
    p.add_argument("--threads", type=int, default=1,
                   help="max worker threads for per-item checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cogex",
        description="Edge-maximal biclique-free cographs: enumerate, construct, verify.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("enumerate", help="extremal edge counts by dynamic programming")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--profile", help='constraint profile text, e.g. "inf,inf,inf;2"')
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--exhaustive", action="store_true",
                   help="keep all profile classes and witnesses (no Pareto filter)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--witness-max", type=int, default=8)
    p.add_argument("--max-records", type=int, default=None,
                   help="per-level registry size cap (capacity guard)")
    _add_common(p)

    p = sub.add_parser("construct", help="explicit families and transformations")
    p.add_argument("family", choices=("regular", "star", "k2t", "k33",
                                      "clique-product", "pump"))
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--input", help="cotree JSON file (pump)")
    p.add_argument("--path", help="child indices from the root, e.g. 1/0 (pump)")
    p.add_argument("--format", choices=("json", "graph6", "dot"), default="json")
    _add_common(p)

    p = sub.add_parser("verify", help="oracle and property suites")
    p.add_argument("check", choices=(
        "all", "balanced-biclique", "sequences", "profiles", "dp-vs-oracle",
        "bound-2t", "bounds", "structure", "restriction", "regular", "pareto",
        "constructions", "pump", "invariants"))
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--small", action="store_true", help="reduced bundled suite")
    p.add_argument("--seed", type=int, default=20240817)
    p.add_argument("--catalog-max", type=int, default=None,
                   help="hard ceiling on oracle catalog size (capacity guard)")
    _add_common(p)

    p = sub.add_parser("analyze", help="periodicity of ex(n) - alpha*n")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--profile")
    p.add_argument("--n-max", type=int)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--input", help="series snapshot JSON from enumerate")
    p.add_argument("--alpha", help="exact rational, e.g. 3/2 (default: from s,t)")
    p.add_argument("--periods", help="comma-separated candidate periods")
    p.add_argument("--witness-max", type=int, default=4)
    p.add_argument("--max-records", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("export", help="convert a cotree JSON artifact")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("json", "graph6", "dot"), default="json")
    _add_common(p)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(subcommand=args.subcommand)
    for name in ("s", "t", "n", "d", "r", "k", "small", "exhaustive", "seed", "threads"):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(cfg, name, getattr(args, name))
    cfg.n_min = getattr(args, "n_min", None)
    cfg.n_max = getattr(args, "n_max", None)
    cfg.profile_text = getattr(args, "profile", None)
    cfg.family = getattr(args, "family", None)
    cfg.check = getattr(args, "check", None)
    cfg.input_path = getattr(args, "input", None)
    cfg.output_path = getattr(args, "output", None)
    cfg.fmt = getattr(args, "format", "json")
    cfg.witness_max = getattr(args, "witness_max", 8)
    cfg.max_records = getattr(args, "max_records", None)
    if getattr(args, "catalog_max", None) is not None:
        cfg.catalog_max = args.catalog_max
    if getattr(args, "alpha", None):
        cfg.alpha = Fraction(args.alpha)
    if getattr(args, "periods", None):
        cfg.periods = [int(x) for x in args.periods.split(",")]
    if getattr(args, "path", None):
        cfg.path = tuple(int(x) for x in args.path.split("/"))
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig) -> None:
    if cfg.subcommand in ("enumerate", "analyze") and not cfg.input_path:
        if cfg.profile_text is None and (cfg.s is None or cfg.t is None):
            raise ValueError("need --s and --t, or --profile")
        if cfg.profile_text is None and not 1 <= cfg.s <= cfg.t:
            raise ValueError(f"need 1 <= s <= t, got ({cfg.s}, {cfg.t})")
    if cfg.n_max is not None and cfg.n_min is not None and cfg.n_min > cfg.n_max:
        raise ValueError("--n-min exceeds --n-max")
    if cfg.threads < 1:
        raise ValueError("--threads must be >= 1")
    if cfg.witness_max < 1:
        raise ValueError("--witness-max must be >= 1")


_DISPATCH = {
    "enumerate": cmd_enumerate,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "analyze": cmd_analyze,
    "export": cmd_export,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
    except ValueError as exc:
        _human(f"usage error: {exc}")
        return EXIT_USAGE
    try:
        return _DISPATCH[cfg.subcommand](cfg)
    except CapacityError as exc:
        _human(f"capacity exceeded: {exc}")
        return EXIT_CAPACITY
    except (ValueError, OSError) as exc:
        _human(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
