"""File formats: cotree JSON, graph6, DOT, registry and series snapshots."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .cotree import (
    INF,
    NEG_INF,
    AdjacencyGraph,
    Cotree,
    canonical_form,
    make_leaf,
    make_product,
    make_sum,
)
from .enumerator import ExtremalRecord, ExtremalSeries, Registry
from .profile import BicliqueProfile, format_profile, parse_profile

COTREE_FORMAT = "cogex.cotree/1"
REGISTRY_FORMAT = "cogex.registry/1"
SERIES_FORMAT = "cogex.series/1"


class CotreeFormatError(ValueError):
    """Malformed cotree JSON; ``path`` locates the offending node."""

    def __init__(self, message: str, path: str):
        super().__init__(f"{message} at {path or '/'}")
        self.path = path


# =============================================================================
# Cotree JSON: {"op":"leaf"} | {"op":"sum"|"prod","children":[...]}
# =============================================================================

def cotree_to_obj(g: Cotree) -> dict:
    if g.kind == "leaf":
        return {"op": "leaf"}
    return {"op": g.kind, "children": [cotree_to_obj(c) for c in g.children]}


def cotree_from_obj(obj, path: str = "") -> Cotree:
    """Parse, enforcing >= 2 children and sum/product alternation."""
    if not isinstance(obj, dict) or "op" not in obj:
        raise CotreeFormatError("expected an object with an 'op' field", path)
    op = obj["op"]
    if op == "leaf":
        if "children" in obj:
            raise CotreeFormatError("leaf must not have children", path)
        return make_leaf()
    if op not in ("sum", "prod"):
        raise CotreeFormatError(f"unknown op {op!r}", path)
    children = obj.get("children")
    if not isinstance(children, list) or len(children) < 2:
        raise CotreeFormatError("inner node needs a list of >= 2 children", path)
    kids = []
    for i, child in enumerate(children):
        child_path = f"{path}/children/{i}"
        if isinstance(child, dict) and child.get("op") == op:
            raise CotreeFormatError(f"{op} child under {op} node violates reduction",
                                    child_path)
        kids.append(cotree_from_obj(child, child_path))
    return make_sum(kids) if op == "sum" else make_product(kids)


def dumps_cotree(g: Cotree) -> str:
    """Canonical JSON text: stable key order, no whitespace."""
    return json.dumps(cotree_to_obj(g), sort_keys=True, separators=(",", ":"))


def loads_cotree(text: str) -> Cotree:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CotreeFormatError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from exc
    return cotree_from_obj(obj)


# =============================================================================
# graph6
# =============================================================================

def graph6_bytes(a: AdjacencyGraph) -> bytes:
    """Standard graph6 encoding of an adjacency matrix (n <= 62 supported)."""
    n = a.n
    if n > 62:
        raise ValueError("graph6 writer supports n <= 62")
    out = bytearray([63 + n])
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if a.rows[i] >> j & 1 else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(63 + val)
    return bytes(out)


def catalog_to_graph6(catalog) -> str:
    """Whole-catalog export, one graph6 line per isomorphism class."""
    from .cotree import to_adjacency
    return "".join(
        graph6_bytes(to_adjacency(g, limit=max(16, catalog.n))).decode("ascii") + "\n"
        for g in catalog.items)


# =============================================================================
# DOT
# =============================================================================

_DOT_LABEL = {"sum": "+", "prod": "×", "leaf": "•"}


def to_dot(g: Cotree, name: str = "cotree") -> str:
    """DOT digraph: inner nodes labeled +/x, root highlighted."""
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    counter = 0

    def visit(node: Cotree, parent: str | None) -> None:
        nonlocal counter
        nid = f"n{counter}"
        counter += 1
        label = _DOT_LABEL[node.kind]
        attrs = f'label="{label}"'
        if parent is None:
            attrs += ' style=filled fillcolor="mediumpurple"'
        lines.append(f"  {nid} [{attrs}];")
        if parent is not None:
            lines.append(f"  {parent} -> {nid};")
        for c in node.children:
            visit(c, nid)

    visit(g, None)
    lines.append("}")
    return "\n".join(lines) + "\n"


# =============================================================================
# Registry and series snapshots
# =============================================================================

def _value_to_json(v: float):
    if v == INF:
        return "inf"
    if v == NEG_INF:
        return "-inf"
    return int(v)


def _value_from_json(v) -> float:
    if v == "inf":
        return INF
    if v == "-inf":
        return NEG_INF
    return int(v)


def registry_to_obj(r: Registry, prune: BicliqueProfile | None = None) -> dict:
    return {
        "format": REGISTRY_FORMAT,
        "n": r.n,
        "cap": r.cap,
        "prune": None if prune is None else format_profile(prune),
        "records": [
            {
                "key": [_value_to_json(v) for v in key],
                "edges": rec.edges,
                "witnesses": [cotree_to_obj(w) for w in rec.witnesses],
            }
            for key, rec in sorted(r.records.items())
        ],
    }


def registry_from_obj(obj: dict) -> tuple[Registry, BicliqueProfile | None]:
    if obj.get("format") != REGISTRY_FORMAT:
        raise ValueError(f"not a {REGISTRY_FORMAT} snapshot")
    r = Registry(obj["n"], obj["cap"])
    for rec in obj["records"]:
        key = tuple(_value_from_json(v) for v in rec["key"])
        witnesses = tuple(cotree_from_obj(w) for w in rec["witnesses"])
        r.records[key] = ExtremalRecord(key, rec["edges"], witnesses)
    prune = None if obj.get("prune") is None else parse_profile(obj["prune"])
    return r.freeze(), prune


def series_to_obj(series: ExtremalSeries, detected_period: int | None = None) -> dict:
    rows = []
    for n in series.ns():
        ex = series.values[n]
        alpha_n = series.alpha * n
        row = {
            "n": n,
            "ex": ex,
            "alpha_n": str(alpha_n),
            "bound_ok": (Fraction(ex) < alpha_n) if (series.s or 2) >= 2 else None,
            "residue": (n % detected_period) if detected_period else None,
            "witnesses": [canonical_form(w).decode("ascii")
                          for w in series.witnesses.get(n, ())],
        }
        rows.append(row)
    return {
        "format": SERIES_FORMAT,
        "constraint": series.constraint,
        "s": series.s,
        "t": series.t,
        "alpha": str(series.alpha),
        "detected_period": detected_period,
        "rows": rows,
    }


def series_from_obj(obj: dict) -> ExtremalSeries:
    if obj.get("format") != SERIES_FORMAT:
        raise ValueError(f"not a {SERIES_FORMAT} snapshot")
    values = {row["n"]: row["ex"] for row in obj["rows"]}
    return ExtremalSeries(
        constraint=obj["constraint"],
        alpha=Fraction(obj["alpha"]),
        values=values,
        witnesses={},
        s=obj.get("s"),
        t=obj.get("t"),
    )


def series_to_csv(series: ExtremalSeries, detected_period: int | None = None) -> str:
    """Columns: n, ex, alpha_n, bound_ok, residue, witness."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "ex", "alpha_n", "bound_ok", "residue", "witness"])
    for n in series.ns():
        ex = series.values[n]
        alpha_n = series.alpha * n
        bound_ok = (Fraction(ex) < alpha_n) if (series.s or 2) >= 2 else ""
        residue = (n % detected_period) if detected_period else ""
        wits = series.witnesses.get(n, ())
        witness = canonical_form(wits[0]).decode("ascii") if wits else ""
        writer.writerow([n, ex, str(alpha_n), bound_ok, residue, witness])
    return buf.getvalue()
