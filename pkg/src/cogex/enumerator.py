"""Dynamic program over vertex counts for extremal cograph enumeration.

Level n holds a registry mapping truncated biclique sequences (the first
``cap + 1`` entries) to the best edge count seen with that key, plus
witness cotrees.  Level n is generated from every split n = n1 + n2 by
combining record keys under sum and product, pruning keys that violate
the constraint profile, and reducing to the Pareto frontier over
(smaller key, more edges) unless exhaustive mode keeps every key.

Keys determine how a part behaves inside any larger composition, so
replacing a part by one with a pointwise smaller-or-equal key and at
least as many edges never hurts: the frontier keeps at least one extremal
cograph per level.  Candidate generation per level is associative and
order-independent; the implementation runs it sequentially and publishes
each level's registry frozen.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cotree import (
    INF,
    NEG_INF,
    CapacityError,
    Cotree,
    make_leaf,
    make_product,
    make_sum,
    product_entries,
    sum_entries,
)
from .profile import (
    BicliqueProfile,
    alpha_for,
    binding_cap,
    forbidden_biclique_profile,
    format_profile,
    profile_alpha,
)

Key = tuple[float, ...]

DEFAULT_WITNESS_LIMIT = 8


@dataclass(frozen=True)
class ExtremalRecord:
    key: Key
    edges: int
    witnesses: tuple[Cotree, ...]


class Registry:
    """Per-n map from truncated sequence key to its best record."""

    __slots__ = ("n", "cap", "records", "frozen")

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        self.records: dict[Key, ExtremalRecord] = {}
        self.frozen = False

    def freeze(self) -> "Registry":
        self.frozen = True
        return self

    def __len__(self) -> int:
        return len(self.records)

    def __repr__(self) -> str:
        return f"Registry(n={self.n}, records={len(self.records)}, frozen={self.frozen})"


def pareto_filter(candidates: Iterable[tuple[Key, int]]) -> set[tuple[Key, int]]:
    """Non-dominated (key, edges) pairs: no other pair has a pointwise
    smaller-or-equal key and at least as many edges with one strict."""
    best: dict[Key, int] = {}
    for key, edges in candidates:
        if best.get(key, -1) < edges:
            best[key] = edges
    items = sorted(best.items(), key=lambda kv: (-kv[1], kv[0]))
    kept: list[tuple[Key, int]] = []
    for key, edges in items:
        dominated = False
        for kkey, kedges in kept:
            # kedges >= edges by sort order; keys are distinct
            if all(a <= b for a, b in zip(kkey, key)):
                dominated = True
                break
        if not dominated:
            kept.append((key, edges))
    return set(kept)


def _passes(key: Key, window: tuple[float, ...] | None) -> bool:
    if window is None:
        return True
    return all(k <= w for k, w in zip(key, window))


def build_registries(
    n_max: int,
    cap: int,
    prune: BicliqueProfile | None = None,
    exhaustive: bool = False,
    witness_limit: int | None = DEFAULT_WITNESS_LIMIT,
    max_records: int | None = None,
) -> list[Registry]:
    """Registries for n = 1 .. n_max (list index n-1), all frozen.

    ``prune`` drops every key exceeding the profile anywhere on the window,
    which is sound because a part's sequence is a pointwise lower bound for
    any graph containing it.  ``exhaustive`` skips Pareto filtering and
    keeps every witness, at a significant memory cost.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    window = prune.window(cap + 1) if prune is not None else None
    if exhaustive:
        witness_limit = None

    registries: list[Registry] = []
    base = Registry(1, cap)
    base_key: Key = (1, 0) + (NEG_INF,) * (cap - 1)
    if _passes(base_key, window):
        base.records[base_key] = ExtremalRecord(base_key, 0, (make_leaf(),))
    registries.append(base.freeze())

    for n in range(2, n_max + 1):
        # pass 1: combine keys, remembering where each best candidate came from
        candidates: dict[Key, tuple[int, list[tuple[int, int, Key, Key]]]] = {}
        for n1 in range(1, n // 2 + 1):
            n2 = n - n1
            left = registries[n1 - 1].records
            right = registries[n2 - 1].records
            for k1 in sorted(left):
                e1 = left[k1].edges
                for k2 in sorted(right):
                    if n1 == n2 and k2 < k1:
                        continue
                    e2 = right[k2].edges
                    for op, key, edges in (
                        (0, sum_entries(k1, k2, cap), e1 + e2),
                        (1, product_entries(k1, k2, cap), e1 + e2 + n1 * n2),
                    ):
                        if not _passes(key, window):
                            continue
                        cur = candidates.get(key)
                        if cur is None or edges > cur[0]:
                            candidates[key] = (edges, [(op, n1, k1, k2)])
                        elif edges == cur[0]:
                            cur[1].append((op, n1, k1, k2))
        if max_records is not None and len(candidates) > max_records:
            raise CapacityError(
                f"level {n} produced {len(candidates)} profile keys "
                f"(limit {max_records})")

        # pass 2: Pareto reduction at the (key, edges) level
        if exhaustive:
            surviving = set(candidates)
        else:
            frontier = pareto_filter((k, e) for k, (e, _) in candidates.items())
            surviving = {k for k, _ in frontier}

        # pass 3: materialize witnesses for survivors only
        reg = Registry(n, cap)
        for key in sorted(surviving):
            edges, sources = candidates[key]
            wits: set[Cotree] = set()
            for op, n1, k1, k2 in sources:
                w1 = registries[n1 - 1].records[k1].witnesses
                w2 = registries[n - n1 - 1].records[k2].witnesses
                maker = make_sum if op == 0 else make_product
                for a in w1:
                    for b in w2:
                        wits.add(maker([a, b]))
            ordered = tuple(sorted(wits))
            if witness_limit is not None:
                ordered = ordered[:witness_limit]
            reg.records[key] = ExtremalRecord(key, edges, ordered)
        registries.append(reg.freeze())

    return registries


def query(r: Registry, p: BicliqueProfile) -> ExtremalRecord | None:
    """Best record whose key fits under the profile on the truncated window."""
    if not r.frozen:
        raise ValueError("registry must be frozen before queries")
    window = p.window(r.cap + 1)
    best: ExtremalRecord | None = None
    for key in sorted(r.records):
        if not _passes(key, window):
            continue
        rec = r.records[key]
        if best is None or rec.edges > best.edges:
            best = rec
    return best


def query_witnesses(r: Registry, p: BicliqueProfile) -> tuple[int, tuple[Cotree, ...]]:
    """Best edge count under the profile, with witnesses merged across keys."""
    if not r.frozen:
        raise ValueError("registry must be frozen before queries")
    window = p.window(r.cap + 1)
    best = -1
    wits: set[Cotree] = set()
    for key in sorted(r.records):
        if not _passes(key, window):
            continue
        rec = r.records[key]
        if rec.edges > best:
            best = rec.edges
            wits = set(rec.witnesses)
        elif rec.edges == best:
            wits.update(rec.witnesses)
    return best, tuple(sorted(wits))


# =============================================================================
# Extremal series
# =============================================================================

@dataclass
class ExtremalSeries:
    """ex values over a contiguous range of vertex counts, with witnesses."""

    constraint: str
    alpha: Fraction
    values: dict[int, int]
    witnesses: dict[int, tuple[Cotree, ...]] = field(default_factory=dict)
    s: int | None = None
    t: int | None = None

    def ns(self) -> list[int]:
        return sorted(self.values)


def _normalize_range(n_range) -> range:
    if isinstance(n_range, range):
        rng = n_range
    elif isinstance(n_range, tuple) and len(n_range) == 2:
        rng = range(n_range[0], n_range[1] + 1)
    elif isinstance(n_range, int):
        rng = range(1, n_range + 1)
    else:
        raise ValueError(f"bad n range: {n_range!r}")
    if rng.step != 1 or len(rng) == 0 or rng.start < 1:
        raise ValueError(f"need a nonempty contiguous range of n >= 1, got {n_range!r}")
    return rng


def extremal_series_for_profile(
    p: BicliqueProfile,
    n_range,
    exhaustive: bool = False,
    witness_limit: int | None = DEFAULT_WITNESS_LIMIT,
    max_records: int | None = None,
    constraint: str | None = None,
) -> ExtremalSeries:
    """Profile-extremal edge counts for every n in the range."""
    from .profile import start_index

    rng = _normalize_range(n_range)
    cap = binding_cap(p) + 1
    registries = build_registries(
        rng.stop - 1, cap, prune=p, exhaustive=exhaustive,
        witness_limit=witness_limit, max_records=max_records)
    values: dict[int, int] = {}
    witnesses: dict[int, tuple[Cotree, ...]] = {}
    for n in rng:
        edges, wits = query_witnesses(registries[n - 1], p)
        if edges < 0:
            continue  # no cograph on n vertices fulfills the profile
        values[n] = edges
        if witness_limit is not None:
            wits = wits[:witness_limit]
        witnesses[n] = wits
    s = start_index(p)
    start_value = p[s]
    return ExtremalSeries(
        constraint=constraint or format_profile(p),
        alpha=profile_alpha(p),
        values=values,
        witnesses=witnesses,
        s=s,
        t=int(start_value) + 1 if start_value not in (INF, NEG_INF) else None,
    )


def extremal_function(
    s: int,
    t: int,
    n_range,
    exhaustive: bool = False,
    witness_limit: int | None = DEFAULT_WITNESS_LIMIT,
    max_records: int | None = None,
) -> ExtremalSeries:
    """ex(n, K_{s,t}-free cographs) over the range, with witnesses.

    s = 1 runs through the same registry machinery with the max-degree
    profile; there is no special code path.
    """
    p = forbidden_biclique_profile(s, t)
    series = extremal_series_for_profile(
        p, n_range, exhaustive=exhaustive, witness_limit=witness_limit,
        max_records=max_records, constraint=f"K{{{s},{t}}}")
    series.alpha = alpha_for(s, t)
    series.s = s
    series.t = t
    return series


# =============================================================================
# Periodicity analysis of a computed series
# =============================================================================

@dataclass
class PeriodicityReport:
    alpha: Fraction
    detected_period: int | None
    constants: dict[int, Fraction]
    onset: int | None
    all_negative: bool
    strict_bound: bool
    slope_estimate: Fraction | None
    candidates_examined: list[int]
    status: str

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "detected_period": self.detected_period,
            "constants": {str(q): str(a) for q, a in sorted(self.constants.items())},
            "onset": self.onset,
            "all_negative": self.all_negative,
            "strict_bound": self.strict_bound,
            "slope_estimate": None if self.slope_estimate is None else str(self.slope_estimate),
            "candidates_examined": self.candidates_examined,
            "status": self.status,
        }


def analyze_periodicity(
    series: ExtremalSeries,
    alpha: Fraction | None = None,
    periods: Sequence[int] | None = None,
) -> PeriodicityReport:
    """Detect eventual periodicity of ex(n) - alpha*n over the series.

    For each candidate period R covered at least three times by the range,
    each residue class must end in a constant run of at least three
    observations (two would accept spurious small periods whenever the last
    two residuals happen to coincide).  Reports the smallest stabilizing R,
    the per-residue constants, the onset of stability, whether all
    constants are negative, and whether ex(n) < alpha*n holds throughout.
    A finite-difference slope over the last detected period cross-checks
    alpha.
    """
    if alpha is None:
        alpha = series.alpha
    ns = series.ns()
    if not ns:
        raise ValueError("empty series")
    span = ns[-1] - ns[0] + 1
    if periods is None:
        periods = list(range(1, max(2, span // 3) + 1))
    candidates = [r for r in sorted(set(periods)) if r >= 1 and 3 * r <= span]

    residual = {n: Fraction(series.values[n]) - alpha * n for n in ns}
    strict = all(Fraction(series.values[n]) < alpha * n for n in ns)

    for r in candidates:
        constants: dict[int, Fraction] = {}
        onsets: list[int] = []
        ok = True
        for q in range(r):
            obs = [n for n in ns if n % r == q]
            if len(obs) < 3:
                ok = False
                break
            run_start = len(obs) - 1
            while run_start > 0 and residual[obs[run_start - 1]] == residual[obs[-1]]:
                run_start -= 1
            if len(obs) - run_start < 3:
                ok = False
                break
            constants[q] = residual[obs[-1]]
            onsets.append(obs[run_start])
        if ok:
            n_last = ns[-1]
            slope = Fraction(series.values[n_last] - series.values[n_last - r], r) \
                if n_last - r in series.values else None
            return PeriodicityReport(
                alpha=alpha,
                detected_period=r,
                constants=constants,
                onset=max(onsets),
                all_negative=all(a < 0 for a in constants.values()),
                strict_bound=strict,
                slope_estimate=slope,
                candidates_examined=candidates,
                status="periodic",
            )
    return PeriodicityReport(
        alpha=alpha,
        detected_period=None,
        constants={},
        onset=None,
        all_negative=False,
        strict_bound=strict,
        slope_estimate=None,
        candidates_examined=candidates,
        status="inconclusive",
    )
