"""Brute-force ground truth at small vertex counts.

Everything the dynamic program or the constructions claim is re-derivable
here by exhaustion: the catalog of all unlabeled cographs up to the size
limit, biclique containment by common-neighborhood search on the dense
expansion, extremal values by scanning the catalog, and the structural
spot checks used by the verification suite.

The biclique computations here deliberately avoid the cotree recursion:
they work on adjacency bitmasks only, so they can serve as an independent
oracle for it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from .cotree import (
    NEG_INF,
    AdjacencyGraph,
    BicliqueSequence,
    CapacityError,
    Cotree,
    canonical_form,
    complement,
    is_induced_p4_free,
    make_leaf,
    make_product,
    make_sum,
    to_adjacency,
)
from .profile import BicliqueProfile, fulfills

DEFAULT_CATALOG_LIMIT = 10


# =============================================================================
# Unlabeled cograph catalog
# =============================================================================

@dataclass(frozen=True)
class CographCatalog:
    n: int
    items: tuple[Cotree, ...]

    def __len__(self) -> int:
        return len(self.items)


@lru_cache(maxsize=None)
def _connected_cotrees(n: int) -> tuple[Cotree, ...]:
    """All connected (product-rooted, or K_1) reduced cotrees on n leaves.

    A cograph on >= 2 vertices is connected exactly when its complement is
    not, so the connected trees are the complements of the sum-rooted ones.
    """
    if n == 1:
        return (make_leaf(),)
    return tuple(sorted(complement(g) for g in _sum_rooted_cotrees(n)))


@lru_cache(maxsize=None)
def _sum_rooted_cotrees(n: int) -> tuple[Cotree, ...]:
    """All sum-rooted reduced cotrees on n leaves (>= 2 connected parts)."""
    out = []
    for parts in _part_multisets(n, n - 1, None):
        if len(parts) >= 2:
            out.append(make_sum(parts))
    return tuple(sorted(out))


def _part_multisets(n_left: int, size_cap: int, idx_cap: int | None):
    """Multisets of connected cotrees with sizes summing to n_left.

    Parts are emitted in nonincreasing (size, catalog index) order, so each
    multiset appears exactly once.
    """
    if n_left == 0:
        yield ()
        return
    for size in range(min(size_cap, n_left), 0, -1):
        options = _connected_cotrees(size)
        start = idx_cap if (idx_cap is not None and size == size_cap) else len(options) - 1
        for i in range(start, -1, -1):
            for rest in _part_multisets(n_left - size, size, i):
                yield (options[i],) + rest


def enumerate_cotrees(n: int, limit: int = DEFAULT_CATALOG_LIMIT) -> CographCatalog:
    """One reduced canonical cotree per isomorphism class of n-vertex cographs."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise CapacityError(f"catalog for n={n} exceeds limit {limit}")
    if n == 1:
        return CographCatalog(1, (make_leaf(),))
    items = tuple(sorted(_connected_cotrees(n) + _sum_rooted_cotrees(n)))
    return CographCatalog(n, items)


def connected_cotrees(n: int, limit: int = DEFAULT_CATALOG_LIMIT) -> tuple[Cotree, ...]:
    """All connected unlabeled cographs on n vertices."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise CapacityError(f"catalog for n={n} exceeds limit {limit}")
    return _connected_cotrees(n)


def random_cotree(rng: random.Random, n: int) -> Cotree:
    """A random reduced cotree on n leaves (not uniform over classes)."""
    def build(k: int, forbid: str | None) -> Cotree:
        if k == 1:
            return make_leaf()
        kind = rng.choice([x for x in ("sum", "prod") if x != forbid])
        pieces = []
        left = k
        while left > 0:
            size = rng.randint(1, left) if len(pieces) >= 1 else rng.randint(1, left - 1)
            pieces.append(size)
            left -= size
        if len(pieces) == 1:
            pieces = [1, k - 1] if k >= 2 else pieces
        kids = [build(sz, kind) for sz in pieces]
        maker = make_sum if kind == "sum" else make_product
        return maker(kids) if len(kids) >= 2 else kids[0]

    return build(n, None)


# =============================================================================
# Biclique containment and sequences, on adjacency bitmasks
# =============================================================================

def contains_biclique(a: AdjacencyGraph, s: int, t: int) -> bool:
    """True iff some s-set has at least t common neighbors outside itself."""
    if s < 1 or t < 1:
        raise ValueError("parts must be >= 1")
    if a.n < s + t:
        return False
    full = (1 << a.n) - 1
    for subset in combinations(range(a.n), s):
        common = full
        picked = 0
        for v in subset:
            common &= a.rows[v]
            picked |= 1 << v
        if (common & ~picked).bit_count() >= t:
            return True
    return False


def biclique_sequence_bruteforce(a: AdjacencyGraph, cap: int) -> BicliqueSequence:
    """Entries 0..cap of the biclique sequence by common-neighborhood search."""
    if cap < 0:
        raise ValueError("cap must be >= 0")
    entries: list[float] = [a.n]
    full = (1 << a.n) - 1
    for s in range(1, cap + 1):
        if s > a.n:
            entries.append(NEG_INF)
            continue
        best = 0  # the edgeless biclique K_{s,0} always fits when s <= n
        for subset in combinations(range(a.n), s):
            common = full
            picked = 0
            for v in subset:
                common &= a.rows[v]
                picked |= 1 << v
            c = (common & ~picked).bit_count()
            if c > best:
                best = c
        entries.append(best)
    return BicliqueSequence(tuple(entries))


def extremal_bruteforce(
    n: int,
    p: BicliqueProfile,
    limit: int = DEFAULT_CATALOG_LIMIT,
) -> tuple[int, tuple[Cotree, ...]]:
    """Max edge count and all witnesses among n-vertex cographs fulfilling p."""
    best = -1
    witnesses: list[Cotree] = []
    for g in enumerate_cotrees(n, limit=limit).items:
        seq = biclique_sequence_bruteforce(to_adjacency(g), g.n)
        if not fulfills(seq, p):
            continue
        if g.edges > best:
            best = g.edges
            witnesses = [g]
        elif g.edges == best:
            witnesses.append(g)
    if best < 0:
        return -1, ()
    return best, tuple(sorted(witnesses))


# =============================================================================
# Census of all small graphs (completeness cross-check machinery)
# =============================================================================

def labeled_p4_free_count(n: int) -> int:
    """Number of labeled induced-P4-free graphs on n vertices.

    Filters all 2^C(n,2) edge masks with a vectorized per-quadruple pattern
    table; independent of the cotree machinery.
    """
    import numpy as np

    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 7:
        raise CapacityError("census limited to n <= 7")
    if n < 4:
        return 1 << (n * (n - 1) // 2)

    pairs = list(combinations(range(n), 2))
    pos = {pq: i for i, pq in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.uint32)
    has_p4 = np.zeros(masks.shape, dtype=bool)

    # 64-entry table: which 6-bit patterns on a fixed quadruple are a P4
    table = np.zeros(64, dtype=bool)
    quad_pairs = list(combinations(range(4), 2))
    for code in range(64):
        deg = [0, 0, 0, 0]
        m = 0
        for k, (i, j) in enumerate(quad_pairs):
            if code >> k & 1:
                deg[i] += 1
                deg[j] += 1
                m += 1
        table[code] = m == 3 and sorted(deg) == [1, 1, 2, 2]

    for quad in combinations(range(n), 4):
        code = np.zeros(masks.shape, dtype=np.uint8)
        for k, (i, j) in enumerate(quad_pairs):
            bit = pos[(quad[i], quad[j])]
            code |= ((masks >> bit) & 1).astype(np.uint8) << k
        has_p4 |= table[code]
    return int((~has_p4).sum())


def _mask_to_adjacency(n: int, mask: int) -> AdjacencyGraph:
    rows = [0] * n
    for k, (i, j) in enumerate(combinations(range(n), 2)):
        if mask >> k & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return AdjacencyGraph(n, tuple(rows))


def _degree_class_permutations(a: AdjacencyGraph):
    """Permutations preserving the degree partition, as vertex maps."""
    by_degree: dict[int, list[int]] = {}
    for v in range(a.n):
        by_degree.setdefault(a.degree(v), []).append(v)
    blocks = [tuple(vs) for _, vs in sorted(by_degree.items())]

    def rec(i: int, current: dict[int, int]):
        if i == len(blocks):
            yield dict(current)
            return
        block = blocks[i]
        for perm in permutations(block):
            for src, dst in zip(block, perm):
                current[src] = dst
            yield from rec(i + 1, current)
        for src in block:
            current.pop(src, None)

    yield from rec(0, {})


def _apply_permutation(a: AdjacencyGraph, perm: dict[int, int]) -> tuple[int, ...]:
    rows = [0] * a.n
    for v in range(a.n):
        r = a.rows[v]
        nv = perm[v]
        while r:
            u = (r & -r).bit_length() - 1
            r &= r - 1
            rows[nv] |= 1 << perm[u]
    return tuple(rows)


def automorphism_count(a: AdjacencyGraph) -> int:
    """|Aut(G)| by exhausting degree-class-preserving permutations."""
    return sum(1 for perm in _degree_class_permutations(a)
               if _apply_permutation(a, perm) == a.rows)


def _canonical_rows(a: AdjacencyGraph) -> tuple[int, ...]:
    # sort vertices by degree first; isomorphisms then act within blocks
    order = sorted(range(a.n), key=a.degree)
    base = {v: i for i, v in enumerate(order)}
    sorted_graph = AdjacencyGraph(a.n, _apply_permutation(a, base))
    return min(_apply_permutation(sorted_graph, perm)
               for perm in _degree_class_permutations(sorted_graph))


def count_p4_free_classes_bruteforce(n: int) -> int:
    """Unlabeled induced-P4-free graphs on n vertices via isomorphism rejection.

    Every edge mask is filtered for induced P4s, then reduced to a canonical
    labeling (degree-sequence bucketing, exhaustive permutations within
    degree blocks).  Feasible up to n = 6.
    """
    if n > 6:
        raise CapacityError("exhaustive isomorphism rejection limited to n <= 6")
    seen: set[tuple[int, ...]] = set()
    for mask in range(1 << (n * (n - 1) // 2)):
        a = _mask_to_adjacency(n, mask)
        if not is_induced_p4_free(a):
            continue
        seen.add(_canonical_rows(a))
    return len(seen)


def orbit_count_identity(n: int, limit: int = DEFAULT_CATALOG_LIMIT) -> tuple[int, int]:
    """(sum over catalog of n!/|Aut|, labeled P4-free count).

    Equality of the two numbers certifies the catalog is complete and free
    of duplicates: a missing class undercounts the left side, a duplicate
    or spurious entry overcounts it.
    """
    catalog = enumerate_cotrees(n, limit=limit)
    fact = math.factorial(n)
    lhs = 0
    for g in catalog.items:
        lhs += fact // automorphism_count(to_adjacency(g))
    return lhs, labeled_p4_free_count(n)


# =============================================================================
# Theorem spot checks
# =============================================================================

@dataclass
class CheckResult:
    name: str
    params: dict
    passed: bool
    detail: str = ""
    counterexamples: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "params": self.params,
            "passed": self.passed,
            "detail": self.detail,
            "counterexamples": self.counterexamples,
        }


def check_balanced_biclique(n: int, limit: int = DEFAULT_CATALOG_LIMIT) -> CheckResult:
    """Every n-vertex cograph or its complement contains K_{t,t}, t = n//6 + 1.

    Degenerate at n = 1: the single vertex has no K_{1,1} on either side.
    """
    t = n // 6 + 1
    bad = []
    for g in enumerate_cotrees(n, limit=limit).items:
        a = to_adjacency(g)
        if not (contains_biclique(a, t, t) or contains_biclique(a.complement(), t, t)):
            bad.append(canonical_form(g).decode("ascii"))
    return CheckResult(
        name="balanced-biclique",
        params={"n": n, "t": t},
        passed=not bad,
        detail=f"checked {len(enumerate_cotrees(n, limit=limit).items)} cographs",
        counterexamples=bad,
    )


def _universal_vertex_count(a: AdjacencyGraph) -> int:
    return sum(1 for v in range(a.n) if a.degree(v) == a.n - 1)


def _is_sum_of_cliques(g: Cotree) -> bool:
    for comp in (g.children if g.kind == "sum" else (g,)):
        if comp.kind == "leaf":
            continue
        if comp.kind != "prod" or any(c.kind != "leaf" for c in comp.children):
            return False
    return True


def _has_edge_times_cliques_shape(g: Cotree) -> bool:
    """Product of an edge with a sum of cliques (cliques themselves count)."""
    if g.kind != "prod":
        return False
    leaves = [c for c in g.children if c.kind == "leaf"]
    rest = [c for c in g.children if c.kind != "leaf"]
    if len(leaves) < 2:
        return False
    if not rest:
        return True  # a clique
    return len(rest) == 1 and _is_sum_of_cliques(rest[0])


def check_star_extremal_regular(n: int, t: int,
                                limit: int = DEFAULT_CATALOG_LIMIT) -> CheckResult:
    """Shape of K_{1,t}-extremal cographs: (t-1)-regular, or regular plus one
    connected remainder of at most 2t-3 vertices."""
    from .profile import forbidden_biclique_profile

    _, witnesses = extremal_bruteforce(n, forbidden_biclique_profile(1, t), limit=limit)
    bad = []
    even_all_regular = True
    for g in witnesses:
        a = to_adjacency(g)
        degs = set(a.degree_sequence())
        if degs == {t - 1}:
            continue
        even_all_regular = False
        comps = g.children if g.kind == "sum" else (g,)
        irregular = [c for c in comps
                     if set(to_adjacency(c).degree_sequence()) != {t - 1}]
        if len(irregular) > 1 or any(c.n > 2 * t - 3 for c in irregular):
            bad.append(canonical_form(g).decode("ascii"))
    if n % 2 == 0 and n >= t and not even_all_regular:
        bad.append(f"non-regular witness on even n={n}")
    return CheckResult(
        name="star-extremal-shape",
        params={"n": n, "t": t},
        passed=not bad,
        detail=f"{len(witnesses)} extremal witnesses",
        counterexamples=bad,
    )


def check_universal_vertex(n: int, t: int,
                           limit: int = DEFAULT_CATALOG_LIMIT) -> CheckResult:
    """Every K_{2,t}-extremal cograph (t in {2,3}) has a universal vertex."""
    from .profile import forbidden_biclique_profile

    _, witnesses = extremal_bruteforce(n, forbidden_biclique_profile(2, t), limit=limit)
    bad = [canonical_form(g).decode("ascii") for g in witnesses
           if _universal_vertex_count(to_adjacency(g)) == 0]
    return CheckResult(
        name="universal-vertex",
        params={"n": n, "t": t},
        passed=not bad,
        detail=f"{len(witnesses)} extremal witnesses",
        counterexamples=bad,
    )


def check_k33_shape(n: int, limit: int = DEFAULT_CATALOG_LIMIT) -> CheckResult:
    """Some K_{3,3}-extremal cograph is an edge joined to a sum of cliques."""
    from .profile import forbidden_biclique_profile

    _, witnesses = extremal_bruteforce(n, forbidden_biclique_profile(3, 3), limit=limit)
    shaped = [g for g in witnesses if _has_edge_times_cliques_shape(g)]
    two_universal = [g for g in witnesses
                     if _universal_vertex_count(to_adjacency(g)) >= 2]
    ok = bool(shaped) and bool(two_universal)
    return CheckResult(
        name="k33-extremal-shape",
        params={"n": n},
        passed=ok,
        detail=(f"{len(witnesses)} witnesses, {len(shaped)} edge-x-cliques shaped, "
                f"{len(two_universal)} with two universal vertices"),
        counterexamples=[] if ok else [canonical_form(g).decode("ascii") for g in witnesses],
    )


def _min_factor_size(comp: Cotree) -> int:
    """Smallest join-factor size of a connected cograph (1 for a vertex)."""
    if comp.kind == "leaf":
        return 1
    return min(c.n for c in comp.children)


def check_lifting_decomposition(n: int, s: int, t: int,
                                limit: int = DEFAULT_CATALOG_LIMIT) -> CheckResult:
    """Extremal witnesses decompose into products with small minimal factors.

    For each witness: every component's minimal factor size is < t; for each
    j in 1..s-1, at most one component has minimal factor size j; components
    splittable into two factors of >= s vertices each have <= 2(t-1) vertices.
    """
    from .profile import forbidden_biclique_profile

    _, witnesses = extremal_bruteforce(n, forbidden_biclique_profile(s, t), limit=limit)
    bad = []
    for g in witnesses:
        comps = g.children if g.kind == "sum" else (g,)
        sigma = [_min_factor_size(c) for c in comps]
        if any(x >= t for x in sigma):
            bad.append("factor>=t: " + canonical_form(g).decode("ascii"))
            continue
        for j in range(1, s):
            if sigma.count(j) > 1:
                bad.append(f"fiber {j} repeated: " + canonical_form(g).decode("ascii"))
                break
        for c in comps:
            if c.kind != "prod":
                continue
            sizes = [ch.n for ch in c.children]
            if _balanced_split_exists(sizes, s) and c.n > 2 * (t - 1):
                bad.append("oversized product component: "
                           + canonical_form(g).decode("ascii"))
                break
    return CheckResult(
        name="lifting-decomposition",
        params={"n": n, "s": s, "t": t},
        passed=not bad,
        detail=f"{len(witnesses)} extremal witnesses",
        counterexamples=bad,
    )


def _balanced_split_exists(sizes: list[int], s: int) -> bool:
    """Can the factor sizes split into two groups of at least s vertices each?"""
    total = sum(sizes)
    if total < 2 * s:
        return False
    reachable = {0}
    for x in sizes:
        reachable |= {r + x for r in reachable}
    return any(s <= r <= total - s for r in reachable)


def check_structure_theorems(
    n_range,
    which: str = "all",
    limit: int = DEFAULT_CATALOG_LIMIT,
) -> dict:
    """Run the selected structural checks over a range of vertex counts.

    ``which`` is one of ``all``, ``stars``, ``universal``, ``k33``,
    ``lifting``.  Returns a JSON-ready report.
    """
    selected = {"stars", "universal", "k33", "lifting"} if which == "all" else {which}
    results: list[CheckResult] = []
    for n in n_range:
        if "stars" in selected and n >= 3:
            results.append(check_star_extremal_regular(n, 3, limit=limit))
        if "universal" in selected:
            for t in (2, 3):
                results.append(check_universal_vertex(n, t, limit=limit))
        if "k33" in selected and n >= 2:
            results.append(check_k33_shape(n, limit=limit))
        if "lifting" in selected:
            for s, t in ((2, 2), (2, 3), (3, 3)):
                results.append(check_lifting_decomposition(n, s, t, limit=limit))
    return {
        "which": which,
        "passed": all(r.passed for r in results),
        "checks": [r.to_json() for r in results],
    }
