"""Reduced cotrees: the cograph data model.

A cograph is built from single vertices by two operations, the sum
(disjoint union) and the product (join).  The construction is recorded as
a rooted tree whose inner nodes are labeled ``sum`` or ``prod`` and whose
leaves are the graph's vertices.  We keep trees *reduced* (no sum node has
a sum child, no product node a product child) and *canonical* (children
sorted by a recursive encoding), so two trees encode isomorphic cographs
exactly when their encodings are equal.

Everything here is immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

NEG_INF = float("-inf")
INF = float("inf")

LEAF = "leaf"
SUM = "sum"
PROD = "prod"

DEFAULT_ADJACENCY_LIMIT = 16


class CapacityError(RuntimeError):
    """A configured size limit would be exceeded."""


# =============================================================================
# Cotree
# =============================================================================

class Cotree:
    """Immutable reduced cotree node. Use make_leaf/make_sum/make_product."""

    __slots__ = ("kind", "children", "n", "edges", "_canon")

    def __init__(self, kind: str, children: tuple["Cotree", ...],
                 n: int, edges: int, canon: bytes):
        self.kind = kind
        self.children = children
        self.n = n
        self.edges = edges
        self._canon = canon

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Cotree) and self._canon == other._canon

    def __hash__(self) -> int:
        return hash(self._canon)

    def __lt__(self, other: "Cotree") -> bool:
        return self._canon < other._canon

    def __repr__(self) -> str:
        return f"Cotree({self._canon.decode('ascii')})"


_LEAF_CANON = b"*"
_OP_TAG = {SUM: b"+", PROD: b"x"}


def _build(kind: str, children: tuple[Cotree, ...], n: int, edges: int) -> Cotree:
    canon = _OP_TAG[kind] + b"(" + b",".join(c._canon for c in children) + b")"
    return Cotree(kind, children, n, edges, canon)


def make_leaf() -> Cotree:
    """The single-vertex cograph K_1."""
    return Cotree(LEAF, (), 1, 0, _LEAF_CANON)


def _make_inner(kind: str, children: Iterable[Cotree]) -> Cotree:
    kids = list(children)
    if not kids:
        raise ValueError(f"{kind} node needs at least one child")
    if len(kids) == 1:
        return kids[0]
    # reduction: splice in children of same-kind nodes
    flat: list[Cotree] = []
    for c in kids:
        if c.kind == kind:
            flat.extend(c.children)
        else:
            flat.append(c)
    flat.sort(key=lambda c: c._canon)
    n = sum(c.n for c in flat)
    edges = sum(c.edges for c in flat)
    if kind == PROD:
        # join adds all cross edges between distinct factors
        cross = (n * n - sum(c.n * c.n for c in flat)) // 2
        edges += cross
    return _build(kind, tuple(flat), n, edges)


def make_sum(children: Iterable[Cotree]) -> Cotree:
    """Disjoint union of the given cographs."""
    return _make_inner(SUM, children)


def make_product(children: Iterable[Cotree]) -> Cotree:
    """Join of the given cographs (all cross edges present)."""
    return _make_inner(PROD, children)


def leaf() -> Cotree:
    return make_leaf()


def clique(k: int) -> Cotree:
    """K_k."""
    if k < 1:
        raise ValueError("clique size must be >= 1")
    return make_product([make_leaf() for _ in range(k)])


def edgeless(k: int) -> Cotree:
    """E_k, the empty graph on k vertices."""
    if k < 1:
        raise ValueError("vertex count must be >= 1")
    return make_sum([make_leaf() for _ in range(k)])


def canonical_form(g: Cotree) -> bytes:
    """Deterministic encoding; equal iff the reduced cotrees are isomorphic."""
    return g._canon


def complement(g: Cotree) -> Cotree:
    """Cotree of the complement graph (sum and product labels swapped)."""
    if g.kind == LEAF:
        return g
    kids = [complement(c) for c in g.children]
    return make_sum(kids) if g.kind == PROD else make_product(kids)


def height(g: Cotree) -> int:
    """Maximum number of edges on a root-to-leaf path of the reduced tree."""
    if g.kind == LEAF:
        return 0
    return 1 + max(height(c) for c in g.children)


def clique_number(g: Cotree) -> int:
    """Clique number: max over sum children, additive over product children."""
    if g.kind == LEAF:
        return 1
    if g.kind == SUM:
        return max(clique_number(c) for c in g.children)
    return sum(clique_number(c) for c in g.children)


def max_degree(g: Cotree) -> int:
    """Maximum vertex degree, computed on the cotree."""
    if g.kind == LEAF:
        return 0
    if g.kind == SUM:
        return max(max_degree(c) for c in g.children)
    return max(max_degree(c) + g.n - c.n for c in g.children)


def is_connected(g: Cotree) -> bool:
    """A cograph is connected iff its root is a product (or a single vertex)."""
    return g.kind != SUM


def components(g: Cotree) -> tuple[Cotree, ...]:
    """Connectivity components as cotrees."""
    return g.children if g.kind == SUM else (g,)


def to_formula(g: Cotree) -> str:
    """Human-readable construction formula, e.g. ``(v*v*(K3+K3))``."""
    if g.kind == LEAF:
        return "v"
    if g.kind == PROD and all(c.kind == LEAF for c in g.children):
        return f"K{g.n}"
    if g.kind == SUM and all(c.kind == LEAF for c in g.children):
        return f"E{g.n}"
    sep = "+" if g.kind == SUM else "*"
    return "(" + sep.join(to_formula(c) for c in g.children) + ")"


def iter_subtrees(g: Cotree) -> Iterator[Cotree]:
    """All nodes of the tree in DFS preorder."""
    stack = [g]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


# =============================================================================
# AdjacencyGraph: dense expansion for small n
# =============================================================================

class AdjacencyGraph:
    """Symmetric loop-free adjacency matrix, rows stored as bitmasks."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: tuple[int, ...]):
        self.n = n
        self.rows = rows

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "AdjacencyGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge ({u}, {v}) for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def complement(self) -> "AdjacencyGraph":
        full = (1 << self.n) - 1
        rows = tuple((full & ~r) & ~(1 << v) for v, r in enumerate(self.rows))
        return AdjacencyGraph(self.n, rows)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self.rows))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1) << (u + 1)
            while r:
                v = (r & -r).bit_length() - 1
                out.append((u, v))
                r &= r - 1
        return out

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, AdjacencyGraph)
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"AdjacencyGraph(n={self.n}, m={self.edge_count()})"


def to_adjacency(g: Cotree, limit: int = DEFAULT_ADJACENCY_LIMIT) -> AdjacencyGraph:
    """Expand a cotree to its adjacency matrix.

    Leaves are numbered in DFS order over the canonical tree.  Guarded by
    ``limit`` because callers only ever need dense form at oracle scale.
    """
    if g.n > limit:
        raise CapacityError(f"adjacency expansion of {g.n} vertices exceeds limit {limit}")
    rows = [0] * g.n

    def fill(node: Cotree, offset: int) -> None:
        if node.kind == LEAF:
            return
        pos = offset
        spans = []
        for c in node.children:
            spans.append((pos, c.n))
            fill(c, pos)
            pos += c.n
        if node.kind == PROD:
            masks = [((1 << cn) - 1) << start for start, cn in spans]
            total = 0
            for m in masks:
                total |= m
            for m, (start, cn) in zip(masks, spans):
                other = total & ~m
                for v in range(start, start + cn):
                    rows[v] |= other

    fill(g, 0)
    return AdjacencyGraph(g.n, tuple(rows))


def edge_contribution(g: Cotree, leaf_ids: Iterable[int],
                      limit: int = DEFAULT_ADJACENCY_LIMIT) -> int:
    """Internal edges of the subset plus its cross edges to the rest.

    ``leaf_ids`` index vertices in the DFS leaf numbering used by
    ``to_adjacency``.
    """
    adj = to_adjacency(g, limit=limit)
    subset = 0
    for i in leaf_ids:
        if not 0 <= i < g.n:
            raise ValueError(f"leaf id {i} out of range for n={g.n}")
        subset |= 1 << i
    internal = 0
    degree_sum = 0
    v_mask = subset
    while v_mask:
        v = (v_mask & -v_mask).bit_length() - 1
        v_mask &= v_mask - 1
        degree_sum += adj.rows[v].bit_count()
        internal += (adj.rows[v] & subset).bit_count()
    internal //= 2
    # degree sum counts internal edges twice and cross edges once
    return degree_sum - internal


def is_induced_p4_free(a: AdjacencyGraph) -> bool:
    """True iff no 4 vertices induce a path; validates cograph expansions."""
    n = a.n
    rows = a.rows
    for quad in combinations(range(n), 4):
        deg = []
        m = 0
        for v in quad:
            sub = 0
            for u in quad:
                if u != v and rows[v] >> u & 1:
                    sub += 1
            deg.append(sub)
            m += sub
        # P_4 is the only 4-vertex graph with 3 edges and degrees {1,1,2,2}
        if m == 6 and sorted(deg) == [1, 1, 2, 2]:
            return False
    return True


# =============================================================================
# Biclique sequences
# =============================================================================

class BicliqueSequence:
    """Exact biclique sequence of a concrete cograph, entries 0..cap.

    ``entries[s]`` is the largest t such that the complete bipartite graph
    with part sizes s and t is a subgraph; the empty part convention makes
    ``entries[0]`` the vertex count and gives a floor of 0 whenever s <= n.
    Indices beyond the vertex count are minus infinity; if the stored window
    reaches that far the sequence is *complete* and indexing past the end is
    allowed.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: tuple[float, ...]):
        if not entries:
            raise ValueError("sequence needs at least entry 0")
        self.entries = entries

    @property
    def n(self) -> int:
        return int(self.entries[0])

    @property
    def cap(self) -> int:
        return len(self.entries) - 1

    @property
    def complete(self) -> bool:
        return self.cap >= self.n

    def __getitem__(self, i: int) -> float:
        if i < 0:
            raise IndexError(i)
        if i < len(self.entries):
            return self.entries[i]
        if self.complete:
            return NEG_INF
        raise IndexError(f"entry {i} not computed (cap={self.cap}, incomplete)")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BicliqueSequence) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"BicliqueSequence{self.entries}"


def _leaf_entries(cap: int) -> tuple[float, ...]:
    return (1, 0) + (NEG_INF,) * (cap - 1) if cap >= 1 else (1,)


def sum_entries(e1: tuple[float, ...], e2: tuple[float, ...], cap: int) -> tuple[float, ...]:
    """Entries 0..cap of the sequence of a disjoint union.

    For s >= 1 a biclique with both parts nonempty is connected, so the
    pointwise maximum applies; the t=0 level (edgeless bicliques) spans
    summands, hence the clamp to 0 up to the combined vertex count.
    """
    n = int(e1[0]) + int(e2[0])
    out: list[float] = [n]
    for s in range(1, cap + 1):
        m = e1[s] if e1[s] >= e2[s] else e2[s]
        if m < 0:
            m = 0 if s <= n else NEG_INF
        out.append(m)
    return tuple(out)


def product_entries(e1: tuple[float, ...], e2: tuple[float, ...], cap: int) -> tuple[float, ...]:
    """Entries 0..cap of the sequence of a join: max-plus convolution."""
    out: list[float] = []
    for s in range(cap + 1):
        best = NEG_INF
        for a in range(s + 1):
            x, y = e1[a], e2[s - a]
            if x == NEG_INF or y == NEG_INF:
                continue
            v = x + y
            if v > best:
                best = v
        out.append(best)
    return tuple(out)


def biclique_sequence(g: Cotree, cap: int) -> BicliqueSequence:
    """Entries 0..cap of the biclique sequence, by recursion on the cotree."""
    if cap < 0:
        raise ValueError("cap must be >= 0")

    def rec(node: Cotree) -> tuple[float, ...]:
        if node.kind == LEAF:
            return _leaf_entries(cap)
        parts = [rec(c) for c in node.children]
        acc = parts[0]
        for p in parts[1:]:
            acc = (sum_entries if node.kind == SUM else product_entries)(acc, p, cap)
        return acc

    return BicliqueSequence(rec(g))


def check_sequence_invariants(seq: BicliqueSequence) -> None:
    """Raise AssertionError if a computed sequence violates its invariants."""
    e = seq.entries
    n = seq.n
    for i in range(len(e) - 1):
        assert e[i] >= e[i + 1], f"not decreasing at {i}: {e}"
    for i, v in enumerate(e):
        if i > n:
            assert v == NEG_INF, f"entry {i} should be -inf for n={n}: {e}"
        else:
            assert v >= 0, f"entry {i} should be >= 0 for n={n}: {e}"
    # subdiagonality between finite entries: e[j] < l forces e[l] < j
    for j, vj in enumerate(e):
        if vj == NEG_INF:
            continue
        l = int(vj) + 1
        if l < len(e) and e[l] != NEG_INF:
            assert e[l] < j, f"not subdiagonal at ({j}, {l}): {e}"
