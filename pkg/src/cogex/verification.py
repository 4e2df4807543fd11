"""Cross-checks wiring the DP, the constructions, and the brute-force oracle.

Each check returns a CheckResult; the CLI ``verify`` subcommand and the
acceptance tests both run these.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .constructions import (
    clique_product_family,
    k2t_extremal,
    k33_extremal,
    pump,
    regular_cograph,
    regular_infeasibility_reason,
    star_extremal,
)
from .cotree import (
    SUM,
    Cotree,
    biclique_sequence,
    canonical_form,
    check_sequence_invariants,
    clique_number,
    complement,
    height,
    is_induced_p4_free,
    make_product,
    to_adjacency,
    to_formula,
)
from .enumerator import extremal_function
from .oracle import (
    CheckResult,
    biclique_sequence_bruteforce,
    contains_biclique,
    enumerate_cotrees,
    extremal_bruteforce,
    random_cotree,
)
from .profile import (
    alpha_for,
    forbidden_biclique_profile,
    fulfills,
    restrict,
)

SMALL_PAIRS = ((1, 2), (1, 3), (2, 2), (2, 3), (3, 3))


def _pmap(fn: Callable, items: Iterable, threads: int = 1) -> list:
    items = list(items)
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def verify_sequences(n_max: int = 7, threads: int = 1) -> CheckResult:
    """Cotree sequence recursion == brute-force search, all cographs <= n_max."""
    bad = []
    total = 0
    for n in range(1, n_max + 1):
        items = enumerate_cotrees(n, limit=max(10, n_max)).items
        total += len(items)

        def one(g: Cotree) -> str | None:
            rec = biclique_sequence(g, g.n)
            bf = biclique_sequence_bruteforce(to_adjacency(g), g.n)
            if rec != bf:
                return canonical_form(g).decode("ascii")
            check_sequence_invariants(rec)
            return None

        bad.extend(x for x in _pmap(one, items, threads) if x)
    return CheckResult("sequences", {"n_max": n_max}, not bad,
                       f"{total} cographs", bad)


def verify_fulfillment_agreement(
    n_max: int = 7,
    pairs: Sequence[tuple[int, int]] = ((2, 2), (2, 3), (3, 3)),
    threads: int = 1,
) -> CheckResult:
    """Profile fulfillment == absence of the biclique, by direct search."""
    bad = []
    for n in range(1, n_max + 1):
        items = enumerate_cotrees(n, limit=max(10, n_max)).items

        def one(g: Cotree) -> str | None:
            a = to_adjacency(g)
            seq = biclique_sequence(g, g.n)
            for s, t in pairs:
                want = not contains_biclique(a, s, t)
                got = fulfills(seq, forbidden_biclique_profile(s, t))
                if want != got:
                    return f"({s},{t}) {canonical_form(g).decode('ascii')}"
            return None

        bad.extend(x for x in _pmap(one, items, threads) if x)
    return CheckResult("fulfillment-agreement",
                       {"n_max": n_max, "pairs": list(map(list, pairs))},
                       not bad, "", bad)


def verify_dp_vs_oracle(s: int, t: int, n_max: int = 9) -> CheckResult:
    """extremal_function values == brute force over the whole catalog."""
    series = extremal_function(s, t, range(1, n_max + 1))
    p = forbidden_biclique_profile(s, t)
    bad = []
    for n in range(1, n_max + 1):
        brute, _ = extremal_bruteforce(n, p, limit=max(10, n_max))
        if series.values.get(n) != brute:
            bad.append(f"n={n}: dp={series.values.get(n)} brute={brute}")
    return CheckResult("dp-vs-oracle", {"s": s, "t": t, "n_max": n_max},
                       not bad, "", bad)


def verify_strict_bound(s: int, t: int, n_max: int = 30) -> CheckResult:
    """ex(n) < (s - 1 + (t-1)/2) * n for every computed n (s >= 2)."""
    if s < 2:
        raise ValueError("the strict bound is claimed for s >= 2 only")
    series = extremal_function(s, t, range(1, n_max + 1))
    alpha = alpha_for(s, t)
    bad = [f"n={n}: ex={ex} >= {alpha * n}"
           for n, ex in sorted(series.values.items())
           if not Fraction(ex) < alpha * n]
    return CheckResult("strict-bound", {"s": s, "t": t, "n_max": n_max,
                                        "alpha": str(alpha)}, not bad, "", bad)


def verify_bound_2t(t: int, n_max: int = 20) -> CheckResult:
    """ex(n, K_{2,t}) < (t+1)/2 * n on the computed range."""
    res = verify_strict_bound(2, t, n_max)
    res.name = "bound-2t"
    return res


def verify_restriction_transport(
    g1_max: int = 3,
    g2_max: int = 5,
    pairs: Sequence[tuple[int, int]] = ((2, 2), (2, 3), (3, 3)),
) -> CheckResult:
    """G1 x G2 fulfills p  <=>  G2 fulfills restrict(p, S(G1)), exhaustively."""
    bad = []
    count = 0
    g1s = [g for n in range(1, g1_max + 1)
           for g in enumerate_cotrees(n).items]
    g2s = [g for n in range(1, g2_max + 1)
           for g in enumerate_cotrees(n).items]
    for s, t in pairs:
        p = forbidden_biclique_profile(s, t)
        for g1 in g1s:
            s1 = biclique_sequence(g1, g1.n)
            restricted = restrict(p, s1)
            for g2 in g2s:
                count += 1
                prod = make_product([g1, g2])
                lhs = fulfills(biclique_sequence(prod, prod.n), p)
                rhs = fulfills(biclique_sequence(g2, g2.n), restricted)
                if lhs != rhs:
                    bad.append(f"({s},{t}) {to_formula(g1)} x {to_formula(g2)}: "
                               f"product={lhs} restricted={rhs}")
    return CheckResult("restriction-transport",
                       {"g1_max": g1_max, "g2_max": g2_max}, not bad,
                       f"{count} combinations", bad)


def verify_regular_constructor(n_max: int = 40, exhaustive_max: int = 9) -> CheckResult:
    """Regularity of every feasible output; feasibility table matches
    exhaustive search for small n.  The table is included in the detail."""
    bad = []
    feasibility: dict[int, list[int]] = {}
    for n in range(1, n_max + 1):
        feasible_ds = []
        for d in range(n):
            g = regular_cograph(n, d)
            if g is None:
                if regular_infeasibility_reason(n, d) is None:
                    bad.append(f"({n},{d}): no reason but returned infeasible")
                continue
            feasible_ds.append(d)
            a = to_adjacency(g, limit=max(16, n))
            if a.n != n or set(a.degree_sequence()) != {d}:
                bad.append(f"({n},{d}): output not {d}-regular")
            if n <= 9 and not is_induced_p4_free(a):
                bad.append(f"({n},{d}): expansion not a cograph")
        feasibility[n] = feasible_ds
    for n in range(1, exhaustive_max + 1):
        found = set()
        for g in enumerate_cotrees(n, limit=max(10, exhaustive_max)).items:
            degs = set(to_adjacency(g).degree_sequence())
            if len(degs) == 1:
                found.add(next(iter(degs)))
        if sorted(found) != feasibility[n]:
            bad.append(f"n={n}: constructor degrees {feasibility[n]} "
                       f"!= exhaustive {sorted(found)}")
    table = "; ".join(f"{n}:{ds}" for n, ds in feasibility.items() if n <= 12)
    return CheckResult("regular-constructor",
                       {"n_max": n_max, "exhaustive_max": exhaustive_max},
                       not bad, f"feasible degrees {table} ...", bad)


def verify_pareto_safety(
    n_max: int = 8,
    pairs: Sequence[tuple[int, int]] = SMALL_PAIRS,
) -> CheckResult:
    """Pareto-filtered and exhaustive DP agree on every extremal value."""
    bad = []
    for s, t in pairs:
        filtered = extremal_function(s, t, range(1, n_max + 1))
        full = extremal_function(s, t, range(1, n_max + 1), exhaustive=True)
        for n in range(1, n_max + 1):
            if filtered.values.get(n) != full.values.get(n):
                bad.append(f"({s},{t}) n={n}: filtered={filtered.values.get(n)} "
                           f"exhaustive={full.values.get(n)}")
    return CheckResult("pareto-safety",
                       {"n_max": n_max, "pairs": list(map(list, pairs))},
                       not bad, "", bad)


def verify_constructions_meet_optimum(n_max: int = 9) -> CheckResult:
    """star/k2t/k33 families reach the brute-force optimum at every n."""
    bad = []
    for n in range(1, n_max + 1):
        for t in (2, 3):
            want, _ = extremal_bruteforce(n, forbidden_biclique_profile(1, t),
                                          limit=max(10, n_max))
            g = star_extremal(t, n)
            if g.edges != want or g.n != n:
                bad.append(f"star({t},{n}): {g.edges} != {want}")
        if n >= 2:
            for t in (2, 3):
                want, _ = extremal_bruteforce(n, forbidden_biclique_profile(2, t),
                                              limit=max(10, n_max))
                g = k2t_extremal(t, n)
                seq = biclique_sequence(g, g.n)
                if (g.edges != want or g.n != n
                        or not fulfills(seq, forbidden_biclique_profile(2, t))):
                    bad.append(f"k2t({t},{n}): {g.edges} != {want}")
            want, _ = extremal_bruteforce(n, forbidden_biclique_profile(3, 3),
                                          limit=max(10, n_max))
            g = k33_extremal(n)
            if g.edges != want or g.n != n:
                bad.append(f"k33({n}): {g.edges} != {want}")
    return CheckResult("constructions-optimum", {"n_max": n_max}, not bad, "", bad)


def verify_clique_product_formula(max_r: int = 6,
                                  pairs: Sequence[tuple[int, int]] = ((2, 2), (2, 3), (3, 3), (3, 4), (4, 5))) -> CheckResult:
    """Closed-form edge count of the K_{s-1} x (r K_t) family, exactly."""
    bad = []
    for s, t in pairs:
        for r in range(0, max_r + 1):
            if s == 1 and r == 0:
                continue
            g = clique_product_family(s, t, r)
            nv = s - 1 + r * t
            expected = Fraction((s - 1) * (s - 2), 2) \
                + alpha_for(s, t) * (nv - s + 1)
            if g.n != nv or Fraction(g.edges) != expected:
                bad.append(f"({s},{t},{r}): n={g.n} edges={g.edges} expected {expected}")
            if not fulfills(biclique_sequence(g, g.n),
                            forbidden_biclique_profile(s, t)):
                bad.append(f"({s},{t},{r}): family not K_{{{s},{t}}}-free")
    return CheckResult("clique-product-formula", {"max_r": max_r}, not bad, "", bad)


def verify_pump_invariants(seed: int = 20240817, trials: int = 120,
                           pairs: Sequence[tuple[int, int]] = ((2, 2), (2, 3), (3, 3))) -> CheckResult:
    """Pumping arithmetic and profile stability on random small cores.

    Vertex/edge growth follows |g| + k|H| and ||g|| + k(||H|| + |H| w) with
    w the summand's outside neighborhood; pumping a summand whose outside
    neighborhood has fewer than s vertices preserves K_{s,t}-freeness.
    """
    rng = random.Random(seed)
    bad = []
    tried = 0
    while tried < trials:
        g = random_cotree(rng, rng.randint(3, 9))
        paths = _summand_paths(g)
        if not paths:
            continue
        tried += 1
        path, child, w = paths[rng.randrange(len(paths))]
        k = rng.randint(1, 2)
        pumped = pump(g, path, k)
        if pumped.n != g.n + k * child.n:
            bad.append(f"vertex growth {to_formula(g)} at {path}")
            continue
        if pumped.edges != g.edges + k * (child.edges + child.n * w):
            bad.append(f"edge growth {to_formula(g)} at {path}")
            continue
        for s, t in pairs:
            if w >= s:
                continue
            p = forbidden_biclique_profile(s, t)
            if fulfills(biclique_sequence(g, g.n), p) and not fulfills(
                    biclique_sequence(pumped, pumped.n), p):
                bad.append(f"({s},{t}) fulfillment lost: {to_formula(g)} at {path}")
    return CheckResult("pump-invariants", {"seed": seed, "trials": trials},
                       not bad, f"{tried} pumps", bad)


def _summand_paths(g: Cotree) -> list[tuple[tuple[int, ...], Cotree, int]]:
    """(path, summand, outside-neighborhood size) for every sum child."""
    out = []

    def walk(node: Cotree, path: tuple[int, ...], joined: int) -> None:
        if node.kind == "leaf":
            return
        for idx, c in enumerate(node.children):
            child_joined = joined + (node.n - c.n if node.kind == "prod" else 0)
            if node.kind == SUM:
                out.append((path + (idx,), c, joined))
            walk(c, path + (idx,), child_joined)

    walk(g, (), 0)
    return out


def verify_height_bound(n_max: int = 7, seed: int = 7, trials: int = 200) -> CheckResult:
    """height(g) <= 2 * clique_number(g) + 1, exhaustive then randomized."""
    bad = []
    for n in range(1, n_max + 1):
        for g in enumerate_cotrees(n).items:
            if height(g) > 2 * clique_number(g) + 1:
                bad.append(canonical_form(g).decode("ascii"))
    rng = random.Random(seed)
    for _ in range(trials):
        g = random_cotree(rng, rng.randint(1, 14))
        if height(g) > 2 * clique_number(g) + 1:
            bad.append(canonical_form(g).decode("ascii"))
    return CheckResult("height-bound", {"n_max": n_max, "trials": trials},
                       not bad, "", bad)


def verify_complement_involution(n_max: int = 7) -> CheckResult:
    """complement is an involution and edge counts are complementary."""
    bad = []
    for n in range(1, n_max + 1):
        for g in enumerate_cotrees(n).items:
            c = complement(g)
            if complement(c) != g or g.edges + c.edges != n * (n - 1) // 2:
                bad.append(canonical_form(g).decode("ascii"))
    return CheckResult("complement-involution", {"n_max": n_max}, not bad, "", bad)


def run_suite(
    which: str = "all",
    small: bool = False,
    seed: int = 20240817,
    threads: int = 1,
    n: int | None = None,
    n_max: int | None = None,
    s: int | None = None,
    t: int | None = None,
    catalog_max: int | None = None,
) -> dict:
    """Dispatch for the CLI verify subcommand; returns a JSON-ready report."""
    from .cotree import CapacityError
    from .oracle import check_balanced_biclique, check_structure_theorems

    catalog_backed = {"all", "balanced-biclique", "sequences", "profiles",
                      "dp-vs-oracle", "structure", "restriction", "regular",
                      "constructions"}
    if catalog_max is not None and which in catalog_backed:
        requested = max(x for x in (n, n_max, 9) if x is not None)
        if requested > catalog_max:
            raise CapacityError(
                f"requested n up to {requested} exceeds --catalog-max {catalog_max}")

    results: list[CheckResult] = []
    if which in ("balanced-biclique", "all"):
        hi = n or n_max or (8 if small else 9)
        for k in range(2, hi + 1):
            results.append(check_balanced_biclique(k))
    if which in ("sequences", "all"):
        results.append(verify_sequences(n_max or (6 if small else 7), threads=threads))
    if which in ("profiles", "all"):
        results.append(verify_fulfillment_agreement(n_max or (6 if small else 7),
                                                    threads=threads))
    if which in ("dp-vs-oracle", "all"):
        todo = [(s, t)] if s and t else list(SMALL_PAIRS)
        for ss, tt in todo:
            results.append(verify_dp_vs_oracle(ss, tt, n_max or (7 if small else 8)))
    if which == "bound-2t":
        results.append(verify_bound_2t(t or 3, n_max or 20))
    if which in ("bounds", "all"):
        for ss, tt in ((2, 2), (2, 3), (3, 3)):
            results.append(verify_strict_bound(ss, tt, n_max or (20 if small else 30)))
    if which in ("structure", "all"):
        hi = n_max or (7 if small else 8)
        report = check_structure_theorems(range(2, hi + 1))
        for c in report["checks"]:
            results.append(CheckResult(c["check"], c["params"], c["passed"],
                                       c["detail"], c["counterexamples"]))
    if which in ("restriction", "all"):
        results.append(verify_restriction_transport(3, 4 if small else 5))
    if which in ("regular", "all"):
        results.append(verify_regular_constructor(20 if small else 40,
                                                  8 if small else 9))
    if which in ("pareto", "all"):
        results.append(verify_pareto_safety(6 if small else 8))
    if which in ("constructions", "all"):
        results.append(verify_constructions_meet_optimum(8 if small else 9))
        results.append(verify_clique_product_formula())
    if which in ("pump", "all"):
        results.append(verify_pump_invariants(seed=seed, trials=60 if small else 120))
    if which in ("invariants", "all"):
        results.append(verify_height_bound(6 if small else 7))
        results.append(verify_complement_involution(6 if small else 7))
    if not results:
        raise ValueError(f"unknown check selector: {which!r}")
    return {
        "selector": which,
        "passed": all(r.passed for r in results),
        "checks": [r.to_json() for r in results],
    }
