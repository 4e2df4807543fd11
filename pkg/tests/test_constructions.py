"""Families and transformations against the oracle and closed formulas."""

import random
from fractions import Fraction

import pytest

from cogex.constructions import (
    clique_product_family,
    davenport_subsequence,
    k2t_extremal,
    k33_extremal,
    pump,
    pump_subset,
    regular_cograph,
    regular_infeasibility_reason,
    star_extremal,
)
from cogex.cotree import (
    biclique_sequence,
    clique,
    is_induced_p4_free,
    to_adjacency,
)
from cogex.oracle import enumerate_cotrees, extremal_bruteforce
from cogex.profile import alpha_for, forbidden_biclique_profile, fulfills


def _sum_child_path(g):
    for i, c in enumerate(g.children):
        if c.kind == "sum":
            return i
    raise AssertionError("no sum child")


def test_pump_example(k2_join_two_triangles):
    g = k2_join_two_triangles
    i = _sum_child_path(g)
    pumped = pump(g, (i, 0), 1)
    assert pumped.n == 11
    assert pumped.edges == 28


def test_pump_zero_is_identity(k2_join_two_triangles):
    g = k2_join_two_triangles
    i = _sum_child_path(g)
    assert pump(g, (i, 0), 0) == g


def test_pump_rejects_non_summand(k2_join_two_triangles):
    g = k2_join_two_triangles
    leaf_idx = next(i for i, c in enumerate(g.children) if c.kind == "leaf")
    with pytest.raises(ValueError):
        pump(g, (leaf_idx,), 1)  # product child, not a summand
    with pytest.raises(ValueError):
        pump(g, (), 1)


def test_pump_growth_formula():
    rng = random.Random(41)
    from cogex.verification import _summand_paths
    from cogex.oracle import random_cotree

    done = 0
    while done < 60:
        g = random_cotree(rng, rng.randint(3, 9))
        paths = _summand_paths(g)
        if not paths:
            continue
        done += 1
        path, child, w = paths[rng.randrange(len(paths))]
        k = rng.randint(1, 3)
        pumped = pump(g, path, k)
        assert pumped.n == g.n + k * child.n
        assert pumped.edges == g.edges + k * (child.edges + child.n * w)


def test_pump_subset_validator(k2_join_two_triangles):
    g = k2_join_two_triangles
    # leaves of one triangle summand share their outside neighborhood
    offsets = []
    pos = 0
    for c in g.children:
        offsets.append((pos, c))
        pos += c.n
    start = next(o for o, c in offsets if c.kind == "sum")
    pumped = pump_subset(g, [start, start + 1, start + 2], 1)
    assert pumped.n == 11 and pumped.edges == 28
    # the two joined vertices are not a summand
    with pytest.raises(ValueError):
        pump_subset(g, [0], 1)


def test_regular_examples():
    g = regular_cograph(4, 2)
    assert set(to_adjacency(g).degree_sequence()) == {2}
    assert regular_cograph(5, 2) is None
    assert "2d = n-1" in regular_infeasibility_reason(5, 2)
    assert regular_cograph(5, 3) is None
    assert "odd" in regular_infeasibility_reason(5, 3)
    g = regular_cograph(7, 4)
    assert set(to_adjacency(g).degree_sequence()) == {4}


def test_regular_single_vertex():
    assert regular_cograph(1, 0).n == 1


def test_regular_rejects_bad_arguments():
    with pytest.raises(ValueError):
        regular_cograph(4, 4)
    with pytest.raises(ValueError):
        regular_cograph(0, 0)


def test_regular_sweep_to_40():
    for n in range(1, 41):
        for d in range(n):
            g = regular_cograph(n, d)
            if g is None:
                assert regular_infeasibility_reason(n, d) is not None, (n, d)
                continue
            a = to_adjacency(g, limit=64)
            assert a.n == n and set(a.degree_sequence()) == {d}, (n, d)


def test_regular_feasibility_matches_exhaustive():
    for n in range(1, 10):
        found = set()
        for g in enumerate_cotrees(n).items:
            degs = set(to_adjacency(g).degree_sequence())
            if len(degs) == 1:
                found.add(next(iter(degs)))
        constructed = {d for d in range(n) if regular_cograph(n, d) is not None}
        assert constructed == found, n


def test_clique_product_family_examples():
    g = clique_product_family(3, 3, 2)
    assert (g.n, g.edges) == (8, 19)
    g = clique_product_family(2, 2, 3)
    assert (g.n, g.edges) == (7, 9)
    assert clique_product_family(3, 3, 0) == clique(2)
    with pytest.raises(ValueError):
        clique_product_family(3, 2, 1)
    with pytest.raises(ValueError):
        clique_product_family(1, 2, 0)


def test_clique_product_formula_and_freeness():
    for s in range(1, 5):
        for t in range(s, 6):
            for r in range(0, 5):
                if s == 1 and r == 0:
                    continue
                g = clique_product_family(s, t, r)
                n = s - 1 + r * t
                expected = Fraction((s - 1) * (s - 2), 2) + alpha_for(s, t) * (n - s + 1)
                assert g.n == n
                assert Fraction(g.edges) == expected
                assert fulfills(biclique_sequence(g, g.n),
                                forbidden_biclique_profile(s, t))


def test_star_extremal_examples():
    g = star_extremal(3, 6)
    assert g.edges == 6
    assert set(to_adjacency(g).degree_sequence()) == {2}
    assert star_extremal(3, 5).edges == 4
    assert star_extremal(3, 2) == clique(2)  # n < t gives a clique


def test_star_extremal_meets_oracle():
    for t in (2, 3, 4):
        for n in range(1, 10):
            want, _ = extremal_bruteforce(n, forbidden_biclique_profile(1, t))
            g = star_extremal(t, n)
            assert g.n == n and g.edges == want, (t, n)
            assert fulfills(biclique_sequence(g, g.n),
                            forbidden_biclique_profile(1, t))


def test_k2t_examples():
    assert k2t_extremal(2, 5).edges == 6
    assert k2t_extremal(3, 7).edges == 12
    assert k2t_extremal(3, 6).edges == 9
    with pytest.raises(ValueError):
        k2t_extremal(4, 6)


def test_k2t_meets_oracle():
    for t in (2, 3):
        for n in range(2, 10):
            want, _ = extremal_bruteforce(n, forbidden_biclique_profile(2, t))
            g = k2t_extremal(t, n)
            assert g.n == n and g.edges == want, (t, n)
            assert fulfills(biclique_sequence(g, g.n),
                            forbidden_biclique_profile(2, t))


def test_k33_examples():
    assert k33_extremal(8).edges == 19
    assert k33_extremal(9).edges == 21
    assert k33_extremal(2) == clique(2)
    with pytest.raises(ValueError):
        k33_extremal(1)


def test_k33_meets_oracle():
    for n in range(2, 10):
        want, _ = extremal_bruteforce(n, forbidden_biclique_profile(3, 3))
        g = k33_extremal(n)
        assert g.n == n and g.edges == want, n
        assert fulfills(biclique_sequence(g, g.n), forbidden_biclique_profile(3, 3))


def test_constructions_are_cographs():
    graphs = [star_extremal(3, 9), k2t_extremal(3, 9), k33_extremal(9),
              clique_product_family(3, 4, 2), regular_cograph(8, 4)]
    for g in graphs:
        assert is_induced_p4_free(to_adjacency(g, limit=16))


def test_davenport_examples():
    assert davenport_subsequence([1, 1, 1], 3) == [0, 1, 2]
    idx = davenport_subsequence([2, 3, 4, 5], 4)
    assert idx and sum([2, 3, 4, 5][i] for i in idx) % 4 == 0
    assert davenport_subsequence([5], 1) == [0]
    with pytest.raises(ValueError):
        davenport_subsequence([1, 2], 3)


def test_davenport_randomized():
    rng = random.Random(8)
    for _ in range(300):
        n = rng.randint(1, 12)
        values = [rng.randint(-50, 50) for _ in range(rng.randint(n, n + 4))]
        idx = davenport_subsequence(values, n)
        assert idx == sorted(set(idx)) and idx
        assert max(idx) < n
        assert sum(values[i] for i in idx) % n == 0
