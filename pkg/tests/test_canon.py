"""Canonical keys: isomorphism invariance and completeness."""

import random
from itertools import permutations

import pytest

from oracles import all_pairs, perm_canonical_mask
from ramsey_p5.canon import CANON_MAX, OrderTooLarge, canonical_key
from ramsey_p5.graphs import Graph, complete, path_graph, star_graph


def relabel(g: Graph, perm: list[int]) -> Graph:
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_relabelled_k4_same_key():
    k4 = complete(4)
    for perm in permutations(range(4)):
        assert canonical_key(relabel(k4, list(perm))) == canonical_key(k4)


def test_p4_and_star_differ():
    assert canonical_key(path_graph(4)) != canonical_key(star_graph(4))


def test_eleven_classes_on_four_vertices():
    pairs = all_pairs(4)
    keys = set()
    for mask in range(1 << 6):
        edges = [pairs[k] for k in range(6) if mask >> k & 1]
        keys.add(canonical_key(Graph(4, edges)))
    assert len(keys) == 11


def test_order_cap():
    canonical_key(Graph(CANON_MAX))
    with pytest.raises(OrderTooLarge):
        canonical_key(Graph(CANON_MAX + 1))


def test_keys_distinguish_order():
    assert canonical_key(Graph(3)) != canonical_key(Graph(4))


def test_matches_permutation_canonical_on_all_5_vertex_graphs():
    """Equal keys iff equal permutation-minimal edge masks, for every
    labelled graph on 5 vertices."""
    pairs = all_pairs(5)
    by_perm = {}
    by_key = {}
    for mask in range(1 << 10):
        edges = [pairs[k] for k in range(10) if mask >> k & 1]
        g = Graph(5, edges)
        by_perm.setdefault(perm_canonical_mask(mask, 5), []).append(mask)
        by_key.setdefault(canonical_key(g), []).append(mask)
    assert (sorted(sorted(v) for v in by_perm.values())
            == sorted(sorted(v) for v in by_key.values()))


def test_matches_permutation_canonical_on_random_7_vertex_graphs():
    rng = random.Random(99)
    pairs = all_pairs(7)
    samples = []
    for _ in range(60):
        mask = rng.getrandbits(21)
        g = Graph(7, [pairs[k] for k in range(21) if mask >> k & 1])
        samples.append((perm_canonical_mask(mask, 7), canonical_key(g)))
    for i, (perm_a, key_a) in enumerate(samples):
        for perm_b, key_b in samples[i + 1:]:
            assert (perm_a == perm_b) == (key_a == key_b)


def test_invariant_under_random_relabellings():
    """1000 random graphs on up to 10 vertices, 100 relabellings each."""
    rng = random.Random(20210814)
    for _ in range(1000):
        n = rng.randint(1, 10)
        pairs = all_pairs(n)
        edges = [p for p in pairs if rng.random() < rng.random()]
        g = Graph(n, edges)
        key = canonical_key(g)
        for _ in range(100):
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_key(relabel(g, perm)) == key


def test_symmetric_worst_cases_fast():
    for g in (Graph(12), complete(12), star_graph(12),
              Graph(12, [(i, i + 6) for i in range(6)])):
        assert isinstance(canonical_key(g), bytes)
