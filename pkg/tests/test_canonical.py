"""Canonical keys: refinement, soundness against a brute oracle, stability."""

import random
import struct

from strings_and_coins.graph import EdgeRef, LoopyMultigraph
from strings_and_coins.canonical import (
    are_isomorphic,
    canonical_key,
    color_refine,
    combine_component_keys,
    edge_orbit_representatives,
    graph_from_key,
    unpack_key,
)
from strings_and_coins.families import make

import support


def cells(partition):
    return sorted(sorted(c) for c in partition)


def test_refine_vertex_transitive_cycle():
    p = color_refine(make("cycle", 6))
    assert len(p) == 1
    assert sorted(p[0]) == list(range(6))


def test_refine_star_splits_center():
    p = color_refine(make("complete_bipartite", 1, 4))
    assert sorted(len(c) for c in p) == [1, 4]


def test_refine_balloon_path_splits_ends_from_middle():
    g = make("balloon_path", 3)
    p = color_refine(g)
    split = cells(p)
    assert [0, 2] in split and [1] in split


def test_refine_respects_input_partition():
    g = make("cycle", 4)
    p = color_refine(g, [[0], [1, 2, 3]])
    # individualizing one cycle vertex separates its neighbors from its
    # antipode
    assert cells(p) == [[0], [1, 3], [2]]


def test_key_invariant_under_relabeling():
    rng = random.Random(5)
    base = make("cycle", 5)
    ref = canonical_key(base)
    for _ in range(25):
        assert canonical_key(support.relabel(base, rng)) == ref


def test_key_identifies_bipartite_square():
    assert canonical_key(make("complete_bipartite", 2, 2)) == canonical_key(make("cycle", 4))
    assert canonical_key(make("hypercube", 2)) == canonical_key(make("cycle", 4))


def test_key_separates_path_from_cycle():
    assert canonical_key(make("path", 4)) != canonical_key(make("cycle", 4))


def test_key_empty_graph():
    key = canonical_key(LoopyMultigraph.empty())
    n, triples = unpack_key(key)
    assert n == 0 and triples == []


def test_are_isomorphic_examples():
    rng = random.Random(11)
    f2 = make("friendship", 2)
    assert are_isomorphic(f2, support.relabel(f2, rng))
    assert not are_isomorphic(
        make("generalized_loopy_star", 2, 2), make("generalized_loopy_star", 2, 1)
    )
    assert not are_isomorphic(
        make("cycle", 3).disjoint_union(make("cycle", 4)), make("cycle", 7)
    )


def test_soundness_against_backtracking_oracle():
    """key(g1) == key(g2) exactly when an explicit isomorphism exists."""
    rng = random.Random(2026)
    same = diff = 0
    for _ in range(400):
        g1 = support.random_graph(rng, max_vertices=8, max_edges=12)
        if rng.random() < 0.45:
            g2 = support.relabel(g1, rng)
        else:
            g2 = support.random_graph(rng, max_vertices=8, max_edges=12)
        keys_equal = canonical_key(g1) == canonical_key(g2)
        assert keys_equal == are_isomorphic(g1, g2)
        same += keys_equal
        diff += not keys_equal
    # both branches must actually be exercised
    assert same > 50 and diff > 50


def test_permutation_stability_fuzz():
    """At least 1000 relabelings all serialize to identical bytes."""
    rng = random.Random(424242)
    bases = [
        make("friendship", 3),
        make("wheel", 5),
        make("balloon_path", 5),
        make("loopy_cycle", 5, 2),
        make("complete_bipartite", 2, 3),
        make("hypercube", 3),
        LoopyMultigraph.from_edges([(0, 1), (0, 1), (1, 1), (1, 2), (3, 4)]),
    ]
    extra = [support.random_graph(rng, max_vertices=8, max_edges=10) for _ in range(13)]
    total = 0
    for base in bases + extra:
        ref = canonical_key(base)
        for _ in range(52):
            assert canonical_key(support.relabel(base, rng)) == ref
            total += 1
    assert total >= 1000


def test_union_key_matches_combined_component_keys():
    rng = random.Random(31)
    for _ in range(40):
        g1 = support.random_graph(rng, max_vertices=5, max_edges=6)
        g2 = support.random_graph(rng, max_vertices=5, max_edges=6)
        union = g1.disjoint_union(g2)
        combined = combine_component_keys([canonical_key(g1), canonical_key(g2)])
        assert canonical_key(union) == combined


def test_key_layout_is_little_endian_triples():
    g = LoopyMultigraph.from_edges([(0, 1), (0, 1), (2, 2)])
    key = canonical_key(g)
    (n,) = struct.unpack_from("<H", key, 0)
    assert n == 3
    triples = [struct.unpack_from("<HHH", key, 2 + 6 * i) for i in range(2)]
    assert triples == sorted(triples)
    assert {m for _, _, m in triples} == {1, 2}
    assert len(key) == 2 + 6 * 2


def test_key_round_trips_through_graph():
    rng = random.Random(77)
    for _ in range(60):
        g = support.random_graph(rng, max_vertices=7, max_edges=9)
        key = canonical_key(g)
        back = graph_from_key(key)
        assert canonical_key(back) == key
        assert are_isomorphic(back, g)


def test_unpack_key_contents():
    n, triples = unpack_key(canonical_key(make("cycle", 3)))
    assert n == 3
    assert len(triples) == 3
    assert all(m == 1 for _, _, m in triples)


def test_edge_orbits_collapse_symmetric_graphs():
    assert len(edge_orbit_representatives(make("complete", 3))) == 1
    assert len(edge_orbit_representatives(make("cycle", 6))) == 1
    assert len(edge_orbit_representatives(make("path", 4))) == 2
    # wheel: rim edges and spokes are distinct orbits
    assert len(edge_orbit_representatives(make("wheel", 5))) == 2
    reps = edge_orbit_representatives(make("loopy_star", 2))
    assert len(reps) == 2  # tie edges vs loops


def test_edge_orbits_cover_all_move_classes():
    rng = random.Random(123)
    for _ in range(50):
        g = support.random_graph(rng, max_vertices=6, max_edges=8)
        reps = set(edge_orbit_representatives(g))
        moves = set(g.distinct_moves())
        assert reps <= moves
        # every move class must land in some representative's orbit:
        # removing it reaches a successor some representative also reaches
        rep_succs = {canonical_key(g.remove_edge(r).successor) for r in reps}
        for mv in moves:
            assert canonical_key(g.remove_edge(mv).successor) in rep_succs


def test_orbit_representatives_are_edge_refs():
    for ref in edge_orbit_representatives(make("loopy_cycle", 4, 2)):
        assert isinstance(ref, EdgeRef)
