import random
from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from decycle.cigraph import (
    CIGraph,
    Link,
    build_ci,
    cycle_rank,
    is_simple,
    max_matching,
    msf,
    restrict_ci,
)
from decycle.decompose import decompose_greedy, enumerate_decompositions
from decycle.families import build_family, cycle_tree, random_even
from decycle.multigraph import Multigraph
from oracles import oracle_max_matching, oracle_min_forest_cover


def path_ci(n_links):
    links = tuple(Link(i, i + 1, 100 + i) for i in range(n_links))
    return CIGraph(n_links + 1, links, 1)


def star_ci(n_links):
    links = tuple(Link(0, i + 1, 200 + i) for i in range(n_links))
    return CIGraph(n_links + 1, links, 1)


# -- construction -------------------------------------------------------------


def test_build_ci_single_cycle(c5):
    ci = build_ci(c5, decompose_greedy(c5))
    assert ci.node_count == 1 and ci.links == ()
    assert ci.component_count == 1
    assert is_simple(ci)


def test_build_ci_digons(doubled_triangle):
    decos = list(enumerate_decompositions(doubled_triangle))
    digons = next(d for d in decos if len(d.cycles) == 3)
    ci = build_ci(doubled_triangle, digons)
    assert ci.node_count == 3 and len(ci.links) == 3
    assert sorted(l.label for l in ci.links) == [0, 1, 2]
    assert is_simple(ci) and cycle_rank(ci) == 1


def test_build_ci_two_triangles(doubled_triangle):
    decos = list(enumerate_decompositions(doubled_triangle))
    split = next(d for d in decos if len(d.cycles) == 2)
    ci = build_ci(doubled_triangle, split)
    assert ci.node_count == 2 and len(ci.links) == 3
    assert sorted(l.label for l in ci.links) == [0, 1, 2]
    assert all(l.pair() == (0, 1) for l in ci.links)
    assert not is_simple(ci) and cycle_rank(ci) == 2


def test_shared_vertex_induces_clique():
    # three triangles glued at one vertex: the shared vertex shows up as
    # a link for every one of the C(3,2) cycle pairs
    g = Multigraph.from_edges(
        7,
        [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (0, 5), (5, 6), (0, 6)],
    )
    ci = build_ci(g, decompose_greedy(g))
    assert ci.node_count == 3
    assert [l.label for l in ci.links] == [0, 0, 0]
    assert {l.pair() for l in ci.links} == {(0, 1), (0, 2), (1, 2)}


def test_ci_label_soundness_and_completeness(theta_graph):
    for d in enumerate_decompositions(theta_graph):
        ci = build_ci(theta_graph, d)
        for link in ci.links:
            assert link.label in d.cycles[link.a].vertex_set
            assert link.label in d.cycles[link.b].vertex_set
            assert link.a != link.b
        for i, j in combinations(range(len(d.cycles)), 2):
            shared = d.cycles[i].vertex_set & d.cycles[j].vertex_set
            labels = {l.label for l in ci.links if l.pair() == (i, j)}
            assert labels == shared


def test_cycle_rank_values():
    assert cycle_rank(path_ci(3)) == 0
    three_cycle = CIGraph(3, (Link(0, 1, 5), Link(0, 2, 6), Link(1, 2, 7)), 1)
    assert cycle_rank(three_cycle) == 1
    two_nodes = CIGraph(2, (Link(0, 1, 1), Link(0, 1, 2), Link(0, 1, 3)), 1)
    assert cycle_rank(two_nodes) == 2
    assert cycle_rank(CIGraph(4, (), 4)) == 0


def test_rank_zero_iff_forest():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 6)
        pairs = [
            (a, b)
            for a, b in combinations(range(n), 2)
            if rng.random() < 0.4
        ]
        links = tuple(Link(a, b, 0) for a, b in pairs)
        ci = restrict_ci(CIGraph(n, links, 0), list(range(n)))[0]
        forest = _is_forest_pairs(n, pairs)
        assert (cycle_rank(ci) == 0) == forest


def _is_forest_pairs(n, pairs):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def test_restrict_ci():
    ci = path_ci(3)
    sub, mapping = restrict_ci(ci, [0, 1, 3])
    assert sub.node_count == 3 and mapping == [0, 1, 3]
    assert [l.pair() for l in sub.links] == [(0, 1)]
    assert sub.component_count == 2


# -- matching -----------------------------------------------------------------


def test_matching_examples():
    assert len(max_matching(path_ci(3))) == 2
    three_cycle = CIGraph(3, (Link(0, 1, 5), Link(0, 2, 6), Link(1, 2, 7)), 1)
    assert len(max_matching(three_cycle)) == 1
    for n in (1, 3, 6):
        assert len(max_matching(star_ci(n))) == (1 if n else 0)


def test_matching_is_valid_and_lexicographic():
    m = max_matching(path_ci(2))
    assert [l.pair() for l in m] == [(0, 1)]
    used = set()
    for link in max_matching(path_ci(7)):
        assert not ({link.a, link.b} & used)
        used |= {link.a, link.b}


def test_matching_collapses_parallel_links():
    ci = CIGraph(2, (Link(0, 1, 4), Link(0, 1, 9)), 1)
    m = max_matching(ci)
    assert len(m) == 1 and m[0].label == 4  # first link of the bundle


def test_matching_needs_blossoms():
    # two triangles joined by a bridge: augmenting through odd cycles
    pairs = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]
    links = tuple(Link(a, b, i) for i, (a, b) in enumerate(pairs))
    ci = CIGraph(6, links, 1)
    assert len(max_matching(ci)) == oracle_max_matching(pairs) == 3


@settings(max_examples=120, deadline=None)
@given(n=st.integers(1, 8), seed=st.integers(0, 100_000))
def test_matching_matches_exhaustive_oracle(n, seed):
    rng = random.Random(seed)
    pairs = [
        (a, b) for a, b in combinations(range(n), 2) if rng.random() < 0.45
    ]
    links = tuple(Link(a, b, 1000 + i) for i, (a, b) in enumerate(pairs))
    ci = CIGraph(n, links, 0)  # component count is irrelevant to matching
    assert len(max_matching(ci)) == oracle_max_matching(pairs)


# -- forest cover -------------------------------------------------------------


def test_msf_examples():
    assert msf(path_ci(3)).size == 2
    for n in range(1, 7):
        assert msf(star_ci(n)).size == n
    lone = CIGraph(1, (), 1)
    cover = msf(lone)
    assert cover.size == 1 and cover.isolated_nodes == (0,)


def test_msf_cover_properties(doubled_triangle, theta_graph):
    for g in (doubled_triangle, theta_graph):
        for d in enumerate_decompositions(g):
            ci = build_ci(g, d)
            cover = msf(ci)
            touched = {v for l in cover.chosen_links for v in l.pair()}
            assert touched.isdisjoint(cover.isolated_nodes)
            assert touched | set(cover.isolated_nodes) == set(range(ci.node_count))
            assert _is_forest_pairs(
                ci.node_count, [l.pair() for l in cover.chosen_links]
            )
            assert cover.size == ci.node_count - len(max_matching(ci))


@settings(max_examples=60, deadline=None)
@given(n=st.integers(4, 8), cycles=st.integers(1, 3), seed=st.integers(0, 50_000))
def test_msf_matches_brute_force_on_real_ci_graphs(n, cycles, seed):
    g = random_even(n, cycles, seed=seed)
    ci = build_ci(g, decompose_greedy(g, seed=seed))
    if ci.node_count > 7:
        return
    pairs = {l.pair() for l in ci.links}
    assert msf(ci).size == oracle_min_forest_cover(ci.node_count, pairs)


def test_tree_ci_labels_pairwise_distinct():
    for seed in range(25):
        g = cycle_tree(5, seed=seed, min_len=3, max_len=5)
        ci = build_ci(g, decompose_greedy(g))
        assert cycle_rank(ci) == 0
        labels = [l.label for l in ci.links]
        assert len(labels) == len(set(labels))


def test_ci_json(doubled_triangle):
    d = next(iter(enumerate_decompositions(doubled_triangle)))
    ci = build_ci(doubled_triangle, d)
    obj = ci.to_json_obj()
    assert obj["nodes"] == ci.node_count
    assert len(obj["links"]) == len(ci.links)


def test_family_ci_shapes():
    # chains give path CIs, flowers give star CIs
    g = build_family("triangle_chain", k=5)
    ci = build_ci(g, decompose_greedy(g))
    assert ci.node_count == 5 and len(ci.links) == 4 and cycle_rank(ci) == 0
    degs = [0] * ci.node_count
    for l in ci.links:
        degs[l.a] += 1
        degs[l.b] += 1
    assert sorted(degs) == [1, 1, 2, 2, 2]

    g = build_family("flower", petals=4, core=5)
    ci = build_ci(g, decompose_greedy(g))
    assert ci.node_count == 5 and len(ci.links) == 4
    degs = [0] * ci.node_count
    for l in ci.links:
        degs[l.a] += 1
        degs[l.b] += 1
    assert sorted(degs) == [1, 1, 1, 1, 4]
