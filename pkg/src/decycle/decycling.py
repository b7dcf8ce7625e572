"""Decycling sets and decycling-number bounds derived from CI graphs.

Three bound routes, each returning a vertex set that is re-certified by
an acyclicity check before being reported:

* edge-count bound: the label set of all CI links;
* tree-exact value: forest cover of a tree CI, which is the exact
  decycling number in that case;
* general bound: break the CI graph down to a simple forest first (drop
  all but one link of every parallel bundle plus a feedback link set),
  collect the dropped labels, then cover the surviving cycles as in the
  tree case.

An exhaustive oracle computes the exact decycling number for small
graphs and anchors every bound in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .cigraph import CIGraph, Link, build_ci, cycle_rank, msf, restrict_ci
from .decompose import CycleDecomposition, decompose_greedy, decomposition_violations
from .errors import (
    DisconnectedError,
    InvalidDecompositionError,
    InvariantError,
    NotEvenError,
    OracleLimitError,
)
from .multigraph import DecyclingSet, Multigraph, is_acyclic, is_connected, is_even

DEFAULT_ORACLE_LIMIT = 20


def verify_decycling(g: Multigraph, s: Iterable[int]) -> bool:
    """True iff deleting ``s`` leaves an acyclic graph."""
    return is_acyclic(g.delete_vertices(s))


def certify(g: Multigraph, vertices: Iterable[int]) -> DecyclingSet:
    """Wrap a vertex set after checking it really decycles ``g``."""
    vs = frozenset(vertices)
    if not verify_decycling(g, vs):
        raise InvariantError(f"constructed set {sorted(vs)} does not decycle the graph")
    return DecyclingSet(vs, certified=True)


def bound_edge_count(ci: CIGraph) -> int:
    """Upper bound on the decycling number: the CI link count."""
    return len(ci.links)


# -- construction from CI structure ------------------------------------------


def _cover_picks(
    g: Multigraph,
    d: CycleDecomposition,
    sub_ci: CIGraph,
    node_map: list[int],
    alive: list[int],
) -> set[int]:
    """One vertex per surviving cycle, via the forest cover of ``sub_ci``.

    Matched links contribute their label (killing both endpoint cycles);
    each isolated node contributes one vertex of its cycle, preferably
    one lying on no other surviving cycle.
    """
    cover = msf(sub_ci)
    picks: set[int] = set()
    on_alive: dict[int, int] = {}
    for i in alive:
        for v in d.cycles[i].vertices:
            on_alive[v] = on_alive.get(v, 0) + 1
    for link in cover.chosen_links:
        picks.add(link.label)
    for node in cover.isolated_nodes:
        cyc = d.cycles[node_map[node]]
        pick = min(cyc.vertices, key=lambda v: (on_alive[v] > 1, v))
        picks.add(pick)
    return picks


def _strip_to_forest(ci: CIGraph) -> set[int]:
    """Labels of a link set whose removal leaves the CI graph a simple
    forest: the surplus of every parallel bundle plus a feedback set.

    Labels that recur across bundles are dropped preferentially so the
    same graph vertex pays for several removals.
    """
    bundles: dict[tuple[int, int], list[Link]] = {}
    for link in ci.links:
        bundles.setdefault(link.pair(), []).append(link)
    multi_labels: dict[int, int] = {}
    for links in bundles.values():
        if len(links) > 1:
            for link in links:
                multi_labels[link.label] = multi_labels.get(link.label, 0) + 1
    removed: set[int] = set()
    survivors: list[Link] = []
    for pair in sorted(bundles):
        links = bundles[pair]
        if len(links) == 1:
            survivors.append(links[0])
            continue
        keep = min(links, key=lambda l: (multi_labels[l.label], l.label))
        survivors.append(keep)
        removed.update(l.label for l in links if l is not keep)
    # feedback links of the remaining simple graph: grow a spanning
    # forest, preferring to keep links whose labels are not yet paid for
    parent = list(range(ci.node_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    survivors.sort(key=lambda l: (l.label in removed, l.label, l.a, l.b))
    for link in survivors:
        ra, rb = find(link.a), find(link.b)
        if ra == rb:
            removed.add(link.label)
        else:
            parent[ra] = rb
    return removed


def _construct_decycling(
    g: Multigraph, d: CycleDecomposition, ci: CIGraph
) -> DecyclingSet:
    stripped_labels = _strip_to_forest(ci)
    alive = [
        i
        for i, cyc in enumerate(d.cycles)
        if not (cyc.vertex_set & stripped_labels)
    ]
    sub_ci, node_map = restrict_ci(ci, alive)
    if cycle_rank(sub_ci) != 0:
        raise InvariantError("surviving cycles still form a cyclic CI graph")
    picks = _cover_picks(g, d, sub_ci, node_map, alive)
    return certify(g, stripped_labels | picks)


def decycle_tree_ci(
    g: Multigraph, d: CycleDecomposition, ci: CIGraph
) -> DecyclingSet:
    """Certified decycling set of forest-cover size; requires a forest CI."""
    if cycle_rank(ci) != 0:
        raise InvalidDecompositionError("CI graph is cyclic; use decycle_general")
    return _construct_decycling(g, d, ci)


def decycle_general(
    g: Multigraph, d: CycleDecomposition, ci: CIGraph
) -> DecyclingSet:
    """Certified decycling set for an arbitrary CI graph.

    On a forest CI this degenerates to ``decycle_tree_ci`` exactly: the
    strip step removes nothing and only the cover picks remain.
    """
    problems = decomposition_violations(g, d)
    if problems:
        raise InvalidDecompositionError("; ".join(problems))
    return _construct_decycling(g, d, ci)


# -- exhaustive oracle --------------------------------------------------------


def exact_decycling_number(
    g: Multigraph, limit: Optional[int] = None
) -> tuple[int, DecyclingSet]:
    """Smallest decycling set by exhaustive search over vertex subsets.

    Tries sizes 0, 1, 2, ... and returns the lexicographically first
    witness of the minimum size. Refuses graphs over ``limit`` vertices
    (default 20); pass a higher limit at your own risk.
    """
    cap = DEFAULT_ORACLE_LIMIT if limit is None else limit
    if g.n_vertices > cap:
        raise OracleLimitError(
            f"graph has {g.n_vertices} vertices, over the exhaustive-search "
            f"limit of {cap}"
        )
    if is_acyclic(g):
        return 0, DecyclingSet(frozenset(), certified=True)
    verts = list(g.vertices)
    for k in range(1, g.n_vertices + 1):
        for combo in combinations(verts, k):
            if is_acyclic(g.delete_vertices(combo)):
                return k, DecyclingSet(frozenset(combo), certified=True)
    raise InvariantError("subset search exhausted without an acyclic remainder")


# -- full report --------------------------------------------------------------


@dataclass
class BoundReport:
    """All bounds for one connected even graph, with certified witnesses.

    ``edge_count_bound`` is omitted (None) when some decomposition cycle
    meets no other cycle, because the link-label witness cannot break
    such a cycle; the tree route covers that case. ``rank_cover_gap`` is
    a diagnostic only (CI cycle rank minus forest-cover size); it can go
    negative and is never used as a bound.
    """

    general_bound: int
    edge_count_bound: Optional[int] = None
    tree_exact: Optional[int] = None
    exact: Optional[int] = None
    witness_sets: dict[str, DecyclingSet] = field(default_factory=dict)
    n_vertices: int = 0
    n_edges: int = 0
    ci_nodes: int = 0
    ci_links: int = 0
    ci_rank: int = 0
    ci_simple: bool = True
    rank_cover_gap: Optional[int] = None
    decomposition: Optional[CycleDecomposition] = None

    def to_json_obj(self) -> dict:
        obj = {
            "graph": {"vertices": self.n_vertices, "edges": self.n_edges},
            "ci": {
                "nodes": self.ci_nodes,
                "links": self.ci_links,
                "rank": self.ci_rank,
                "simple": self.ci_simple,
            },
            "bounds": {
                "edge_count": self.edge_count_bound,
                "tree_exact": self.tree_exact,
                "general": self.general_bound,
                "exact": self.exact,
            },
            "rank_cover_gap": self.rank_cover_gap,
            "witnesses": {
                name: ds.sorted_vertices()
                for name, ds in sorted(self.witness_sets.items())
            },
        }
        if self.decomposition is not None:
            obj["decomposition"] = self.decomposition.to_json_obj()
        return obj


def analyze(
    g: Multigraph,
    d: Optional[CycleDecomposition] = None,
    *,
    seed: int = 0,
    oracle_limit: Optional[int] = None,
    compute_exact: bool = True,
) -> BoundReport:
    """Full bound report for a connected even graph.

    Uses the greedy decomposition when none is given. The exact value is
    filled in only when the graph fits under the oracle limit.
    """
    if not is_even(g):
        raise NotEvenError("graph is not even: some vertex has odd degree")
    if not is_connected(g):
        raise DisconnectedError(
            "graph is disconnected; analyze components separately"
        )
    if d is None:
        d = decompose_greedy(g, seed)
    else:
        problems = decomposition_violations(g, d)
        if problems:
            raise InvalidDecompositionError("; ".join(problems))
    ci = build_ci(g, d)
    cover = msf(ci)
    rank = cycle_rank(ci)
    witnesses: dict[str, DecyclingSet] = {}

    linked = {v for link in ci.links for v in link.pair()}
    lonely = ci.node_count > 0 and len(linked) < ci.node_count
    edge_count_bound = None
    if not lonely:
        edge_count_bound = bound_edge_count(ci)
        witnesses["edge_count"] = certify(g, (l.label for l in ci.links))

    tree_exact = None
    if rank == 0:
        witnesses["tree"] = decycle_tree_ci(g, d, ci)
        tree_exact = cover.size

    general_set = decycle_general(g, d, ci)
    witnesses["general"] = general_set

    exact = None
    cap = DEFAULT_ORACLE_LIMIT if oracle_limit is None else oracle_limit
    if compute_exact and g.n_vertices <= cap:
        exact, exact_set = exact_decycling_number(g, cap)
        witnesses["exact"] = exact_set

    return BoundReport(
        general_bound=len(general_set),
        edge_count_bound=edge_count_bound,
        tree_exact=tree_exact,
        exact=exact,
        witness_sets=witnesses,
        n_vertices=g.n_vertices,
        n_edges=g.n_edges,
        ci_nodes=ci.node_count,
        ci_links=len(ci.links),
        ci_rank=rank,
        ci_simple=len({l.pair() for l in ci.links}) == len(ci.links),
        rank_cover_gap=rank - cover.size,
        decomposition=d,
    )


def analyze_components(
    g: Multigraph,
    d: Optional[CycleDecomposition] = None,
    *,
    seed: int = 0,
    oracle_limit: Optional[int] = None,
    compute_exact: bool = True,
) -> list[BoundReport]:
    """Analyze each connected component; bounds add across components."""
    if not is_even(g):
        raise NotEvenError("graph is not even: some vertex has odd degree")
    parts = g.components()
    if d is None:
        return [
            analyze(part, seed=seed, oracle_limit=oracle_limit,
                    compute_exact=compute_exact)
            for part in parts
        ]
    problems = decomposition_violations(g, d)
    if problems:
        raise InvalidDecompositionError("; ".join(problems))
    out = []
    for part in parts:
        eids = set(part.edge_ids)
        cycles = tuple(c for c in d.cycles if set(c.edges) <= eids)
        out.append(
            analyze(part, CycleDecomposition(cycles), seed=seed,
                    oracle_limit=oracle_limit, compute_exact=compute_exact)
        )
    return out


def merge_reports(reports: list[BoundReport]) -> BoundReport:
    """Componentwise sum of reports; optional fields survive only when
    present in every part."""

    def opt_sum(values):
        vals = list(values)
        if any(v is None for v in vals):
            return None
        return sum(vals)

    witnesses: dict[str, DecyclingSet] = {}
    for name in ("edge_count", "tree", "general", "exact"):
        if all(name in r.witness_sets for r in reports):
            union = frozenset().union(
                *(r.witness_sets[name].vertices for r in reports)
            )
            certified = all(r.witness_sets[name].certified for r in reports)
            witnesses[name] = DecyclingSet(union, certified=certified)
    return BoundReport(
        general_bound=sum(r.general_bound for r in reports),
        edge_count_bound=opt_sum(r.edge_count_bound for r in reports),
        tree_exact=opt_sum(r.tree_exact for r in reports),
        exact=opt_sum(r.exact for r in reports),
        witness_sets=witnesses,
        n_vertices=sum(r.n_vertices for r in reports),
        n_edges=sum(r.n_edges for r in reports),
        ci_nodes=sum(r.ci_nodes for r in reports),
        ci_links=sum(r.ci_links for r in reports),
        ci_rank=sum(r.ci_rank for r in reports),
        ci_simple=all(r.ci_simple for r in reports),
        rank_cover_gap=None,
        decomposition=None,
    )
