"""Cycle intersection graphs and their structural quantities.

The cycle intersection graph of a decomposition has one node per cycle
and one labeled link per graph vertex shared by a pair of cycles; a
vertex lying on k cycles therefore contributes a clique of C(k,2) links
all carrying its label. On top of the graph itself this module computes
simplicity, cycle rank, exact maximum matchings, and the minimum forest
cover (edges plus isolated nodes) that drives the decycling bounds.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .decompose import CycleDecomposition, decomposition_violations
from .errors import InvalidDecompositionError
from .multigraph import Multigraph


@dataclass(frozen=True)
class Link:
    """Labeled link between two cycle nodes; ``label`` is the shared
    graph vertex."""

    a: int
    b: int
    label: int

    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True)
class CIGraph:
    node_count: int
    links: tuple[Link, ...]
    component_count: int

    def to_json_obj(self) -> dict:
        return {
            "nodes": self.node_count,
            "links": [[l.a, l.b, l.label] for l in self.links],
        }


@dataclass(frozen=True)
class ForestCover:
    """Acyclic links plus isolated nodes covering every CI node.

    ``size`` counts chosen links and isolated nodes alike, one unit each.
    """

    chosen_links: tuple[Link, ...]
    isolated_nodes: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.chosen_links) + len(self.isolated_nodes)


def _component_count(node_count: int, pairs) -> int:
    parent = list(range(node_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = node_count
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps


def build_ci(g: Multigraph, d: CycleDecomposition) -> CIGraph:
    """Cycle intersection graph of ``d``: a node per cycle, a link per
    shared vertex per cycle pair."""
    problems = decomposition_violations(g, d)
    if problems:
        raise InvalidDecompositionError("; ".join(problems))
    links: list[Link] = []
    for i, j in combinations(range(len(d.cycles)), 2):
        shared = d.cycles[i].vertex_set & d.cycles[j].vertex_set
        for v in sorted(shared):
            links.append(Link(i, j, v))
    links.sort(key=lambda l: (l.a, l.b, l.label))
    comp = _component_count(len(d.cycles), [l.pair() for l in links])
    return CIGraph(len(d.cycles), tuple(links), comp)


def is_simple(ci: CIGraph) -> bool:
    """True iff no two links join the same node pair."""
    pairs = [l.pair() for l in ci.links]
    return len(pairs) == len(set(pairs))


def cycle_rank(ci: CIGraph) -> int:
    """First Betti number: links - nodes + components."""
    return len(ci.links) - ci.node_count + ci.component_count


def restrict_ci(ci: CIGraph, keep: list[int]) -> tuple[CIGraph, list[int]]:
    """CI subgraph induced on ``keep`` with renumbered nodes.

    Returns the subgraph and the list mapping new node index to old.
    """
    keep = sorted(keep)
    index = {old: new for new, old in enumerate(keep)}
    links = tuple(
        Link(index[l.a], index[l.b], l.label)
        for l in ci.links
        if l.a in index and l.b in index
    )
    comp = _component_count(len(keep), [l.pair() for l in links])
    return CIGraph(len(keep), links, comp), keep


# -- exact maximum matching -------------------------------------------------


def _blossom_matching(n: int, adj: list[list[int]]) -> list[int]:
    """Exact maximum matching on a simple graph via repeated augmenting
    BFS with blossom contraction. Returns the mate array (-1 unmatched)."""
    match = [-1] * n
    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_augmenting(root: int) -> bool:
        used = [False] * n
        for i in range(n):
            p[i] = -1
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting(v)
    return match


def _simple_pairs(ci: CIGraph) -> dict[tuple[int, int], Link]:
    """Collapse parallel links; the representative is the first link of
    each bundle in link order."""
    rep: dict[tuple[int, int], Link] = {}
    for link in ci.links:
        rep.setdefault(link.pair(), link)
    return rep


def _matching_size(n: int, pairs, banned: set[int]) -> int:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in pairs:
        if a not in banned and b not in banned:
            adj[a].append(b)
            adj[b].append(a)
    for lst in adj:
        lst.sort()
    match = _blossom_matching(n, adj)
    return sum(1 for v in range(n) if match[v] != -1) // 2


def max_matching(ci: CIGraph) -> tuple[Link, ...]:
    """A maximum-cardinality matching of the collapsed simple graph.

    Exact on non-bipartite graphs. Among all maximum matchings the one
    chosen is lexicographically first in link order, so results are
    reproducible run to run.
    """
    rep = _simple_pairs(ci)
    pairs = sorted(rep)
    target = _matching_size(ci.node_count, pairs, set())
    chosen: list[Link] = []
    used: set[int] = set()
    for pair in pairs:
        a, b = pair
        if a in used or b in used:
            continue
        trial = used | {a, b}
        if len(chosen) + 1 + _matching_size(ci.node_count, pairs, trial) == target:
            chosen.append(rep[pair])
            used = trial
        if len(chosen) == target:
            break
    return tuple(chosen)


def msf(ci: CIGraph) -> ForestCover:
    """Minimum forest cover: a maximum matching plus isolated nodes.

    Leaving every unsaturated node isolated costs one unit either way,
    so the cover size always equals node count minus matching size.
    """
    matching = max_matching(ci)
    saturated = {v for link in matching for v in link.pair()}
    isolated = tuple(v for v in range(ci.node_count) if v not in saturated)
    return ForestCover(matching, isolated)


def to_dot(ci: CIGraph, name: str = "CI") -> str:
    lines = [f"graph {name} {{"]
    for v in range(ci.node_count):
        lines.append(f'  {v} [label="cycle {v}"];')
    for link in ci.links:
        lines.append(f'  {link.a} -- {link.b} [label="v{link.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
