"""Undirected multigraph with stable vertex and edge identities.

Vertices are integers. Edges carry integer ids that survive vertex
deletion unchanged, so cycle decompositions and intersection labels
computed on a graph remain meaningful on its subgraphs. Parallel edges
are allowed, self-loops are not: a loop would be a length-1 cycle and
every cycle handled here is simple of length >= 2.

Instances are immutable after construction and safe to share across
threads; every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import ParseError


@dataclass(frozen=True)
class DecyclingSet:
    """A vertex subset meant to break every cycle of some graph.

    ``certified`` is set only after an acyclicity check of the graph
    minus ``vertices`` has actually been run.
    """

    vertices: frozenset[int]
    certified: bool = False

    def __len__(self) -> int:
        return len(self.vertices)

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)


class Multigraph:
    """Immutable undirected multigraph."""

    __slots__ = ("_vertices", "_edges", "_incidence")

    def __init__(self, vertices: Iterable[int], edges) -> None:
        """Build a graph from explicit vertex ids and identified edges.

        ``edges`` is either a mapping ``edge id -> (u, v)`` or an iterable
        of ``(edge id, (u, v))`` pairs. Endpoints must be distinct existing
        vertices; edge ids must be unique.
        """
        vertex_set = {int(v) for v in vertices}
        items = edges.items() if isinstance(edges, Mapping) else edges
        store: dict[int, tuple[int, int]] = {}
        for eid, (u, v) in items:
            eid, u, v = int(eid), int(u), int(v)
            if eid in store:
                raise ValueError(f"duplicate edge id {eid}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} (edge {eid})")
            if u not in vertex_set or v not in vertex_set:
                raise ValueError(f"edge {eid} references unknown vertex")
            store[eid] = (u, v) if u < v else (v, u)
        incidence: dict[int, list[int]] = {v: [] for v in vertex_set}
        for eid in sorted(store):
            u, v = store[eid]
            incidence[u].append(eid)
            incidence[v].append(eid)
        self._vertices = tuple(sorted(vertex_set))
        self._edges = {eid: store[eid] for eid in sorted(store)}
        self._incidence = {v: tuple(eids) for v, eids in incidence.items()}

    @classmethod
    def from_edges(cls, n_vertices: int, pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        """Graph on vertices ``0..n_vertices-1`` with edge ids in list order."""
        return cls(range(n_vertices), enumerate(pairs))

    # -- basic accessors ------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(self._edges)

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: int) -> bool:
        return v in self._incidence

    def endpoints(self, eid: int) -> tuple[int, int]:
        try:
            return self._edges[eid]
        except KeyError:
            raise ValueError(f"unknown edge id {eid}") from None

    def other_endpoint(self, eid: int, v: int) -> int:
        u, w = self.endpoints(eid)
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {eid}")

    def degree(self, v: int) -> int:
        try:
            return len(self._incidence[v])
        except KeyError:
            raise ValueError(f"unknown vertex id {v}") from None

    def incident_edges(self, v: int) -> tuple[int, ...]:
        try:
            return self._incidence[v]
        except KeyError:
            raise ValueError(f"unknown vertex id {v}") from None

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(edge id, u, v)`` in edge-id order."""
        for eid, (u, v) in self._edges.items():
            yield eid, u, v

    def adjacency(self) -> dict[int, set[int]]:
        """Underlying simple-graph adjacency (parallel edges collapsed)."""
        adj: dict[int, set[int]] = {v: set() for v in self._vertices}
        for _, u, v in self.edges():
            adj[u].add(v)
            adj[v].add(u)
        return adj

    # -- derived graphs -------------------------------------------------

    def delete_vertices(self, remove: Iterable[int]) -> "Multigraph":
        """Remove the given vertices and all incident edges.

        Surviving vertex and edge ids are unchanged.
        """
        gone = {int(v) for v in remove}
        unknown = gone - set(self._vertices)
        if unknown:
            raise ValueError(f"unknown vertex id {min(unknown)}")
        keep = [v for v in self._vertices if v not in gone]
        edges = {
            eid: (u, v)
            for eid, (u, v) in self._edges.items()
            if u not in gone and v not in gone
        }
        return Multigraph(keep, edges)

    def restricted_to_edges(self, eids: Iterable[int]) -> "Multigraph":
        """Subgraph holding the given edges and exactly their endpoints."""
        wanted = set(eids)
        unknown = wanted - set(self._edges)
        if unknown:
            raise ValueError(f"unknown edge id {min(unknown)}")
        edges = {eid: self._edges[eid] for eid in wanted}
        verts = {v for pair in edges.values() for v in pair}
        return Multigraph(verts, edges)

    def components(self) -> list["Multigraph"]:
        """Connected components as id-preserving subgraphs, by least vertex."""
        seen: set[int] = set()
        out: list[Multigraph] = []
        for start in self._vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for eid in self._incidence[v]:
                    w = self.other_endpoint(eid, v)
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            edges = {
                eid: (u, v) for eid, (u, v) in self._edges.items() if u in comp
            }
            out.append(Multigraph(comp, edges))
        return out

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __repr__(self) -> str:
        return f"Multigraph(|V|={self.n_vertices}, |E|={self.n_edges})"


# -- structural predicates ----------------------------------------------


def is_even(g: Multigraph) -> bool:
    """True iff every vertex has even degree (parallel edges counted)."""
    return all(g.degree(v) % 2 == 0 for v in g.vertices)


def is_connected(g: Multigraph) -> bool:
    """Standard connectivity; the empty graph counts as connected."""
    if g.n_vertices == 0:
        return True
    return len(g.components()) == 1


def is_acyclic(g: Multigraph) -> bool:
    """True iff the graph has no cycle; a parallel pair counts as a 2-cycle."""
    parent = {v: v for v in g.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


# -- text formats ---------------------------------------------------------


def parse_edge_list(source) -> Multigraph:
    """Parse the plain edge-list format.

    First non-comment line is ``n m``; each following line is an edge
    ``u v`` with ``0 <= u, v < n`` and ``u != v``. Lines starting with
    ``#`` are comments. ``source`` may be text, bytes, or a file-like
    object.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, (bytes, bytearray)):
        source = source.decode("utf-8")
    n = m = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2:
                raise ParseError("expected header 'n m'", line=lineno)
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError("expected header 'n m'", line=lineno) from None
            if n < 0 or m < 0:
                raise ParseError("negative count in header", line=lineno)
            continue
        if len(fields) != 2:
            raise ParseError("expected edge 'u v'", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError("expected edge 'u v'", line=lineno) from None
        if not (0 <= u < n) or not (0 <= v < n):
            raise ParseError(f"endpoint out of range 0..{n - 1}", line=lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        pairs.append((u, v))
    if n is None:
        raise ParseError("empty input")
    if len(pairs) != m:
        raise ParseError(f"header declares {m} edges, found {len(pairs)}")
    return Multigraph.from_edges(n, pairs)


def to_edge_list(g: Multigraph) -> str:
    """Serialize back to the edge-list format.

    Graphs whose vertex ids are not dense ``0..n-1`` (after deletions)
    are written with remapped dense ids; JSON export keeps true ids.
    """
    remap = {v: i for i, v in enumerate(g.vertices)}
    lines = [f"{g.n_vertices} {g.n_edges}"]
    for _, u, v in g.edges():
        lines.append(f"{remap[u]} {remap[v]}")
    return "\n".join(lines) + "\n"


def to_json_obj(g: Multigraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [[u, v] for _, u, v in g.edges()],
    }


def to_dot(g: Multigraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f"  {v};")
    for eid, u, v in g.edges():
        lines.append(f'  {u} -- {v} [label="e{eid}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
