"""Simple undirected graphs with packed bitmask adjacency rows.

Row ``adj[v]`` is an int whose set bits are the neighbors of ``v``.
Includes the unity product graph construction, complement, the two
structure recognizers the claim checks rely on, and DOT/JSON export.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .rings import UnitGroup


def bit_indices(mask: int):
    """Yield the indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable simple graph: no loops, no parallel edges."""

    n: int
    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.n or len(self.adj) != self.n:
            raise ValueError("label/adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"adjacency row {v} references missing vertices")
        for v, row in enumerate(self.adj):
            for u in bit_indices(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge ({v}, {u})")

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bit_indices(row):
                out.append((u, v))
        return out


def graph_from_edges(vertices, edges, labels=None) -> SimpleGraph:
    """Build a graph from an edge list.

    ``vertices`` is a vertex count or a label sequence; explicit labels
    may also be passed separately.  Unlabeled vertices get their index.
    """
    if isinstance(vertices, int):
        n = vertices
        names = tuple(str(i) for i in range(n)) if labels is None else tuple(labels)
    else:
        n = len(vertices)
        names = tuple(vertices)
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return SimpleGraph(n=n, labels=names, adj=tuple(adj))


def unity_product_graph(ug: UnitGroup) -> SimpleGraph:
    """Graph on the units; x and y are adjacent iff x != y and x * y = unity.

    Vertices follow the unit order of ``ug`` (element-index order) and are
    labeled by element names.
    """
    index_of = {x: i for i, x in enumerate(ug.units)}
    labels = tuple(ug.ring.element_name(x) for x in ug.units)
    adj = [0] * len(ug.units)
    for i, x in enumerate(ug.units):
        j = index_of[ug.inverse_of[x]]
        if j != i:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return SimpleGraph(n=len(ug.units), labels=labels, adj=tuple(adj))


def complement(g: SimpleGraph) -> SimpleGraph:
    """Complement on the same vertex set, preserving labels."""
    full = (1 << g.n) - 1
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return SimpleGraph(n=g.n, labels=g.labels, adj=adj)


def is_complete(g: SimpleGraph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def component_masks(g: SimpleGraph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        mask = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bit_indices(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~mask
            mask |= frontier
        seen |= mask
        out.append(mask)
    return out


@dataclass(frozen=True)
class StructureDecomposition:
    """Outcome of matching-structure recognition.

    valid is True when every vertex has degree <= 1; then the graph is
    isolated * K1 + pairs * K2.  Counts are zeroed when invalid.
    """

    isolated: int
    pairs: int
    valid: bool


def decompose_matching_structure(g: SimpleGraph) -> StructureDecomposition:
    """Recognize a disjoint union of K1's and K2's by degree inspection."""
    if any(g.degree(v) > 1 for v in range(g.n)):
        return StructureDecomposition(isolated=0, pairs=0, valid=False)
    isolated = sum(1 for v in range(g.n) if g.degree(v) == 0)
    return StructureDecomposition(isolated=isolated, pairs=g.edge_count, valid=True)


@dataclass(frozen=True)
class MultipartiteProfile:
    """Outcome of complete-multipartite recognition.

    valid is True when the graph is complete multipartite; part_sizes is
    then the sorted (ascending) tuple of part sizes, empty when invalid.
    """

    part_sizes: tuple[int, ...]
    valid: bool


def recognize_complete_multipartite(g: SimpleGraph) -> MultipartiteProfile:
    """Detect complete multipartite graphs.

    A graph is complete multipartite iff its complement is a disjoint
    union of cliques; the parts are those cliques.
    """
    co = complement(g)
    sizes = []
    for mask in component_masks(co):
        size = mask.bit_count()
        for v in bit_indices(mask):
            if (co.adj[v] & mask).bit_count() != size - 1:
                return MultipartiteProfile(part_sizes=(), valid=False)
        sizes.append(size)
    return MultipartiteProfile(part_sizes=tuple(sorted(sizes)), valid=True)


def export_dot(g: SimpleGraph) -> str:
    """Deterministic DOT rendering: vertex lines first, then sorted edges."""
    lines = ["graph {"]
    for v in range(g.n):
        lines.append(f'  "{_dot_escape(g.labels[v])}";')
    for u, v in g.edges():
        lines.append(f'  "{_dot_escape(g.labels[u])}" -- "{_dot_escape(g.labels[v])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(label: str) -> str:
    return label.replace("\\", "\\\\").replace('"', '\\"')


def export_json(g: SimpleGraph) -> str:
    """JSON document {n, labels, edges} with edges ascending, u < v."""
    doc = {
        "n": g.n,
        "labels": list(g.labels),
        "edges": [[u, v] for u, v in g.edges()],
    }
    return json.dumps(doc, indent=2) + "\n"


def graph_from_json(text: str) -> SimpleGraph:
    """Inverse of export_json; validates shape and edge ranges."""
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise ValueError("graph document must be a JSON object")
    for key in ("n", "labels", "edges"):
        if key not in doc:
            raise ValueError(f"graph document missing key {key!r}")
    n = doc["n"]
    labels = doc["labels"]
    edges = doc["edges"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    if not isinstance(labels, list) or len(labels) != n:
        raise ValueError("labels must list one string per vertex")
    if not isinstance(edges, list):
        raise ValueError("edges must be a list of pairs")
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise ValueError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    return graph_from_edges([str(x) for x in labels], pairs)
