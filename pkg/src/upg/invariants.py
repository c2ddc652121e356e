"""Exact graph invariants.

All solvers are exact; the NP-hard ones (domination, clique, chromatic,
hamiltonicity) use branch and bound over bitmask vertex sets and are
meant for the graph sizes unit groups produce, not for general instances.
Planarity and hamiltonicity fall back to bounded exhaustive searches and
refuse (VertexBoundError) beyond their vertex limits.

Values that can be infinite (girth, diameter, radius) use ``math.inf``;
``fmt_extended`` renders them as ``"inf"``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    SimpleGraph,
    bit_indices,
    component_masks,
    recognize_complete_multipartite,
)

INFINITY = math.inf

# Extended natural number: a nonnegative int, or INFINITY.
ExtendedNat = int | float

DEFAULT_PLANARITY_LIMIT = 24
DEFAULT_HAMILTONIAN_LIMIT = 64


class VertexBoundError(Exception):
    """An exhaustive search was refused because the graph is too large."""

    def __init__(self, invariant: str, n: int, bound: int):
        super().__init__(
            f"{invariant}: graph has {n} vertices, exhaustive search bounded at {bound}"
        )
        self.invariant = invariant
        self.n = n
        self.bound = bound


def fmt_extended(value: ExtendedNat) -> str:
    return "inf" if value == INFINITY else str(int(value))


def components(g: SimpleGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    return [list(bit_indices(mask)) for mask in component_masks(g)]


def isolated_vertices(g: SimpleGraph) -> list[int]:
    return [v for v in range(g.n) if g.adj[v] == 0]


def _bfs_dist(g: SimpleGraph, root: int) -> list[int]:
    """BFS distances from root; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[root] = 0
    frontier = [root]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in bit_indices(g.adj[u]):
                if dist[v] == -1:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def girth(g: SimpleGraph) -> ExtendedNat:
    """Length of a shortest cycle, INFINITY for forests.

    BFS from every root; a non-tree edge (u, v) seen from root r closes a
    walk of length dist[u] + dist[v] + 1 containing a cycle no longer than
    itself, and for r on a shortest cycle the bound is attained.
    """
    best: ExtendedNat = INFINITY
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                if 2 * dist[u] >= best:
                    continue
                for v in bit_indices(g.adj[u]):
                    if dist[v] == -1:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
                    elif v != parent[u]:
                        cand = dist[u] + dist[v] + 1
                        if cand < best:
                            best = cand
            frontier = nxt
    return best


def eccentricity_profile(
    g: SimpleGraph,
) -> tuple[ExtendedNat, ExtendedNat, list[ExtendedNat]]:
    """(diameter, radius, eccentricities).

    In a disconnected graph every eccentricity is INFINITY.  A single
    vertex has eccentricity 0.
    """
    if g.n == 0:
        return 0, 0, []
    ecc: list[ExtendedNat] = []
    for v in range(g.n):
        dist = _bfs_dist(g, v)
        ecc.append(INFINITY if -1 in dist else max(dist))
    return max(ecc), min(ecc), ecc


def domination_number(g: SimpleGraph) -> int:
    """Minimum size of a set whose closed neighborhoods cover the graph.

    Dominating sets split over connected components, so each component is
    solved on its own: greedy upper bound, then branch and bound picking
    an undominated vertex with the fewest candidate dominators.
    """
    if g.n == 0:
        return 0
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    return sum(_dominate_component(closed, mask) for mask in component_masks(g))


def _dominate_component(closed: list[int], comp: int) -> int:
    vertices = list(bit_indices(comp))
    if len(vertices) == 1:
        return 1

    # greedy upper bound
    dominated = 0
    greedy = 0
    while dominated != comp:
        best_v = max(
            vertices, key=lambda v: ((closed[v] & comp & ~dominated).bit_count(), -v)
        )
        dominated |= closed[best_v]
        greedy += 1

    best = greedy

    def lower_bound(undominated: int) -> int:
        gain = max((closed[v] & undominated).bit_count() for v in vertices)
        return -(-undominated.bit_count() // gain)

    def search(dominated: int, size: int) -> None:
        nonlocal best
        undominated = comp & ~dominated
        if not undominated:
            if size < best:
                best = size
            return
        if size + lower_bound(undominated) >= best:
            return
        pivot = min(bit_indices(undominated), key=lambda v: closed[v].bit_count())
        for w in bit_indices(closed[pivot]):
            search(dominated | closed[w], size + 1)

    search(0, 0)
    return best


def max_clique(g: SimpleGraph) -> tuple[int, int]:
    """(order, vertex mask) of a maximum clique.

    Branch and bound with a greedy-coloring bound: vertices of the
    candidate set are colored greedily and expanded in reverse color
    order; a branch dies when size + color bound cannot beat the best.
    """
    if g.n == 0:
        return 0, 0
    best_size = 0
    best_mask = 0

    def color_sort(candidates: int) -> list[tuple[int, int]]:
        order = []
        color = 0
        rest = candidates
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append((v, color))
                avail &= ~g.adj[v]
                avail &= ~(1 << v)
                rest &= ~(1 << v)
        return order

    def expand(current: int, size: int, candidates: int) -> None:
        nonlocal best_size, best_mask
        if not candidates:
            if size > best_size:
                best_size = size
                best_mask = current
            return
        order = color_sort(candidates)
        cands = candidates
        for v, bound in reversed(order):
            if size + bound <= best_size:
                return
            expand(current | (1 << v), size + 1, cands & g.adj[v])
            cands &= ~(1 << v)

    expand(0, 0, (1 << g.n) - 1)
    return best_size, best_mask


def clique_number(g: SimpleGraph) -> int:
    """Order of a maximum clique (1 for nonempty edgeless graphs)."""
    return max_clique(g)[0]


def _dsatur_greedy(g: SimpleGraph) -> tuple[int, list[int]]:
    """Greedy DSATUR coloring; returns (color count, coloring)."""
    if g.n == 0:
        return 0, []
    color = [-1] * g.n
    neighbor_colors: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if color[u] == -1),
            key=lambda u: (len(neighbor_colors[u]), g.degree(u), -u),
        )
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        color[v] = c
        for u in bit_indices(g.adj[v]):
            neighbor_colors[u].add(c)
    return max(color) + 1, color


def _k_colorable(g: SimpleGraph, k: int, clique_mask: int) -> bool:
    """Exact backtracking k-colorability with a precolored maximum clique."""
    color = [-1] * g.n
    used = 0
    for v in bit_indices(clique_mask):
        color[v] = used
        used += 1
    if used > k:
        return False

    def admissible(v: int) -> list[int]:
        banned = {color[u] for u in bit_indices(g.adj[v]) if color[u] != -1}
        top = min(k, max([color[u] for u in range(g.n) if color[u] != -1], default=-1) + 2)
        return [c for c in range(top) if c not in banned]

    def pick() -> int | None:
        best_v, best_key = None, None
        for v in range(g.n):
            if color[v] != -1:
                continue
            sat = len({color[u] for u in bit_indices(g.adj[v]) if color[u] != -1})
            key = (-sat, -g.degree(v), v)
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        return best_v

    def solve() -> bool:
        v = pick()
        if v is None:
            return True
        for c in admissible(v):
            color[v] = c
            if solve():
                return True
            color[v] = -1
        return False

    return solve()


def chromatic_number(g: SimpleGraph) -> int:
    """Exact chromatic number via clique lower bound, DSATUR upper bound,
    and backtracking k-colorability between them."""
    if g.n == 0:
        return 0
    lb, clique_mask = max_clique(g)
    ub, _ = _dsatur_greedy(g)
    for k in range(lb, ub):
        if _k_colorable(g, k, clique_mask):
            return k
    return ub


def multipartite_planar(part_sizes: tuple[int, ...]) -> bool:
    """Planarity of a complete multipartite graph, by classification.

    With parts sorted descending: one part is always planar; two parts
    iff the second part is at most 2; three parts iff the sizes are
    (n,1,1), (2,2,1) or (2,2,2); four parts iff (1,1,1,1) or (2,1,1,1);
    five or more parts never (they contain K5).
    """
    parts = sorted(part_sizes, reverse=True)
    m = len(parts)
    if m <= 1:
        return True
    if m == 2:
        return parts[1] <= 2
    if m == 3:
        return (parts[1] == 1) or parts == [2, 2, 1] or parts == [2, 2, 2]
    if m == 4:
        return parts == [1, 1, 1, 1] or parts == [2, 1, 1, 1]
    return False


def multipartite_hamiltonian(part_sizes: tuple[int, ...]) -> bool:
    """Hamiltonicity of a complete multipartite graph: no part may
    exceed all others combined; cycles need at least 3 vertices."""
    n = sum(part_sizes)
    return n >= 3 and 2 * max(part_sizes) <= n


def _find_paths(
    g: SimpleGraph, a: int, b: int, blocked: int
):
    """Yield masks of internal vertices of simple a-b paths avoiding blocked."""
    if g.has_edge(a, b):
        yield 0

    def walk(u: int, used: int):
        for v in bit_indices(g.adj[u] & ~blocked & ~used):
            if g.has_edge(v, b):
                yield used | (1 << v)
            yield from walk(v, used | (1 << v))

    yield from walk(a, 0)


def _embed_pairs(g: SimpleGraph, pairs: list[tuple[int, int]], blocked: int) -> bool:
    """Pack internally disjoint paths joining each pair, internal vertices
    outside blocked and outside each other."""
    if not pairs:
        return True
    (a, b), rest = pairs[0], pairs[1:]
    for internal in _find_paths(g, a, b, blocked):
        if _embed_pairs(g, rest, blocked | internal):
            return True
    return False


def _has_k5_subdivision(g: SimpleGraph) -> bool:
    nodes = [v for v in range(g.n) if g.degree(v) >= 4]
    for branch in combinations(nodes, 5):
        blocked = 0
        for v in branch:
            blocked |= 1 << v
        pairs = [(a, b) for a, b in combinations(branch, 2)]
        if _embed_pairs(g, pairs, blocked):
            return True
    return False


def _has_k33_subdivision(g: SimpleGraph) -> bool:
    nodes = [v for v in range(g.n) if g.degree(v) >= 3]
    for branch in combinations(nodes, 6):
        blocked = 0
        for v in branch:
            blocked |= 1 << v
        # bipartitions of 6 branch vertices into two triples, first fixed
        for mates in combinations(branch[1:], 2):
            side_a = (branch[0],) + mates
            side_b = tuple(v for v in branch if v not in side_a)
            pairs = [(a, b) for a in side_a for b in side_b]
            if _embed_pairs(g, pairs, blocked):
                return True
    return False


def is_planar(g: SimpleGraph, *, search_limit: int = DEFAULT_PLANARITY_LIMIT) -> bool:
    """Exact planarity.

    Pipeline: forests and graphs on at most 4 vertices are planar; the
    edge bound 3n - 6 rejects; complete multipartite graphs use the
    classification; otherwise an exhaustive search for K5 and K3,3
    subdivisions decides, refused above search_limit vertices.
    """
    m = g.edge_count
    if g.n <= 4:
        return True
    if m == g.n - len(component_masks(g)):
        return True
    if m > 3 * g.n - 6:
        return False
    profile = recognize_complete_multipartite(g)
    if profile.valid:
        return multipartite_planar(profile.part_sizes)
    if g.n > search_limit:
        raise VertexBoundError("planarity", g.n, search_limit)
    return not _has_k5_subdivision(g) and not _has_k33_subdivision(g)


def is_hamiltonian(
    g: SimpleGraph, *, search_limit: int = DEFAULT_HAMILTONIAN_LIMIT
) -> bool:
    """Exact hamiltonicity.

    Graphs on fewer than 3 vertices, disconnected graphs, and graphs
    with a vertex of degree below 2 or fewer than n edges are refused
    outright; complete multipartite graphs use the closed form; the rest
    fall to backtracking, refused above search_limit vertices.
    """
    if g.n < 3:
        return False
    if len(component_masks(g)) != 1:
        return False
    if g.edge_count < g.n or any(g.degree(v) < 2 for v in range(g.n)):
        return False
    profile = recognize_complete_multipartite(g)
    if profile.valid:
        return multipartite_hamiltonian(profile.part_sizes)
    if g.n > search_limit:
        raise VertexBoundError("hamiltonicity", g.n, search_limit)

    full = (1 << g.n) - 1

    def extend(u: int, visited: int) -> bool:
        if visited == full:
            return g.has_edge(u, 0)
        for v in bit_indices(g.adj[u] & ~visited):
            nxt = visited | (1 << v)
            rem = full & ~nxt
            ok = True
            for w in bit_indices(rem):
                anchors = (g.adj[w] & rem).bit_count()
                anchors += g.adj[w] >> v & 1
                anchors += g.adj[w] & 1
                if anchors < 2:
                    ok = False
                    break
            if ok and extend(v, nxt):
                return True
        return False

    return extend(0, 1)


@dataclass(frozen=True)
class InvariantReport:
    """Full exact invariant set for one graph.

    girth, diameter and radius are extended naturals; everything else is
    finite.  Consistency is asserted at construction.
    """

    n: int
    edge_count: int
    component_count: int
    isolated_count: int
    connected: bool
    girth: ExtendedNat
    diameter: ExtendedNat
    radius: ExtendedNat
    domination_number: int
    chromatic_number: int
    clique_number: int
    planar: bool
    hamiltonian: bool

    def __post_init__(self):
        assert self.radius <= self.diameter
        assert self.clique_number <= self.chromatic_number
        assert self.connected == (self.component_count <= 1)
        if self.hamiltonian:
            assert self.connected and self.n >= 3

    _FIELDS = (
        "n", "edge_count", "component_count", "isolated_count", "connected",
        "girth", "diameter", "radius", "domination_number",
        "chromatic_number", "clique_number", "planar", "hamiltonian",
    )

    def to_json_dict(self) -> dict:
        out: dict = {}
        for name in self._FIELDS:
            value = getattr(self, name)
            if name in ("girth", "diameter", "radius") and value == INFINITY:
                value = "inf"
            elif isinstance(value, float):
                value = int(value)
            out[name] = value
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        """Two-column aligned table, fixed field order."""
        rows = []
        for name in self._FIELDS:
            value = getattr(self, name)
            if isinstance(value, bool):
                text = "true" if value else "false"
            elif name in ("girth", "diameter", "radius"):
                text = fmt_extended(value)
            else:
                text = str(value)
            rows.append((name, text))
        width = max(len(name) for name, _ in rows)
        vwidth = max(len(text) for _, text in rows)
        lines = [f"{name:<{width}}  {text:>{vwidth}}" for name, text in rows]
        return "\n".join(lines) + "\n"


def full_report(
    g: SimpleGraph,
    *,
    planarity_limit: int = DEFAULT_PLANARITY_LIMIT,
    hamiltonian_limit: int = DEFAULT_HAMILTONIAN_LIMIT,
) -> InvariantReport:
    """Compute every invariant of the report for one graph."""
    comp_count = len(component_masks(g))
    diameter, radius, _ = eccentricity_profile(g)
    return InvariantReport(
        n=g.n,
        edge_count=g.edge_count,
        component_count=comp_count,
        isolated_count=len(isolated_vertices(g)),
        connected=comp_count <= 1,
        girth=girth(g),
        diameter=diameter,
        radius=radius,
        domination_number=domination_number(g),
        chromatic_number=chromatic_number(g),
        clique_number=clique_number(g),
        planar=is_planar(g, search_limit=planarity_limit),
        hamiltonian=is_hamiltonian(g, search_limit=hamiltonian_limit),
    )
