"""Point-line incidence geometry for the generalized quadrangle of order two.

The structure is recovered from a collinearity graph whose edges each lie on
exactly one triangle (the triangles are the lines), then validated against
the quadrangle axioms.  Also here: geometric hyperplanes (ovoids, perp sets,
grids), spreads by exact cover, duality, the Petersen graph, and a small
backtracking graph-isomorphism search (no external canonical-labeling
dependency; instances never exceed 16 vertices).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

__all__ = [
    "Graph",
    "girth",
    "triangles",
    "IncidenceStructure",
    "build_gq_from_graph",
    "validate_gq_axioms",
    "is_strongly_regular",
    "Hyperplane",
    "OVOID",
    "PERP_SET",
    "GRID",
    "enumerate_ovoids",
    "enumerate_hyperplanes",
    "enumerate_spreads",
    "complement_graph_of_ovoid",
    "petersen_graph",
    "is_petersen",
    "graph_isomorphism",
    "structure_isomorphism",
    "dual",
    "spread_removal_dual",
    "line_intersection_graph",
]

Vertex = Hashable


@dataclass(frozen=True)
class Graph:
    """An undirected graph with hashable vertices; immutable."""

    vertices: tuple
    edges: frozenset[frozenset]

    @classmethod
    def from_edges(cls, vertices: Iterable[Vertex], edges: Iterable) -> Graph:
        verts = tuple(vertices)
        vset = set(verts)
        norm = set()
        for e in edges:
            e = frozenset(e)
            if len(e) != 2 or not e <= vset:
                raise ValueError(f"bad edge {set(e)}")
            norm.add(e)
        return cls(verts, frozenset(norm))

    @cached_property
    def adjacency(self) -> dict:
        adj: dict = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nbrs) for v, nbrs in adj.items()}

    def neighbors(self, v: Vertex) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: Vertex) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return frozenset((u, v)) in self.edges

    def induced(self, keep: Iterable[Vertex]) -> Graph:
        keep = tuple(keep)
        kset = set(keep)
        return Graph(keep, frozenset(e for e in self.edges if e <= kset))

    def sorted_edges(self) -> list[tuple]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        out = [tuple(sorted(e, key=pos.__getitem__)) for e in self.edges]
        return sorted(out, key=lambda e: (pos[e[0]], pos[e[1]]))


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    best: int | None = None
    for u, v in g.sorted_edges():
        # shortest u-v path avoiding the edge itself, plus the edge
        dist = {u: 0}
        queue = [u]
        while queue:
            nxt = []
            for w in queue:
                for x in g.neighbors(w):
                    if w == u and x == v:
                        continue
                    if x not in dist:
                        dist[x] = dist[w] + 1
                        nxt.append(x)
            queue = nxt
        if v in dist and (best is None or dist[v] + 1 < best):
            best = dist[v] + 1
    return best


def triangles(g: Graph) -> list[frozenset]:
    """All 3-cliques, each listed once."""
    pos = {v: i for i, v in enumerate(g.vertices)}
    out = []
    for u, v in g.sorted_edges():
        for w in g.neighbors(u) & g.neighbors(v):
            if pos[w] > pos[v]:
                out.append(frozenset((u, v, w)))
    return out


@dataclass(frozen=True)
class IncidenceStructure:
    """Points plus lines (each line a frozenset of points)."""

    points: tuple
    lines: tuple[frozenset, ...]

    @cached_property
    def _lines_by_point(self) -> dict:
        out: dict = {p: [] for p in self.points}
        for i, line in enumerate(self.lines):
            for p in line:
                out[p].append(i)
        return {p: tuple(ids) for p, ids in out.items()}

    def lines_through(self, p: Vertex) -> tuple[int, ...]:
        return self._lines_by_point[p]

    def collinear(self, p: Vertex, q: Vertex) -> bool:
        if p == q:
            return False
        return any(q in self.lines[i] for i in self.lines_through(p))

    def collinearity_graph(self) -> Graph:
        edges = set()
        for line in self.lines:
            for u, v in itertools.combinations(sorted(line, key=str), 2):
                edges.add(frozenset((u, v)))
        return Graph(self.points, frozenset(edges))


def build_gq_from_graph(g: Graph) -> IncidenceStructure:
    """Recover the quadrangle whose collinearity graph is ``g``.

    Lines are the triangles of the graph; every edge must lie on exactly
    one triangle, and the resulting structure must pass the order-two
    quadrangle axioms.  Raises ValueError otherwise.
    """
    tris = triangles(g)
    cover: dict[frozenset, int] = {e: 0 for e in g.edges}
    for t in tris:
        for e in itertools.combinations(sorted(t, key=str), 2):
            cover[frozenset(e)] += 1
    bad = [e for e, n in cover.items() if n != 1]
    if bad:
        e = sorted(sorted(e, key=str) for e in bad)[0]
        raise ValueError(f"edge {tuple(e)} lies on {cover[frozenset(e)]} triangles, expected 1")
    pos = {v: i for i, v in enumerate(g.vertices)}
    lines = tuple(sorted(tris, key=lambda t: sorted(pos[p] for p in t)))
    s = IncidenceStructure(g.vertices, lines)
    problems = validate_gq_axioms(s)
    if problems:
        raise ValueError("not a generalized quadrangle: " + "; ".join(problems))
    return s


def validate_gq_axioms(s: IncidenceStructure) -> list[str]:
    """Check the order-two generalized quadrangle axioms.

    Three points per line, three lines per point, two points on at most one
    common line, and for every non-incident point-line pair exactly one
    point of the line collinear with the point.  Returns violation strings.
    """
    problems = []
    for i, line in enumerate(s.lines):
        if len(line) != 3:
            problems.append(f"line {i} has {len(line)} points, expected 3")
    for p in s.points:
        n = len(s.lines_through(p))
        if n != 3:
            problems.append(f"point {p} lies on {n} lines, expected 3")
    for p, q in itertools.combinations(s.points, 2):
        common = sum(1 for i in s.lines_through(p) if q in s.lines[i])
        if common > 1:
            problems.append(f"points {p} and {q} lie on {common} common lines")
    for i, line in enumerate(s.lines):
        for p in s.points:
            if p in line:
                continue
            met = sum(1 for q in line if s.collinear(p, q))
            if met != 1:
                problems.append(
                    f"point {p} sees {met} points of line {i}, expected exactly 1"
                )
    return problems


def is_strongly_regular(g: Graph, n: int, k: int, lam: int, mu: int) -> bool:
    """Exhaustive strongly-regular-graph parameter check."""
    if len(g.vertices) != n:
        return False
    if any(g.degree(v) != k for v in g.vertices):
        return False
    for u, v in itertools.combinations(g.vertices, 2):
        common = len(g.neighbors(u) & g.neighbors(v))
        if g.has_edge(u, v):
            if common != lam:
                return False
        elif common != mu:
            return False
    return True


OVOID = "ovoid"
PERP_SET = "perp_set"
GRID = "grid"

_KIND_ORDER = {OVOID: 0, PERP_SET: 1, GRID: 2}


@dataclass(frozen=True)
class Hyperplane:
    """A point set met by every line in exactly one point or contained fully.

    ``kind`` is one of "ovoid", "perp_set", "grid"; perp sets carry their
    center.
    """

    kind: str
    points: frozenset
    center: Vertex | None = None


def _sorted_points(s: IncidenceStructure, pts: Iterable) -> tuple:
    pos = {p: i for i, p in enumerate(s.points)}
    return tuple(sorted(pts, key=pos.__getitem__))


def enumerate_ovoids(s: IncidenceStructure) -> tuple[Hyperplane, ...]:
    """All 5-point sets meeting every line exactly once (exhaustive)."""
    out = []
    for combo in itertools.combinations(s.points, 5):
        pts = frozenset(combo)
        if all(len(line & pts) == 1 for line in s.lines):
            out.append(Hyperplane(OVOID, pts))
    return tuple(out)


def _classify_hyperplane(s: IncidenceStructure, pts: frozenset) -> Hyperplane:
    contained = [line for line in s.lines if line <= pts]
    if len(pts) == 5 and not contained:
        return Hyperplane(OVOID, pts)
    if len(pts) == 7:
        g = s.collinearity_graph()
        for x in pts:
            if pts == g.neighbors(x) | {x}:
                return Hyperplane(PERP_SET, pts, center=x)
    if len(pts) == 9 and len(contained) == 6:
        if all(sum(1 for line in contained if p in line) == 2 for p in pts):
            return Hyperplane(GRID, pts)
    raise ValueError(f"hyperplane {sorted(pts, key=str)} fits no known kind")


def enumerate_hyperplanes(s: IncidenceStructure) -> tuple[Hyperplane, ...]:
    """All proper geometric hyperplanes, classified and sorted by kind.

    Depth-first search over point in/out decisions, pruning any line that
    can no longer meet the set in exactly 1 or 3 points.
    """
    points = list(s.points)
    n = len(points)
    line_ids_by_point = [s.lines_through(p) for p in points]
    line_size = [len(line) for line in s.lines]
    inside = [0] * len(s.lines)
    decided = [0] * len(s.lines)
    chosen: list = []
    found: list[frozenset] = []

    def feasible(i: int) -> bool:
        inc, dec = inside[i], decided[i]
        rest = line_size[i] - dec
        return (inc <= 1 <= inc + rest) or (inc <= 3 <= inc + rest)

    def walk(idx: int) -> None:
        if idx == n:
            if all(inside[i] in (1, 3) for i in range(len(s.lines))):
                found.append(frozenset(chosen))
            return
        p = points[idx]
        for take in (True, False):
            for i in line_ids_by_point[idx]:
                decided[i] += 1
                if take:
                    inside[i] += 1
            if take:
                chosen.append(p)
            if all(feasible(i) for i in line_ids_by_point[idx]):
                walk(idx + 1)
            if take:
                chosen.pop()
            for i in line_ids_by_point[idx]:
                decided[i] -= 1
                if take:
                    inside[i] -= 1

    walk(0)
    all_points = frozenset(points)
    planes = [
        _classify_hyperplane(s, pts) for pts in found if pts != all_points
    ]
    planes.sort(key=lambda h: (_KIND_ORDER[h.kind], _sorted_points(s, h.points)))
    return tuple(planes)


def enumerate_spreads(s: IncidenceStructure) -> tuple[tuple[int, ...], ...]:
    """All partitions of the points into pairwise-disjoint lines, as sorted
    tuples of line indices (exact-cover backtracking)."""
    pos = {p: i for i, p in enumerate(s.points)}
    out: list[tuple[int, ...]] = []

    def cover(remaining: frozenset, used: tuple[int, ...]) -> None:
        if not remaining:
            out.append(tuple(sorted(used)))
            return
        p = min(remaining, key=pos.__getitem__)
        for i in s.lines_through(p):
            if s.lines[i] <= remaining:
                cover(remaining - s.lines[i], used + (i,))

    cover(frozenset(s.points), ())
    return tuple(sorted(set(out)))


def complement_graph_of_ovoid(s: IncidenceStructure, ovoid: Iterable) -> Graph:
    """Collinearity graph induced on the points off the ovoid."""
    off = set(ovoid)
    keep = [p for p in s.points if p not in off]
    return s.collinearity_graph().induced(keep)


def petersen_graph() -> Graph:
    """The standard model: 2-subsets of a 5-set, edges between disjoint pairs."""
    verts = tuple(itertools.combinations(range(5), 2))
    edges = [
        (u, v)
        for u, v in itertools.combinations(verts, 2)
        if not set(u) & set(v)
    ]
    return Graph.from_edges(verts, edges)


def is_petersen(g: Graph) -> bool:
    """10 vertices, 3-regular, girth 5, plus an explicit isomorphism."""
    if len(g.vertices) != 10 or any(g.degree(v) != 3 for v in g.vertices):
        return False
    if girth(g) != 5:
        return False
    return graph_isomorphism(g, petersen_graph()) is not None


def graph_isomorphism(g: Graph, h: Graph) -> dict | None:
    """A vertex bijection preserving adjacency both ways, or None.

    Permutation backtracking: vertices of ``g`` are ordered greedily to stay
    connected to the already-mapped part; candidates must match degree and
    the full adjacency pattern against everything mapped so far.
    """
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return None
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return None

    remaining = list(g.vertices)
    order: list = []
    placed: set = set()
    while remaining:
        remaining.sort(key=lambda v: (-len(g.neighbors(v) & placed), -g.degree(v)))
        v = remaining.pop(0)
        order.append(v)
        placed.add(v)

    mapping: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in h.vertices:
            if w in used or h.degree(w) != g.degree(v):
                continue
            if any(g.has_edge(u, v) != h.has_edge(mapping[u], w) for u in mapping):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def structure_isomorphism(s1: IncidenceStructure, s2: IncidenceStructure) -> dict | None:
    """A point bijection carrying lines to lines, or None.

    Found through the collinearity graphs and then verified on the line
    sets, which is complete whenever lines are exactly the triangles of the
    collinearity graph (true for the structures handled here).
    """
    iso = graph_isomorphism(s1.collinearity_graph(), s2.collinearity_graph())
    if iso is None:
        return None
    lines2 = set(s2.lines)
    if all(frozenset(iso[p] for p in line) in lines2 for line in s1.lines):
        return iso
    return None


def dual(s: IncidenceStructure) -> IncidenceStructure:
    """Swap points and lines: dual points are line indices, dual lines are
    the pencils of lines through each point."""
    pencils = [frozenset(s.lines_through(p)) for p in s.points]
    pencils.sort(key=sorted)
    return IncidenceStructure(tuple(range(len(s.lines))), tuple(pencils))


def spread_removal_dual(s: IncidenceStructure, spread: Sequence[int]) -> IncidenceStructure:
    """The structure left after deleting the lines of a spread."""
    drop = set(spread)
    keep = tuple(line for i, line in enumerate(s.lines) if i not in drop)
    return IncidenceStructure(s.points, keep)


def line_intersection_graph(s: IncidenceStructure) -> Graph:
    """Vertices are line indices; edges join lines sharing a point."""
    ids = tuple(range(len(s.lines)))
    edges = [
        (i, j)
        for i, j in itertools.combinations(ids, 2)
        if s.lines[i] & s.lines[j]
    ]
    return Graph.from_edges(ids, edges)
