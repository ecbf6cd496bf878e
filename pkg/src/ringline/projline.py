"""The projective line over a finite ring with unity.

A pair (a, b) of ring elements is admissible when it is the first row of
some invertible 2x2 matrix over the ring.  Points of the line are the
equivalence classes of admissible pairs under left scaling by units,
(a, b) ~ (ua, ub); the canonical member of a class is its lexicographic
minimum.  Two points are distant when the 2x2 matrix stacking any two of
their representatives is invertible, neighbor otherwise.  The relation does
not depend on the chosen representatives.

Invertibility of a 2x2 matrix over the ring is decided by blowing each
entry up to its GF(2) representation and testing the resulting bit matrix
for full rank; in a finite ring an element is a unit exactly when it is not
a zero-divisor, which makes the rank test exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple

from . import gf2
from .rings import Ring, RingElement, units

__all__ = [
    "DISTANT",
    "NEIGHBOR",
    "Pair",
    "Mat2",
    "PointClass",
    "ProjectiveLine",
    "blowup",
    "is_invertible_2x2",
    "is_admissible",
    "pair_relation",
    "enumerate_line",
    "relation",
    "simultaneous_subconfig",
    "induced_signs",
    "standard_triple",
    "apply_to_pair",
    "mat_mul",
    "mat_inv",
    "gl2_elements",
    "gl2_order",
    "map_standard_triple_to",
    "gl2_transitivity_witness",
    "line_to_json_dict",
]

DISTANT = "+"
NEIGHBOR = "-"

Pair = tuple[RingElement, RingElement]


class Mat2(NamedTuple):
    """A 2x2 matrix over a ring, row-major: ((a, b), (c, d))."""

    a: RingElement
    b: RingElement
    c: RingElement
    d: RingElement


def blowup(ring: Ring, m: Mat2) -> gf2.BitMatrix:
    """The 2k x 2k bit matrix obtained by replacing entries by their reps."""
    k = ring.rep_dim
    rep = ring.rep
    top = tuple(rep[m.a][i] | (rep[m.b][i] << k) for i in range(k))
    bot = tuple(rep[m.c][i] | (rep[m.d][i] << k) for i in range(k))
    return top + bot


def is_invertible_2x2(ring: Ring, m: Mat2) -> bool:
    return gf2.rank(blowup(ring, m)) == 2 * ring.rep_dim


def is_admissible(ring: Ring, a: RingElement, b: RingElement) -> bool:
    """True when (a, b) extends to an invertible 2x2 matrix (search over
    all completions, early exit)."""
    for c in ring.elements():
        for d in ring.elements():
            if is_invertible_2x2(ring, Mat2(a, b, c, d)):
                return True
    return False


def pair_relation(ring: Ring, p: Pair, q: Pair) -> str:
    """DISTANT or NEIGHBOR, from representatives (representative-independent)."""
    m = Mat2(p[0], p[1], q[0], q[1])
    return DISTANT if is_invertible_2x2(ring, m) else NEIGHBOR


@dataclass(frozen=True)
class PointClass:
    """One point: its lexicographically least pair and the whole unit orbit."""

    canonical: Pair
    members: frozenset[Pair]

    def __repr__(self) -> str:
        return f"PointClass{self.canonical}"


@dataclass(frozen=True)
class ProjectiveLine:
    """All points of the line over ``ring``, sorted by canonical pair.

    ``relation[i][j]`` is "+" (distant) or "-" (neighbor) for the points at
    positions i and j; the diagonal is "-".
    """

    ring: Ring
    points: tuple[PointClass, ...]
    relation: tuple[str, ...]

    @cached_property
    def _index_by_pair(self) -> dict[Pair, int]:
        out: dict[Pair, int] = {}
        for i, pt in enumerate(self.points):
            for member in pt.members:
                out[member] = i
        return out

    def index_of(self, pair: Pair) -> int:
        try:
            return self._index_by_pair[pair]
        except KeyError:
            raise ValueError(f"{pair} is not an admissible pair over {self.ring.name}") from None

    def class_of(self, pair: Pair) -> PointClass:
        return self.points[self.index_of(pair)]

    def relation_of(self, x: PointClass | Pair, y: PointClass | Pair) -> str:
        i = self.index_of(x.canonical if isinstance(x, PointClass) else x)
        j = self.index_of(y.canonical if isinstance(y, PointClass) else y)
        return self.relation[i][j]


@lru_cache(maxsize=None)
def enumerate_line(ring: Ring) -> ProjectiveLine:
    """Enumerate all points and the full distant/neighbor relation."""
    unit_list = sorted(units(ring))
    seen: set[Pair] = set()
    points: list[PointClass] = []
    for a in ring.elements():
        for b in ring.elements():
            if (a, b) in seen or not is_admissible(ring, a, b):
                continue
            orbit = frozenset((ring.mul(u, a), ring.mul(u, b)) for u in unit_list)
            seen.update(orbit)
            points.append(PointClass(min(orbit), orbit))
    points.sort(key=lambda pt: pt.canonical)
    rel = tuple(
        "".join(pair_relation(ring, p.canonical, q.canonical) for q in points)
        for p in points
    )
    return ProjectiveLine(ring, tuple(points), rel)


def relation(line: ProjectiveLine, x: PointClass | Pair, y: PointClass | Pair) -> str:
    return line.relation_of(x, y)


def _as_class(line: ProjectiveLine, p: PointClass | Pair) -> PointClass:
    return p if isinstance(p, PointClass) else line.class_of(p)


def _orbit_key(pt: PointClass) -> tuple[int, int, Pair]:
    # Representative-independent sort key: least first entry over the orbit,
    # least second entry over the orbit, canonical pair as tie-break.
    return (
        min(a for a, _ in pt.members),
        min(b for _, b in pt.members),
        pt.canonical,
    )


def simultaneous_subconfig(
    line: ProjectiveLine, u: PointClass | Pair, v: PointClass | Pair
) -> tuple[tuple[PointClass, ...], tuple[PointClass, ...]]:
    """Split the rest of the line by the relation to two distant base points.

    Returns (distant_family, neighbor_family): the points distant to both
    ``u`` and ``v``, and the points neighbor to both.  Points related
    differently to ``u`` than to ``v`` appear in neither family.  Each
    family is sorted by an orbit-derived key (least first entry over the
    orbit, then least second entry, then canonical pair); for the standard
    base points over m2f2 this is exactly the C1..C15 order the sign-matrix
    fixture is written in.  Raises ValueError unless ``u`` and ``v`` are
    distant.
    """
    u = _as_class(line, u)
    v = _as_class(line, v)
    if u == v or line.relation_of(u, v) != DISTANT:
        raise ValueError("the two base points must be distinct and distant")
    distant: list[PointClass] = []
    neighbor: list[PointClass] = []
    for pt in line.points:
        if pt == u or pt == v:
            continue
        ru = line.relation_of(pt, u)
        rv = line.relation_of(pt, v)
        if ru == DISTANT and rv == DISTANT:
            distant.append(pt)
        elif ru == NEIGHBOR and rv == NEIGHBOR:
            neighbor.append(pt)
    distant.sort(key=_orbit_key)
    neighbor.sort(key=_orbit_key)
    return tuple(distant), tuple(neighbor)


def induced_signs(line: ProjectiveLine, pts: Iterable[PointClass | Pair]) -> tuple[str, ...]:
    """The relation matrix restricted to ``pts``, in the given order."""
    idx = [line.index_of(_as_class(line, p).canonical) for p in pts]
    return tuple("".join(line.relation[i][j] for j in idx) for i in idx)


def standard_triple(ring: Ring) -> tuple[Pair, Pair, Pair]:
    """The reference pairwise-distant triple (1,0), (0,1), (1,1)."""
    return ((ring.one, ring.zero), (ring.zero, ring.one), (ring.one, ring.one))


def apply_to_pair(ring: Ring, p: Pair, m: Mat2) -> Pair:
    """Right action of a matrix on a row pair: (a, b) . m."""
    a, b = p
    return (
        ring.add(ring.mul(a, m.a), ring.mul(b, m.c)),
        ring.add(ring.mul(a, m.b), ring.mul(b, m.d)),
    )


def mat_mul(ring: Ring, m: Mat2, n: Mat2) -> Mat2:
    return Mat2(
        ring.add(ring.mul(m.a, n.a), ring.mul(m.b, n.c)),
        ring.add(ring.mul(m.a, n.b), ring.mul(m.b, n.d)),
        ring.add(ring.mul(m.c, n.a), ring.mul(m.d, n.c)),
        ring.add(ring.mul(m.c, n.b), ring.mul(m.d, n.d)),
    )


@lru_cache(maxsize=None)
def _rep_index(ring: Ring) -> dict[gf2.BitMatrix, RingElement]:
    return {m: x for x, m in enumerate(ring.rep)}


def mat_inv(ring: Ring, m: Mat2) -> Mat2:
    """Exact inverse via the bit-matrix representation."""
    k = ring.rep_dim
    inv = gf2.invert(blowup(ring, m), 2 * k)
    if inv is None:
        raise ValueError(f"{m} is not invertible over {ring.name}")
    mask = (1 << k) - 1
    look = _rep_index(ring)

    def block(i: int, j: int) -> RingElement:
        return look[tuple((inv[i * k + r] >> (j * k)) & mask for r in range(k))]

    return Mat2(block(0, 0), block(0, 1), block(1, 0), block(1, 1))


@lru_cache(maxsize=None)
def gl2_elements(ring: Ring) -> tuple[Mat2, ...]:
    """All invertible 2x2 matrices over the ring, by exhaustive rank test."""
    k = ring.rep_dim
    rep = ring.rep
    pair_rows = {
        (a, b): tuple(rep[a][i] | (rep[b][i] << k) for i in range(k))
        for a in ring.elements()
        for b in ring.elements()
    }
    full = 2 * k
    out = []
    for (a, b), top in pair_rows.items():
        for (c, d), bot in pair_rows.items():
            if gf2.rank(top + bot) == full:
                out.append(Mat2(a, b, c, d))
    out.sort()
    return tuple(out)


def gl2_order(ring: Ring) -> int:
    return len(gl2_elements(ring))


def map_standard_triple_to(
    line: ProjectiveLine, triple: tuple[PointClass | Pair, ...]
) -> Mat2:
    """A matrix sending (1,0), (0,1), (1,1) to the given distant triple.

    Any matrix fixing the first two correspondences has rows that are unit
    multiples of representatives of the two target points, so searching the
    unit scalings is a complete search.  Raises ValueError if the triple is
    not pairwise distant or no scaling works (either would contradict the
    transitivity of the invertible group on distant triples).
    """
    ring = line.ring
    x, y, z = (_as_class(line, p) for p in triple)
    for p, q in itertools.combinations((x, y, z), 2):
        if p == q or line.relation_of(p, q) != DISTANT:
            raise ValueError("triple must consist of three pairwise distant points")
    (x0, x1), (y0, y1) = x.canonical, y.canonical
    for ru in sorted(units(ring)):
        for su in sorted(units(ring)):
            m = Mat2(ring.mul(ru, x0), ring.mul(ru, x1), ring.mul(su, y0), ring.mul(su, y1))
            if (ring.add(m.a, m.c), ring.add(m.b, m.d)) in z.members:
                return m
    raise ValueError(f"no matrix maps the standard triple to {triple}")


def gl2_transitivity_witness(
    line: ProjectiveLine,
    triple1: tuple[PointClass | Pair, ...],
    triple2: tuple[PointClass | Pair, ...],
) -> Mat2:
    """An invertible matrix sending triple1 to triple2 pointwise.

    Both triples must be pairwise distant.  The witness is verified before
    it is returned.
    """
    ring = line.ring
    g1 = map_standard_triple_to(line, triple1)
    g2 = map_standard_triple_to(line, triple2)
    w = mat_mul(ring, mat_inv(ring, g1), g2)
    for p, q in zip(triple1, triple2, strict=True):
        src = _as_class(line, p)
        dst = _as_class(line, q)
        if apply_to_pair(ring, src.canonical, w) not in dst.members:
            raise ValueError(f"witness {w} fails to map {src} to {dst}")
    return w


def line_to_json_dict(line: ProjectiveLine) -> dict:
    """JSON document: points with orbits, plus the lower-triangular relation."""
    return {
        "schema": 1,
        "ring": line.ring.name,
        "points": [
            {
                "id": i,
                "canonical": list(pt.canonical),
                "orbit": [list(p) for p in sorted(pt.members)],
            }
            for i, pt in enumerate(line.points)
        ],
        "relation": [list(row[: i + 1]) for i, row in enumerate(line.relation)],
    }
