"""Table-driven finite associative rings with unity.

A ring element is a plain int in ``[0, order)``: an opaque label into the
ring's addition and multiplication tables.  Every ring also carries a
faithful GF(2) matrix representation (one bit-packed ``rep_dim x rep_dim``
matrix per element) under which addition is XOR and multiplication is the
GF(2) matrix product, so invertibility questions reduce to bit-matrix rank
tests.  Zero counts as a zero-divisor; units and zero-divisors partition
the ring.

Rings in scope: the full 2x2 matrix ring over GF(2) (``m2f2``, the unique
simple non-commutative ring of order 16) and the four commutative companions
of characteristic two (``gf2``, ``gf4``, ``gf2xgf2``, ``gf2dual``), each
realized inside ``m2f2`` by its standard matrix model.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import gf2

__all__ = [
    "RingElement",
    "Ring",
    "build_m2f2",
    "build_gf2",
    "build_gf4",
    "build_gf2xgf2",
    "build_gf2dual",
    "build_small_rings",
    "ring_by_name",
    "ring_names",
    "units",
    "zero_divisors",
    "validate_ring",
    "ring_to_json_dict",
    "ring_from_json_dict",
]

RingElement = int


@dataclass(frozen=True)
class Ring:
    """A finite associative ring with unity, defined by lookup tables.

    Attributes
    ----------
    name : str
        Registry key, e.g. ``"m2f2"``.
    order : int
        Number of elements; the elements are the ints ``0 .. order-1``.
    zero, one : int
        Additive and multiplicative identity labels.
    add_table, mul_table : nested tuples
        ``add_table[x][y] == x + y`` and ``mul_table[x][y] == x * y``.
    rep_dim : int
        Side length of the representation matrices.
    rep : tuple of bit matrices
        ``rep[x]`` is the faithful GF(2) image of ``x`` (see :mod:`.gf2`).
    """

    name: str
    order: int
    zero: RingElement
    one: RingElement
    add_table: tuple[tuple[RingElement, ...], ...]
    mul_table: tuple[tuple[RingElement, ...], ...]
    rep_dim: int
    rep: tuple[gf2.BitMatrix, ...]

    def add(self, x: RingElement, y: RingElement) -> RingElement:
        return self.add_table[x][y]

    def mul(self, x: RingElement, y: RingElement) -> RingElement:
        return self.mul_table[x][y]

    def elements(self) -> range:
        return range(self.order)


def _ring_from_reps(name: str, rep_dim: int, reps: tuple[gf2.BitMatrix, ...]) -> Ring:
    # Tables are derived from the matrix arithmetic of ``reps``, which must be
    # closed under XOR and GF(2) matrix product.
    index = {m: i for i, m in enumerate(reps)}
    if len(index) != len(reps):
        raise ValueError(f"{name}: representation matrices are not distinct")
    order = len(reps)

    def look(m: gf2.BitMatrix, op: str, x: int, y: int) -> int:
        try:
            return index[m]
        except KeyError:
            raise ValueError(f"{name}: not closed under {op} at ({x}, {y})") from None

    add_table = tuple(
        tuple(look(gf2.add(reps[x], reps[y]), "addition", x, y) for y in range(order))
        for x in range(order)
    )
    mul_table = tuple(
        tuple(look(gf2.multiply(reps[x], reps[y]), "multiplication", x, y) for y in range(order))
        for x in range(order)
    )
    zero = index[tuple([0] * rep_dim)]
    one = index[gf2.identity(rep_dim)]
    return Ring(name, order, zero, one, add_table, mul_table, rep_dim, reps)


# The sixteen 2x2 bit matrices in label order.  Label 1 is the identity,
# labels 0..15 otherwise follow the fixed published numbering that the rest
# of the package (point representatives, sign matrix) is keyed to.
_M2F2_MATRICES = (
    [[0, 0], [0, 0]],  # 0
    [[1, 0], [0, 1]],  # 1
    [[0, 1], [1, 0]],  # 2
    [[1, 1], [1, 1]],  # 3
    [[0, 0], [1, 1]],  # 4
    [[1, 0], [1, 0]],  # 5
    [[0, 1], [0, 1]],  # 6
    [[1, 1], [0, 0]],  # 7
    [[0, 1], [0, 0]],  # 8
    [[1, 1], [0, 1]],  # 9
    [[0, 0], [1, 0]],  # 10
    [[1, 0], [1, 1]],  # 11
    [[0, 1], [1, 1]],  # 12
    [[1, 1], [1, 0]],  # 13
    [[0, 0], [0, 1]],  # 14
    [[1, 0], [0, 0]],  # 15
)


@lru_cache(maxsize=None)
def build_m2f2() -> Ring:
    """The full ring of 2x2 matrices over GF(2): 16 elements, 6 units."""
    return _ring_from_reps(
        "m2f2", 2, tuple(gf2.rows_from_lists(m) for m in _M2F2_MATRICES)
    )


@lru_cache(maxsize=None)
def build_gf2() -> Ring:
    """The two-element field, represented by 1x1 bit matrices."""
    return _ring_from_reps("gf2", 1, ((0,), (1,)))


@lru_cache(maxsize=None)
def build_gf4() -> Ring:
    """GF(4) via the companion matrix of t^2 + t + 1; label 2 generates."""
    x = gf2.rows_from_lists([[0, 1], [1, 1]])
    one = gf2.identity(2)
    return _ring_from_reps("gf4", 2, ((0, 0), one, x, gf2.add(one, x)))


@lru_cache(maxsize=None)
def build_gf2xgf2() -> Ring:
    """GF(2) x GF(2) as diagonal matrices; labels 2 = (1,0), 3 = (0,1)."""
    return _ring_from_reps(
        "gf2xgf2",
        2,
        (
            (0, 0),
            gf2.identity(2),
            gf2.rows_from_lists([[1, 0], [0, 0]]),
            gf2.rows_from_lists([[0, 0], [0, 1]]),
        ),
    )


@lru_cache(maxsize=None)
def build_gf2dual() -> Ring:
    """GF(2)[x]/<x^2> (dual numbers) as upper triangular matrices; label 2 = x."""
    return _ring_from_reps(
        "gf2dual",
        2,
        (
            (0, 0),
            gf2.identity(2),
            gf2.rows_from_lists([[0, 1], [0, 0]]),
            gf2.rows_from_lists([[1, 1], [0, 1]]),
        ),
    )


def build_small_rings() -> dict[str, Ring]:
    """The four commutative rings of characteristic two, keyed by name."""
    rings = (build_gf2(), build_gf4(), build_gf2xgf2(), build_gf2dual())
    return {r.name: r for r in rings}


_BUILDERS = {
    "m2f2": build_m2f2,
    "gf2": build_gf2,
    "gf4": build_gf4,
    "gf2xgf2": build_gf2xgf2,
    "gf2dual": build_gf2dual,
}


def ring_names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


def ring_by_name(name: str) -> Ring:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise ValueError(f"unknown ring {name!r}; choose from {', '.join(_BUILDERS)}") from None


@lru_cache(maxsize=None)
def units(ring: Ring) -> frozenset[RingElement]:
    """Elements with a two-sided multiplicative inverse."""
    found = []
    for x in ring.elements():
        for y in ring.elements():
            if ring.mul(x, y) == ring.one and ring.mul(y, x) == ring.one:
                found.append(x)
                break
    return frozenset(found)


def zero_divisors(ring: Ring) -> frozenset[RingElement]:
    """Non-units, zero included."""
    return frozenset(ring.elements()) - units(ring)


def validate_ring(ring: Ring) -> list[str]:
    """Exhaustively check the ring axioms and the representation.

    Returns a list of violation strings, one per violated cell or triple;
    an empty list means the ring is valid.  Checks: abelian-group axioms for
    addition, two-sided multiplicative identity, associativity of both
    operations, both distributive laws, and that ``rep`` is a faithful
    unital homomorphism.
    """
    problems: list[str] = []
    n = ring.order
    rng = range(n)
    add, mul = ring.add_table, ring.mul_table

    if len(add) != n or any(len(row) != n for row in add):
        return [f"add_table is not {n}x{n}"]
    if len(mul) != n or any(len(row) != n for row in mul):
        return [f"mul_table is not {n}x{n}"]
    for x in rng:
        for y in rng:
            if not 0 <= add[x][y] < n:
                problems.append(f"add_table[{x}][{y}] = {add[x][y]} out of range")
            if not 0 <= mul[x][y] < n:
                problems.append(f"mul_table[{x}][{y}] = {mul[x][y]} out of range")
    if problems:
        return problems

    for x in rng:
        if add[ring.zero][x] != x or add[x][ring.zero] != x:
            problems.append(f"zero is not an additive identity at x={x}")
        if mul[ring.one][x] != x or mul[x][ring.one] != x:
            problems.append(f"one is not a multiplicative identity at x={x}")
        if all(add[x][y] != ring.zero for y in rng):
            problems.append(f"x={x} has no additive inverse")
    for x in rng:
        for y in rng:
            if add[x][y] != add[y][x]:
                problems.append(f"addition is not commutative at (x,y)=({x},{y})")
    for x in rng:
        for y in rng:
            for z in rng:
                if add[add[x][y]][z] != add[x][add[y][z]]:
                    problems.append(f"addition is not associative at (x,y,z)=({x},{y},{z})")
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    problems.append(f"multiplication is not associative at (x,y,z)=({x},{y},{z})")
                if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
                    problems.append(f"left distributivity fails at (x,y,z)=({x},{y},{z})")
                if mul[add[x][y]][z] != add[mul[x][z]][mul[y][z]]:
                    problems.append(f"right distributivity fails at (x,y,z)=({x},{y},{z})")

    if len(ring.rep) != n:
        problems.append("rep does not cover every element")
        return problems
    if len(set(ring.rep)) != n:
        problems.append("rep is not injective")
    if ring.rep[ring.one] != gf2.identity(ring.rep_dim):
        problems.append("rep(one) is not the identity matrix")
    if any(ring.rep[ring.zero]):
        problems.append("rep(zero) is not the zero matrix")
    for x in rng:
        for y in rng:
            if ring.rep[add[x][y]] != gf2.add(ring.rep[x], ring.rep[y]):
                problems.append(f"rep breaks addition at (x,y)=({x},{y})")
            if ring.rep[mul[x][y]] != gf2.multiply(ring.rep[x], ring.rep[y]):
                problems.append(f"rep breaks multiplication at (x,y)=({x},{y})")
    return problems


def ring_to_json_dict(ring: Ring) -> dict:
    """JSON-safe document for a ring; the on-disk fixture format."""
    return {
        "schema": 1,
        "name": ring.name,
        "order": ring.order,
        "zero": ring.zero,
        "one": ring.one,
        "add_table": [list(row) for row in ring.add_table],
        "mul_table": [list(row) for row in ring.mul_table],
        "rep_dim": ring.rep_dim,
        "rep": [gf2.rows_to_lists(m, ring.rep_dim) for m in ring.rep],
    }


def ring_from_json_dict(doc: dict) -> Ring:
    if doc.get("schema") != 1:
        raise ValueError(f"unsupported ring document schema: {doc.get('schema')!r}")
    return Ring(
        name=doc["name"],
        order=doc["order"],
        zero=doc["zero"],
        one=doc["one"],
        add_table=tuple(tuple(row) for row in doc["add_table"]),
        mul_table=tuple(tuple(row) for row in doc["mul_table"]),
        rep_dim=doc["rep_dim"],
        rep=tuple(gf2.rows_from_lists(m) for m in doc["rep"]),
    )
