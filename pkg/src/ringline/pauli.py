"""Exact two-qubit Pauli algebra.

An operator is encoded symplectically as four bits (z1, x1, z2, x2), one
(z, x) pair per tensor factor: (0,0) is the identity factor, (0,1) sigma_x,
(1,0) sigma_z and (1,1) sigma_y.  Two operators commute exactly when the
alternating form z1*x1' + x1*z1' + z2*x2' + x2*z2' vanishes mod 2.

Products carry a phase in {1, i, -1, -i}, stored as the exponent k of i**k.
Everything is integer or Fraction arithmetic; no floating point appears
anywhere, which keeps the Mermin-square signs and the projector-trace
criterion for mutually unbiased bases exact.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .golden import OPERATOR_LABELS

__all__ = [
    "PauliOp",
    "PhasedPauli",
    "IDENTITY",
    "commutes",
    "multiply",
    "product_of",
    "phased_trace",
    "standard_labeling",
    "commutation_table",
    "signs_from_commutation",
    "line_product_sign",
    "MerminResult",
    "mermin_square_check",
    "mub_spread_check",
]

# One-qubit factor codes are two bits z<<1 | x: 0 = identity, 1 = X,
# 2 = Z, 3 = Y.
_FACTOR_CHARS = "1XZY"

# (phase exponent, result code) for each ordered pair of one-qubit factors:
# sigma_a sigma_b = delta_ab 1 + i eps_abc sigma_c, e.g. XY = iZ, YX = -iZ.
_MUL1 = (
    ((0, 0), (0, 1), (0, 2), (0, 3)),
    ((0, 1), (0, 0), (3, 3), (1, 2)),
    ((0, 2), (1, 3), (0, 0), (3, 1)),
    ((0, 3), (3, 2), (1, 1), (0, 0)),
)

_PHASE_PREFIX = {0: "", 1: "i", 2: "-", 3: "-i"}
_PREFIX_PHASE = {"": 0, "+": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}


@dataclass(frozen=True, order=True)
class PauliOp:
    """A non-identity two-qubit Pauli operator, phase-free.

    ``code`` packs the symplectic label z1 x1 z2 x2 into four bits
    (z1 is the high bit); 0 would be the identity and is not allowed here.
    """

    code: int

    def __post_init__(self) -> None:
        if not 1 <= self.code <= 15:
            raise ValueError(f"Pauli code must be in 1..15, got {self.code}")

    @classmethod
    def from_bits(cls, z1: int, x1: int, z2: int, x2: int) -> PauliOp:
        return cls(z1 << 3 | x1 << 2 | z2 << 1 | x2)

    @classmethod
    def from_label(cls, text: str) -> PauliOp:
        """Parse a two-character factor string such as "ZX" or "1Y"."""
        if len(text) != 2 or any(ch not in _FACTOR_CHARS for ch in text):
            raise ValueError(f"bad Pauli label {text!r}")
        f1, f2 = (_FACTOR_CHARS.index(ch) for ch in text)
        if f1 == 0 and f2 == 0:
            raise ValueError("the identity is not a PauliOp; use PhasedPauli")
        return cls(f1 << 2 | f2)

    @property
    def bits(self) -> tuple[int, int, int, int]:
        c = self.code
        return (c >> 3 & 1, c >> 2 & 1, c >> 1 & 1, c & 1)

    @property
    def factors(self) -> tuple[int, int]:
        return (self.code >> 2, self.code & 3)

    @property
    def label(self) -> str:
        f1, f2 = self.factors
        return _FACTOR_CHARS[f1] + _FACTOR_CHARS[f2]

    def __repr__(self) -> str:
        return f"PauliOp({self.label})"


@dataclass(frozen=True)
class PhasedPauli:
    """i**phase_k times a Pauli body; body None stands for the identity."""

    phase_k: int
    body: PauliOp | None

    def __post_init__(self) -> None:
        object.__setattr__(self, "phase_k", self.phase_k % 4)

    @classmethod
    def from_string(cls, text: str) -> PhasedPauli:
        """Parse strings like "ZX", "-iZX", "i1Y", "-11" (minus identity)."""
        m = re.fullmatch(r"([+-]?i?)([1XYZ]{2})", text)
        if m is None:
            raise ValueError(f"bad phased Pauli string {text!r}")
        k = _PREFIX_PHASE[m.group(1)]
        body = None if m.group(2) == "11" else PauliOp.from_label(m.group(2))
        return cls(k, body)

    def to_string(self) -> str:
        label = "11" if self.body is None else self.body.label
        return _PHASE_PREFIX[self.phase_k] + label

    def __repr__(self) -> str:
        return f"PhasedPauli({self.to_string()})"


IDENTITY = PhasedPauli(0, None)


def _as_phased(op: PauliOp | PhasedPauli) -> PhasedPauli:
    return op if isinstance(op, PhasedPauli) else PhasedPauli(0, op)


def commutes(a: PauliOp, b: PauliOp) -> bool:
    """Alternating-form test; exact, no matrices involved."""
    az1, ax1, az2, ax2 = a.bits
    bz1, bx1, bz2, bx2 = b.bits
    return (az1 * bx1 + ax1 * bz1 + az2 * bx2 + ax2 * bz2) % 2 == 0


def _mul_codes(p: int, q: int) -> tuple[int, int]:
    # Factor-wise product of two 4-bit bodies (0 allowed = identity);
    # returns (phase exponent, result code).
    k1, f1 = _MUL1[p >> 2][q >> 2]
    k2, f2 = _MUL1[p & 3][q & 3]
    return (k1 + k2) % 4, f1 << 2 | f2


def multiply(a: PauliOp | PhasedPauli, b: PauliOp | PhasedPauli) -> PhasedPauli:
    """Exact product; phases multiply in {1, i, -1, -i}."""
    a = _as_phased(a)
    b = _as_phased(b)
    pa = 0 if a.body is None else a.body.code
    pb = 0 if b.body is None else b.body.code
    k, code = _mul_codes(pa, pb)
    return PhasedPauli(a.phase_k + b.phase_k + k, PauliOp(code) if code else None)


def product_of(ops: Iterable[PauliOp | PhasedPauli]) -> PhasedPauli:
    return reduce(multiply, ops, IDENTITY)


def phased_trace(p: PhasedPauli) -> tuple[int, int]:
    """Trace as an exact Gaussian integer (re, im): 4 i**k for the identity
    body, 0 otherwise."""
    if p.body is not None:
        return (0, 0)
    return ((4, 0), (0, 4), (-4, 0), (0, -4))[p.phase_k]


def standard_labeling() -> tuple[PauliOp, ...]:
    """The fixed operator dictionary: entry i is the operator of C_{i+1}."""
    return tuple(PauliOp.from_label(s) for s in OPERATOR_LABELS)


def commutation_table(labeling: Sequence[PauliOp]) -> tuple[tuple[bool, ...], ...]:
    """Boolean matrix, entry (i, j) True when operators i and j do NOT
    commute; the diagonal is False."""
    return tuple(
        tuple(not commutes(a, b) for b in labeling) for a in labeling
    )


def signs_from_commutation(table: Sequence[Sequence[bool]]) -> tuple[str, ...]:
    """Rows of "+"/"-" strings: "+" marks a non-commuting pair."""
    return tuple("".join("+" if flag else "-" for flag in row) for row in table)


def line_product_sign(triple: Sequence[PauliOp]) -> int:
    """The sign of the product of a commuting triple whose product is
    proportional to the identity.

    Raises ValueError if the triple is not three distinct pairwise-commuting
    operators or its product is not plus or minus the identity.
    """
    ops = tuple(triple)
    if len(ops) != 3 or len(set(ops)) != 3:
        raise ValueError("expected three distinct operators")
    for a, b in itertools.combinations(ops, 2):
        if not commutes(a, b):
            raise ValueError(f"{a.label} and {b.label} do not commute")
    prod = product_of(ops)
    if prod.body is not None:
        raise ValueError(f"product is {prod.to_string()}, not proportional to the identity")
    if prod.phase_k % 2:
        raise ValueError(f"product phase {prod.to_string()} is imaginary")
    return 1 if prod.phase_k == 0 else -1


@dataclass(frozen=True)
class MerminResult:
    """Signs of the three rows and three columns of a 3x3 operator grid;
    ``magic`` means the six signs multiply to -1."""

    row_signs: tuple[int, int, int]
    col_signs: tuple[int, int, int]

    @property
    def magic(self) -> bool:
        sign = 1
        for s in self.row_signs + self.col_signs:
            sign *= s
        return sign == -1


def mermin_square_check(grid: Sequence[Sequence[PauliOp]]) -> MerminResult:
    """Evaluate a 3x3 grid of operators as a Mermin square.

    Every row and every column must be a commuting triple with product
    plus or minus the identity; violations raise ValueError naming the
    offending row or column.
    """
    if len(grid) != 3 or any(len(row) != 3 for row in grid):
        raise ValueError("expected a 3x3 grid of operators")
    rows = [tuple(row) for row in grid]
    cols = [tuple(row[j] for row in rows) for j in range(3)]
    signs = []
    for kind, lines in (("row", rows), ("column", cols)):
        for i, ops in enumerate(lines, start=1):
            try:
                signs.append(line_product_sign(ops))
            except ValueError as exc:
                raise ValueError(f"{kind} {i}: {exc}") from None
    return MerminResult(tuple(signs[:3]), tuple(signs[3:]))


# A linear combination of Pauli bodies with exact complex coefficients:
# {body code (0 = identity): (re, im) Fractions}.  Enough machinery to
# multiply projectors and take traces without ever leaving Q(i).

_Coef = tuple[Fraction, Fraction]


def _cadd(u: _Coef, v: _Coef) -> _Coef:
    return (u[0] + v[0], u[1] + v[1])


def _cmul(u: _Coef, v: _Coef) -> _Coef:
    return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])


_I_POWER: tuple[_Coef, ...] = (
    (Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(1)),
    (Fraction(-1), Fraction(0)),
    (Fraction(0), Fraction(-1)),
)


def _combo_mul(x: dict[int, _Coef], y: dict[int, _Coef]) -> dict[int, _Coef]:
    out: dict[int, _Coef] = {}
    for p, cp in x.items():
        for q, cq in y.items():
            k, r = _mul_codes(p, q)
            term = _cmul(_cmul(cp, cq), _I_POWER[k])
            out[r] = _cadd(out.get(r, (Fraction(0), Fraction(0))), term)
    return out


def _combo_trace(x: dict[int, _Coef]) -> _Coef:
    re, im = x.get(0, (Fraction(0), Fraction(0)))
    return (4 * re, 4 * im)


def _projector(a: PauliOp, sa: int, b: PauliOp, sb: int) -> dict[int, _Coef]:
    # (1 + sa A)(1 + sb B) / 4 for commuting A, B with A^2 = B^2 = 1:
    # the joint eigenprojector onto eigenvalues (sa, sb).
    half = Fraction(1, 2)
    pa = {0: (half, Fraction(0)), a.code: (sa * half, Fraction(0))}
    pb = {0: (half, Fraction(0)), b.code: (sb * half, Fraction(0))}
    return _combo_mul(pa, pb)


def mub_spread_check(spread: Sequence[Sequence[PauliOp]]) -> bool:
    """Exact mutual-unbiasedness test for five commuting triples.

    Preconditions (violations raise ValueError): five triples, each three
    distinct pairwise-commuting operators with product plus or minus the
    identity, together partitioning all fifteen operators.  The joint
    eigenbases then must satisfy, via exact projector traces,
    Tr(P P') = 1 or 0 within a basis and Tr(P Q) = 1/4 across bases.
    Returns True iff every trace comes out as required.
    """
    triples = [tuple(t) for t in spread]
    if len(triples) != 5:
        raise ValueError("a spread consists of five triples")
    for i, ops in enumerate(triples, start=1):
        try:
            line_product_sign(ops)
        except ValueError as exc:
            raise ValueError(f"triple {i}: {exc}") from None
    codes = [op.code for ops in triples for op in ops]
    if sorted(codes) != list(range(1, 16)):
        raise ValueError("triples do not partition the fifteen operators")

    bases = []
    for ops in triples:
        a, b = sorted(ops, key=lambda op: op.code)[:2]
        bases.append([_projector(a, sa, b, sb) for sa in (1, -1) for sb in (1, -1)])

    one = (Fraction(1), Fraction(0))
    zero = (Fraction(0), Fraction(0))
    quarter = (Fraction(1, 4), Fraction(0))
    for basis in bases:
        for i, p in enumerate(basis):
            for j, q in enumerate(basis):
                want = one if i == j else zero
                if _combo_trace(_combo_mul(p, q)) != want:
                    return False
    for b1, b2 in itertools.combinations(bases, 2):
        for p in b1:
            for q in b2:
                if _combo_trace(_combo_mul(p, q)) != quarter:
                    return False
    return True
