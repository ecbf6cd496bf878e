"""Operator algebra against an independent dense-matrix oracle."""

import random

import pytest

from ringline import golden
from ringline.pauli import (
    IDENTITY,
    MerminResult,
    PauliOp,
    PhasedPauli,
    commutation_table,
    commutes,
    line_product_sign,
    mermin_square_check,
    mub_spread_check,
    multiply,
    phased_trace,
    product_of,
    signs_from_commutation,
    standard_labeling,
)

import pauli_oracle as oracle

ALL_OPS = [PauliOp(c) for c in range(1, 16)]


def test_label_round_trip():
    for op in ALL_OPS:
        assert PauliOp.from_label(op.label) == op
        z1, x1, z2, x2 = op.bits
        assert PauliOp.from_bits(z1, x1, z2, x2) == op


def test_bad_labels_rejected():
    for text in ("", "X", "XYZ", "AB", "x1"):
        with pytest.raises(ValueError):
            PauliOp.from_label(text)
    with pytest.raises(ValueError):
        PauliOp.from_label("11")
    with pytest.raises(ValueError):
        PauliOp(0)
    with pytest.raises(ValueError):
        PauliOp(16)


def test_single_qubit_products():
    # XY = iZ and cyclic, reversed order flips the sign
    assert multiply(PauliOp.from_label("X1"), PauliOp.from_label("Y1")).to_string() == "iZ1"
    assert multiply(PauliOp.from_label("Y1"), PauliOp.from_label("Z1")).to_string() == "iX1"
    assert multiply(PauliOp.from_label("Z1"), PauliOp.from_label("X1")).to_string() == "iY1"
    assert multiply(PauliOp.from_label("Y1"), PauliOp.from_label("X1")).to_string() == "-iZ1"
    assert multiply(PauliOp.from_label("1X"), PauliOp.from_label("1X")) == IDENTITY


def test_every_product_matches_matrix_oracle():
    """All 225 ordered products, phase and body both."""
    for a in ALL_OPS:
        for b in ALL_OPS:
            got = multiply(a, b)
            want = oracle.matmul(oracle.mat_for(a), oracle.mat_for(b))
            assert oracle.mat_for_phased(got) == want


def test_commutation_matches_matrix_oracle():
    for a in ALL_OPS:
        for b in ALL_OPS:
            ab = oracle.matmul(oracle.mat_for(a), oracle.mat_for(b))
            ba = oracle.matmul(oracle.mat_for(b), oracle.mat_for(a))
            assert commutes(a, b) == (ab == ba)


def test_product_associative_random():
    rng = random.Random(42)
    for _ in range(1000):
        a, b, c = (PauliOp(rng.randrange(1, 16)) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_phased_trace():
    assert phased_trace(IDENTITY) == (4, 0)
    assert phased_trace(PhasedPauli(1, None)) == (0, 4)
    assert phased_trace(PhasedPauli(2, None)) == (-4, 0)
    assert phased_trace(PhasedPauli(3, None)) == (0, -4)
    for op in ALL_OPS:
        assert phased_trace(PhasedPauli(0, op)) == (0, 0)
        assert oracle.trace(oracle.mat_for(op)) == oracle.ZERO


def test_phased_string_round_trip():
    for text in ("ZX", "-ZX", "iZX", "-iZX", "11", "-11", "i11", "1Y"):
        assert PhasedPauli.from_string(text).to_string() == text
    assert PhasedPauli.from_string("+ZX").to_string() == "ZX"
    with pytest.raises(ValueError):
        PhasedPauli.from_string("j1X")
    with pytest.raises(ValueError):
        PhasedPauli.from_string("ZXY")


def test_standard_labeling_matches_fixture():
    ops = standard_labeling()
    assert tuple(op.label for op in ops) == golden.OPERATOR_LABELS
    assert len(set(ops)) == 15


def test_commutation_table_shape():
    table = commutation_table(standard_labeling())
    for i in range(15):
        assert table[i][i] is False
        for j in range(15):
            assert table[i][j] == table[j][i]


def test_signs_match_fixture():
    signs = signs_from_commutation(commutation_table(standard_labeling()))
    assert signs == golden.CANONICAL_SIGNS


def test_product_of_matches_oracle():
    rng = random.Random(8)
    for _ in range(100):
        ops = [PauliOp(rng.randrange(1, 16)) for _ in range(rng.randrange(0, 5))]
        got = product_of(ops)
        want = oracle.mat_for_label("11")
        for op in ops:
            want = oracle.matmul(want, oracle.mat_for(op))
        assert oracle.mat_for_phased(got) == want


def _ops_for(labels):
    ops = standard_labeling()
    return [ops[i - 1] for i in labels]


def test_line_product_signs():
    # one quadrangle line with sign -1, two with +1
    assert line_product_sign(_ops_for((7, 8, 9))) == -1
    assert line_product_sign(_ops_for((10, 11, 12))) == 1
    assert line_product_sign(_ops_for((1, 2, 7))) == 1


def test_line_product_sign_rejects_bad_triples():
    ops = standard_labeling()
    with pytest.raises(ValueError):
        line_product_sign([ops[0], ops[0], ops[1]])
    # C1 and C5 do not commute
    assert not commutes(ops[0], ops[4])
    with pytest.raises(ValueError):
        line_product_sign([ops[0], ops[4], ops[7]])
    # X1 and ZZ anticommute, so this is not a valid line either
    with pytest.raises(ValueError):
        line_product_sign(
            [PauliOp.from_label("X1"), PauliOp.from_label("1X"), PauliOp.from_label("ZZ")]
        )


def test_mermin_square_standard_grid():
    rows = [(7, 8, 9), (10, 11, 12), (13, 14, 15)]
    result = mermin_square_check([_ops_for(r) for r in rows])
    assert isinstance(result, MerminResult)
    assert result.row_signs == (-1, 1, 1)
    assert result.col_signs == (1, 1, 1)
    assert result.magic


def test_mermin_sign_product_rule():
    rows = [(7, 8, 9), (10, 11, 12), (13, 14, 15)]
    result = mermin_square_check([_ops_for(r) for r in rows])
    product = 1
    for s in result.row_signs + result.col_signs:
        product *= s
    assert product == -1


def test_mermin_rejects_bad_grids():
    ops = standard_labeling()
    with pytest.raises(ValueError):
        mermin_square_check([[ops[0]] * 3] * 3)
    with pytest.raises(ValueError):
        mermin_square_check([[ops[0], ops[1]], [ops[2], ops[3]]])


def test_mub_rejects_overlapping_lines():
    with pytest.raises(ValueError):
        mub_spread_check([_ops_for((7, 8, 9))] * 5)


def test_mub_oracle_cross_check():
    """One spread passes, and the projector traces recomputed with dense
    matrices give exactly the same answer."""
    from fractions import Fraction

    spread = ((1, 2, 7), (3, 5, 8), (4, 6, 9), (10, 11, 12), (13, 14, 15))
    assert mub_spread_check([_ops_for(t) for t in spread])

    quarter = (Fraction(1, 4), Fraction(0))
    ident = oracle.mat_for_label("11")
    bases = []
    for triple in spread:
        a, b = _ops_for(triple[:2])
        ma, mb = oracle.mat_for(a), oracle.mat_for(b)
        projectors = []
        for sa in (1, -1):
            for sb in (1, -1):
                ca = (Fraction(sa), Fraction(0))
                cb = (Fraction(sb), Fraction(0))
                pa = oracle.scale(quarter, oracle.mat_add(ident, oracle.scale(ca, ma)))
                pb = oracle.mat_add(ident, oracle.scale(cb, mb))
                projectors.append(oracle.matmul(pa, pb))
        bases.append(projectors)
    for i, base1 in enumerate(bases):
        for p in base1:
            # projector: p * p == p, trace 1
            assert oracle.matmul(p, p) == p
            assert oracle.trace(p) == (Fraction(1), Fraction(0))
        for j, base2 in enumerate(bases):
            for a, p in enumerate(base1):
                for b, q in enumerate(base2):
                    t = oracle.trace(oracle.matmul(p, q))
                    if i == j:
                        want = (Fraction(int(a == b)), Fraction(0))
                    else:
                        want = (Fraction(1, 4), Fraction(0))
                    assert t == want
