import itertools
import math

import pytest
from hypothesis import given, strategies as st

from ratab.shapes import Eps, ShapeWord, TileKind, build_diagram
from ratab.tableaux import (
    LEFT,
    UP,
    TableauError,
    compute_stats,
    enumerate_fillings,
    extend,
    flatten,
    format_rat,
    is_extended,
    make_rat,
    packed_classify,
    parse_rat,
    restrict,
    split,
    straighten,
    unflatten,
    unsplit,
    unstraighten,
    validate_rat,
    all_rat,
    all_rat_plus,
)

from conftest import SPLIT_EXAMPLE, STATS_EXAMPLE_EXTENDED, STRAIGHT_AFTER, STRAIGHT_BEFORE

SMALL = [R for n in range(5) for r in range(n + 1) for R in all_rat(n, r)]
SMALL_PLUS = [R for n in range(4) for r in range(n + 1) for R in all_rat_plus(n, r)]
small_rat = st.sampled_from(SMALL)


# ---------------------------------------------------------------- geometric oracle

def _centre(tile):
    return (sum(p[0] for p in tile.corners) / 4, sum(p[1] for p in tile.corners) / 4)


def pointed_cells(R):
    """Cells hit by some arrow, using only tile coordinates: up-arrows hit cells
    north of them in their column, left-arrows cells west of them in their row."""
    D = build_diagram(R.word)
    hit = set()
    for (i, j), kind in R.arrows:
        x, y = _centre(D.tiles[(i, j)])
        strip = j if kind == UP else i
        for cell, tile in D.tiles.items():
            if strip not in cell or cell == (i, j):
                continue
            cx, cy = _centre(tile)
            if kind == UP and cell[1] == strip and cy > y:
                hit.add(cell)
            if kind == LEFT and cell[0] == strip and cx < x:
                hit.add(cell)
    return hit


def oracle_valid(R):
    return not (pointed_cells(R) & set(R.amap))


def oracle_fillings(word):
    D = build_diagram(word)
    choices = []
    for cell, tile in D.tiles.items():
        opts = [None]
        if tile.kind is not TileKind.TALL:
            opts.append(UP)
        if tile.kind is not TileKind.SHORT:
            opts.append(LEFT)
        choices.append([(cell, k) for k in opts])
    for pick in itertools.product(*choices):
        R = make_rat(word, {c: k for c, k in pick if k})
        if oracle_valid(R):
            yield R


# ---------------------------------------------------------------- validity

def test_single_up_is_valid():
    assert validate_rat(make_rat("20", {(1, 2): UP})) == []


def test_pointing_pair_is_reported():
    errs = validate_rat(make_rat("200", {(1, 2): LEFT, (1, 3): LEFT}))
    assert errs and "(1, 3)" in errs[0]


def test_left_arrow_in_short_cell_rejected():
    with pytest.raises(TableauError):
        parse_rat("shape: 10\narrows: L@(1,2)")
    with pytest.raises(TableauError):
        validate_rat(make_rat("10", {(1, 2): LEFT}))


def test_arrow_outside_diagram_rejected():
    with pytest.raises(TableauError):
        parse_rat("shape: 02\narrows: U@(1,2)")


def test_up_and_left_in_different_strips():
    # Up@(1,3) and Left@(2,3) sit in column 3 and row 2; neither points at the other
    R = make_rat("2200", {(1, 3): UP, (2, 3): LEFT})
    assert validate_rat(R) == [] and oracle_valid(R)


@given(small_rat)
def test_enumerated_fillings_pass_oracle(R):
    assert oracle_valid(R)
    assert validate_rat(R) == []


def test_fillings_match_brute_force():
    for n in range(5):
        for letters in itertools.product((0, 1, 2), repeat=n):
            w = ShapeWord.standard(letters)
            got = sorted(format_rat(R) for R in enumerate_fillings(w))
            want = sorted(format_rat(R) for R in oracle_fillings(w))
            assert got == want, w


def test_small_filling_lists():
    assert [format_rat(R) for R in enumerate_fillings("10")] == ["shape: 10\narrows:", "shape: 10\narrows: U@(1,2)"]
    assert [format_rat(R) for R in enumerate_fillings("21")] == ["shape: 21\narrows:", "shape: 21\narrows: L@(1,2)"]
    assert len(list(enumerate_fillings("1"))) == 1


def test_text_roundtrip():
    for text in (SPLIT_EXAMPLE, STRAIGHT_BEFORE, STATS_EXAMPLE_EXTENDED):
        R = parse_rat(text)
        assert parse_rat(format_rat(R)) == R


# ---------------------------------------------------------------- statistics

def test_running_example_stats(stats_example):
    s = compute_stats(stats_example)
    assert (s.fcell, s.frow, s.fcol) == (11, 1, 2)
    assert s.free_rows == (2,) and s.free_cols == (4, 8)
    assert (s.row, s.col, s.diag, s.tile) == (3, 3, 2, 16)


def test_single_cell_stats():
    s = compute_stats(make_rat("21"))
    assert (s.fcell, s.frow, s.fcol, s.row, s.diag) == (1, 1, 0, 1, 1)
    s = compute_stats(make_rat("1"))
    assert (s.fcell, s.frow, s.fcol, s.row, s.col, s.tile, s.topup) == (0,) * 7
    assert s.diag == 1


@given(small_rat)
def test_stats_invariants(R):
    s = compute_stats(R)
    D = build_diagram(R.word)
    assert s.row + s.col + s.diag == R.word.n
    assert s.tile == len(D.tiles)
    assert s.topup <= s.col
    free = set(D.tiles) - pointed_cells(R) - set(R.amap)
    assert s.fcell == len(free)


# ---------------------------------------------------------------- extension

def test_extend_running_example(stats_example, stats_example_extended):
    E = extend(stats_example)
    assert E == stats_example_extended
    assert compute_stats(E).topup == compute_stats(stats_example).fcol == 2
    assert restrict(E) == stats_example


def test_extend_single_diagonal():
    assert format_rat(extend(make_rat("1"))) == "shape: 11\narrows:"


def test_restrict_needs_extended():
    with pytest.raises(TableauError):
        restrict(make_rat("10"))


@given(small_rat)
def test_extend_roundtrip(R):
    E = extend(R)
    assert is_extended(E) and validate_rat(E) == []
    assert restrict(E) == R
    s, t = compute_stats(R), compute_stats(E)
    assert (s.fcell, s.frow, s.row, s.fcol) == (t.fcell, t.frow, t.row, t.topup)


# ---------------------------------------------------------------- flattening

def test_flatten_single_diagonal():
    T = flatten(make_rat("1"))
    assert T.word == ShapeWord((2, 0), (Eps(1), 1))
    assert T.amap == {(Eps(1), 1): UP}
    assert unflatten(T) == make_rat("1")


@given(st.sampled_from(SMALL_PLUS))
def test_flatten_roundtrip(R):
    T = flatten(R)
    assert T.word.r == 0 and validate_rat(T) == []
    assert len(T.arrows) == len(R.arrows) + R.word.r
    assert unflatten(T) == R


def test_unflatten_rejects_plain_at():
    with pytest.raises(TableauError):
        unflatten(make_rat("20", {(1, 2): UP}))


# ---------------------------------------------------------------- split and packed pieces

def test_split_example():
    parts = split(parse_rat(SPLIT_EXAMPLE))
    got = [(labels, P.word.text(), format_rat(P).split("arrows:")[1].strip(), packed_classify(P)) for labels, P in parts]
    assert got == [
        ((1, 2), "20", "U@(1,2)", "horizontal"),
        ((3, 6), "10", "U@(3,6)", "diagonal"),
        ((4,), "2", "", "horizontal"),
        ((5, 11, 12, 14), "2210", "L@(5,12) L@(11,14) U@(12,14)", "diagonal"),
        ((7, 8, 9), "200", "U@(7,8) L@(7,9)", "vertical"),
        ((10, 13), "10", "U@(10,13)", "diagonal"),
        ((15,), "1", "", "diagonal"),
    ]
    T = parse_rat(SPLIT_EXAMPLE)
    s = compute_stats(T)
    kinds = [packed_classify(P) for _, P in parts]
    assert kinds.count("horizontal") == s.frow
    assert kinds.count("vertical") == s.fcol
    assert kinds.count("diagonal") == s.diag


def test_split_singleton():
    ((labels, P),) = split(make_rat("2"))
    assert labels == (1,) and packed_classify(P) == "horizontal"


@given(small_rat)
def test_split_roundtrip(T):
    parts = split(T)
    assert unsplit(parts) == T
    s = compute_stats(T)
    kinds = [packed_classify(P) for _, P in parts]
    assert "not packed" not in kinds
    assert (kinds.count("horizontal"), kinds.count("vertical"), kinds.count("diagonal")) == (s.frow, s.fcol, s.diag)


def test_packed_classify_small():
    assert packed_classify(make_rat("20", {(1, 2): UP})) == "horizontal"
    assert packed_classify(make_rat("20", {(1, 2): LEFT})) == "vertical"
    assert packed_classify(make_rat("10", {(1, 2): UP})) == "diagonal"
    assert packed_classify(make_rat("20")) == "not packed"


def test_straighten_example():
    T, U = parse_rat(STRAIGHT_BEFORE), parse_rat(STRAIGHT_AFTER)
    assert packed_classify(T) == "diagonal"
    assert straighten(T) == U
    assert unstraighten(U) == T


def test_straighten_rejects_other_types():
    with pytest.raises(TableauError):
        straighten(make_rat("20", {(1, 2): UP}))


def _packed(n, r, kind):
    return [T for T in all_rat(n, r) if packed_classify(T) == kind]


@pytest.mark.parametrize("n", range(1, 6))
def test_packed_counts_and_straighten_roundtrip(n):
    diag = _packed(n, 1, "diagonal")
    assert len(diag) == math.factorial(n)
    for T in diag:
        U = straighten(T)
        assert compute_stats(U).frow == 0
        assert unstraighten(U) == T
    if n > 1:
        assert len(_packed(n, 0, "horizontal")) == math.factorial(n - 1)
        assert len(_packed(n, 0, "vertical")) == math.factorial(n - 1)
