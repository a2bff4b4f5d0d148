import itertools
import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from ratab.assemblee import (
    AssembleeError,
    all_as,
    all_assemblees,
    all_signed,
    arc_diagram,
    brute_crossings,
    canonicalize,
    crossing_rule,
    crossings,
    eps_word,
    eps_word_inv,
    foata,
    foata_inv,
    format_cycles,
    format_word,
    from_canonical,
    from_signed,
    iota,
    iota_inv,
    is_as,
    parse_assemblee,
    parse_cycles,
    parse_signed,
    parse_word,
    signed_stats,
    to_signed,
    word_stats,
)

P = parse_assemblee


def lah(n, k):
    if n == 0:
        return int(k == 0)
    if k == 0:
        return 0
    return math.comb(n - 1, k - 1) * math.factorial(n) // math.factorial(k)


ASSEMBLEES = [pi for n in range(1, 6) for pi in all_assemblees(n)]
assemblees = st.sampled_from(ASSEMBLEES)
perm_words = st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1)))


# ---------------------------------------------------------------- parsing and canonical form

def test_parse_rejects_garbage():
    for bad in ("", "[1 2", "[1][1]", "[ ]", "1 2"):
        with pytest.raises(AssembleeError):
            P(bad)


def test_canonical_form_examples():
    assert canonicalize(P("[3 5 2 9][6 4 7][8 1]")) == ((3, 5, 2, 9, 6, 4, 7, 8, 1), frozenset({3, 6, 8}))
    assert canonicalize(P("[2 1 3]")) == ((2, 1, 3), frozenset({2}))
    assert canonicalize(P("[1][2][3]")) == ((1, 2, 3), frozenset({1, 2, 3}))


@given(assemblees)
def test_canonical_roundtrip(pi):
    assert from_canonical(*canonicalize(pi)) == pi


@pytest.mark.parametrize("n", range(0, 7))
def test_lah_counts(n):
    counts = Counter(len(pi.blocks) for pi in all_assemblees(n)) if n else Counter()
    for k in range(1, n + 1):
        assert counts[k] == lah(n, k)


# ---------------------------------------------------------------- words

def test_eps_word_example():
    v = eps_word(P("[9 10 5 2 6][11 8 1 4 3 7][12 13]"))
    assert format_word(v) == "11 8 1 e1 9 10 5 2 6 e2 12 13 e3 4 3 7"
    assert format_word(eps_word(P("[1]"))) == "1 e1"


@given(assemblees)
def test_eps_word_roundtrip(pi):
    v = eps_word(pi)
    assert eps_word_inv(v) == pi
    assert eps_word_inv(parse_word(format_word(v))) == pi


def test_foata_example():
    w = parse_word("8 5 9 2 4 1 3 7 6 10")
    assert format_cycles(foata(w)) == "(8,5,9,2,4,1)(3)(7,6)(10)"
    assert format_cycles(foata((1, 2, 3))) == "(1)(2)(3)"


@given(perm_words)
def test_foata_roundtrip(w):
    w = tuple(w)
    cyc = foata(w)
    assert foata_inv(cyc) == w
    assert parse_cycles(format_cycles(cyc)) == cyc
    # segments end exactly at the right-to-left minima
    assert [c[-1] for c in cyc] == list(word_stats(w).rlmin)


def test_iota_example():
    assert format_word(iota(P("[2 8 5][3 9 7 1][4][6]"))) == "7 1 e1 4 e2 8 e3 3 9 e4 6 2 5"
    assert format_word(iota(P("[1]"))) == "1 e1"


@given(assemblees)
def test_iota_roundtrip(pi):
    v = iota(pi)
    assert iota_inv(v) == pi
    # the image is itself a valid e-word
    assert eps_word(eps_word_inv(v)) == v


def test_word_stats_example():
    s = word_stats(parse_word("8 5 9 2 4 1 3 7 6 10"))
    assert s.rlmin == (1, 3, 6, 10)
    assert s.inv == 21
    assert s.ides == frozenset({1, 3, 4, 6, 7})
    s = word_stats((1, 2, 3, 4))
    assert s.inv == 0 and len(s.rlmin) == 4


# ---------------------------------------------------------------- signed permutations

def test_to_signed_examples():
    assert str(to_signed(P("[5 4 9][6 1][7 3 8 2]"))) == "-5 4 9 -6 1 -7 3 8 2"
    assert str(to_signed(P("[1]"))) == "-1"


@given(assemblees)
def test_signed_roundtrip(pi):
    tau = to_signed(pi)
    assert is_as(tau)
    assert from_signed(tau) == pi


@pytest.mark.parametrize("n", range(1, 6))
def test_as_is_the_image_of_assemblees(n):
    for r in range(1, n + 1):
        got = {str(t) for t in all_signed(n, r) if is_as(t)}
        assert got == {str(t) for t in all_as(n, r)}
        assert len(got) == lah(n, r)


def test_running_example_arcs():
    D = arc_diagram(parse_signed("-4 5 3 -6 -2 1"))
    assert D.r == 3
    assert D.upper == ((-3, 6), (-2, 2), (-1, 4), (2, 5), (3, 3))
    assert D.lower == ((-3, 4), (-2, 5), (-1, 1), (1, 6))
    assert D.loops == ((3, 3),)
    assert arc_diagram(parse_signed("1 2 3")).loops == ((1, 1), (2, 2), (3, 3))


def test_crossing_examples():
    prof = crossings(parse_signed("-4 5 3 -6 -2 1"))
    assert (prof.upper, prof.lower, prof.total) == (3, 3, 6)
    assert tuple(prof.upper_by_b.values()) == (0, 2, 0, 1, 0, 0)
    assert tuple(prof.lower_by_b.values()) == (0, 0, 0, 2, 1, 0)
    prof = crossings(parse_signed("-5 4 9 -6 1 -7 3 8 2"))
    assert (prof.upper, prof.lower) == (4, 7)


def test_crossing_rule_is_restored():
    tau = parse_signed("-4 5 3 -6 -2 1")
    with crossing_rule(False):
        assert crossings(tau).total != 6
    assert crossings(tau).total == 6


@pytest.mark.parametrize("n", range(1, 6))
def test_crossings_match_brute_force(n):
    for r in range(1, n + 1):
        for tau in all_signed(n, r):
            assert crossings(tau).total == brute_crossings(tau)


@given(assemblees)
def test_arc_degrees(pi):
    D = arc_diagram(to_signed(pi))
    ends = Counter(x for arc in D.upper + D.lower for x in arc)
    for x in D.domain:
        assert ends[x] == 2
    for j in range(1, D.r + 1):
        assert ends[-j] == 2


# ---------------------------------------------------------------- statistics

def test_signed_stats_example():
    s = signed_stats(parse_signed("-5 4 9 -6 1 -7 3 8 2"))
    assert "".join(map(str, s.sh)) == "122101020"
    assert (s.sinv, s.wex, s.lrmax, s.rlmin, s.cro) == (19, 3, 1, 2, 11)
    assert s.neg == (1, 4, 6)


def test_signed_stats_small():
    # sh = 122 is weakly increasing, so it has no shape-inversions
    s = signed_stats(parse_signed("-1 2 3"))
    assert s.sh == (1, 2, 2)
    assert (s.sinv, s.wex, s.lrmax, s.rlmin) == (0, 2, 2, 0)


def _lrmax_oracle(tau):
    negs = [d for d in tau.domain if tau(d) < 0]
    out = 0
    for k, a in enumerate(tau.domain):
        prev = list(tau.domain[:k]) + negs
        if all(tau(a) > abs(tau(b)) for b in prev):
            out += 1
    return out


def _rlmin_oracle(tau):
    negs = [d for d in tau.domain if tau(d) < 0]
    out = 0
    for k, a in enumerate(tau.domain):
        later = list(tau.domain[k + 1:]) + negs
        if tau(a) > 0 and all(tau(a) < abs(tau(b)) for b in later):
            out += 1
    return out


@given(assemblees)
def test_special_extrema_oracle(pi):
    tau = to_signed(pi)
    s = signed_stats(tau)
    assert s.lrmax == _lrmax_oracle(tau)
    assert s.rlmin == _rlmin_oracle(tau)
    assert s.wex == sum(1 for a in tau.domain if tau(a) >= a)
    sh = s.sh
    assert s.sinv == sum(1 for i, j in itertools.combinations(range(len(sh)), 2) if sh[i] > sh[j])
