import json
import math
from collections import Counter
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from ratab.tableaux import all_rat, all_rat_plus, compute_stats, words
from ratab.verify import (
    CATALOG,
    KINDS,
    MultiPoly,
    VerifyError,
    check_identity,
    closed_form_refined,
    enumerate_objects,
    lah,
    pasep_Z,
    poly_refined,
    poly_Y,
    poly_Y_assemblee,
    poly_Y_plus,
    rising,
    stat_tally,
)

V = ("alpha", "beta", "q", "y")
SYM = sympy.symbols("alpha beta q y")


def to_sympy(p: MultiPoly):
    syms = sympy.symbols(" ".join(p.vars)) if len(p.vars) > 1 else (sympy.Symbol(p.vars[0]),)
    return sympy.expand(sum(c * sympy.Mul(*(s**k for s, k in zip(syms, e))) for e, c in p.terms.items()))


# ---------------------------------------------------------------- MultiPoly

terms = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 4), st.integers(-5, 5), max_size=6)


@given(terms, terms)
def test_multipoly_matches_sympy(a, b):
    p, q = MultiPoly(V, a), MultiPoly(V, b)
    assert to_sympy(p + q) == sympy.expand(to_sympy(p) + to_sympy(q))
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))
    assert to_sympy(p**2) == sympy.expand(to_sympy(p) ** 2)
    assert (p + q == q + p) and (p * q == q * p)


def test_multipoly_basics():
    x = MultiPoly.var("alpha", V)
    assert str(x + 1) == "alpha + 1"
    assert x + (-1) * x == 0
    assert rising(x, 3) == x * (x + 1) * (x + 2)
    assert (x * x).evaluate(alpha=Fraction(1, 3), beta=0, q=0, y=0) == Fraction(1, 9)
    with pytest.raises(VerifyError):
        x + MultiPoly.var("q", ("q",))


# ---------------------------------------------------------------- tallies and polynomials

@pytest.mark.parametrize("n", range(0, 6))
def test_stat_tally_matches_compute_stats(n):
    for r in range(n + 1):
        direct = Counter()
        for R in all_rat(n, r):
            s = compute_stats(R)
            direct[(R.word.letters, s.frow, s.fcol, s.fcell, s.topup)] += 1
        tallied = Counter()
        for w in words(n, r):
            for key, c in stat_tally(w).items():
                tallied[(w.letters,) + key] += c
        assert direct == tallied


@pytest.mark.parametrize("m", range(1, 6))
def test_extended_tally_matches_compute_stats(m):
    for k in range(1, m + 1):
        direct = Counter()
        for R in all_rat_plus(m, k):
            s = compute_stats(R)
            direct[(R.word.letters, s.frow, s.fcol, s.fcell, s.topup)] += 1
        tallied = Counter()
        for w in words(m, k, first=1):
            for key, c in stat_tally(w, extended=True).items():
                tallied[(w.letters,) + key] += c
        assert direct == tallied


def test_small_polynomial_by_hand():
    a, b, q, y = SYM
    assert to_sympy(poly_Y(2, 1)) == sympy.expand(b + b * q + 1 + y + a * y + a * q * y)
    assert poly_Y(2, 1) == poly_Y_plus(2, 1) == poly_Y_assemblee(2, 1)


@pytest.mark.parametrize("n", range(0, 6))
def test_count_formula_with_sympy(n):
    a, b, q, y = SYM
    for r in range(n + 1):
        got = to_sympy(poly_Y(n, r)).subs({q: 1, y: 1})
        want = math.comb(n, r) * sympy.rf(a + b + r, n - r)
        assert sympy.expand(got - want) == 0


def test_refined_closed_form():
    p = poly_refined(3, 1)
    assert p == closed_form_refined(3, 1, p.vars)
    assert p.vars == ("alpha", "beta", "z1")


def test_pasep_normalisation():
    assert pasep_Z(3, 3, 2, 3, 1) == 1
    al, be = Fraction(1, 2), Fraction(3)
    want = (al * be) ** 2 * 3 * (1 / al + 1 / be + 1) * (1 / al + 1 / be + 2)
    assert pasep_Z(3, 1, al, be, 1) == want
    with pytest.raises(VerifyError):
        pasep_Z(2, 1, 0, 1, 1)


# ---------------------------------------------------------------- enumeration

def test_enumerate_objects_counts():
    assert sum(1 for _ in enumerate_objects("assemblee", 4, 2)) == lah(4, 2)
    assert sum(1 for _ in enumerate_objects("signed_sp", 3, 2)) == 12
    assert sum(1 for _ in enumerate_objects("rat_plus", 3, 1)) == lah(3, 1)
    assert set(KINDS) >= {"rat", "assemblee", "mlh_star"}
    with pytest.raises(VerifyError):
        enumerate_objects("tree", 2)
    with pytest.raises(VerifyError):
        enumerate_objects("rat", 9)


# ---------------------------------------------------------------- harness

@pytest.mark.parametrize("identity", sorted(CATALOG))
def test_identity_small_bound(identity):
    rep = check_identity(identity, 4)
    assert rep.passed, rep.counterexample
    assert rep.instances and all(line.startswith("PASS") for line in rep.lines())
    assert json.loads(json.dumps(rep.to_json()))["passed"] is True


def test_identity_errors():
    with pytest.raises(VerifyError):
        check_identity("NOPE")
    with pytest.raises(VerifyError):
        check_identity("ZNR", 10)
    assert check_identity("znr", 2).passed
