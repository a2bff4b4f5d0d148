"""Exhaustive enumerators, exact polynomials and the identity-checking harness.

Every check in :data:`CATALOG` takes an upper size bound and returns an
:class:`IdentityReport` with one instance per ``(n, r)``.  Polynomials are
compared as exact integer polynomials; the PASEP check substitutes exact
rationals.
"""

from __future__ import annotations

import functools
import math
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from . import assemblee as asm
from . import bijections as bij
from . import laguerre as lag
from . import tableaux as tab
from .shapes import ShapeWord, build_diagram

__all__ = [
    "VerifyError",
    "MultiPoly",
    "rising",
    "KINDS",
    "DEFAULT_MAX_N",
    "enumerate_objects",
    "stat_tally",
    "poly_Y",
    "poly_Y_plus",
    "poly_Y_assemblee",
    "poly_refined",
    "poly_refined_plus",
    "closed_form_refined",
    "pasep_Z",
    "lah",
    "Instance",
    "IdentityReport",
    "CATALOG",
    "check_identity",
]

DEFAULT_MAX_N = 7


class VerifyError(ValueError):
    """Unknown identity or object kind, or a bound outside the allowed range."""


# ---------------------------------------------------------------- polynomials

@dataclass(frozen=True)
class MultiPoly:
    """Sparse polynomial with integer coefficients over named variables."""

    vars: tuple
    terms: dict = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if any(c == 0 for c in self.terms.values()):
            object.__setattr__(self, "terms", {e: c for e, c in self.terms.items() if c})

    @classmethod
    def const(cls, c: int, vars: Sequence[str]) -> "MultiPoly":
        return cls(tuple(vars), {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, name: str, vars: Sequence[str]) -> "MultiPoly":
        vars = tuple(vars)
        return cls(vars, {tuple(int(v == name) for v in vars): 1})

    @classmethod
    def from_counter(cls, vars: Sequence[str], counts: Counter) -> "MultiPoly":
        return cls(tuple(vars), dict(counts))

    def _same(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly.const(other, self.vars)
        if other.vars != self.vars:
            raise VerifyError(f"variable sets differ: {self.vars} vs {other.vars}")
        return other

    def __add__(self, other):
        other = self._same(other)
        out = Counter(self.terms)
        out.update(other.terms)
        return MultiPoly(self.vars, dict(out))

    __radd__ = __add__

    def __mul__(self, other):
        other = self._same(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(1, self.vars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def evaluate(self, **values) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for v, k in zip(self.vars, e):
                if k:
                    t *= Fraction(values[v]) ** k
            total += t
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def rising(x: MultiPoly, n: int) -> MultiPoly:
    """(x)_n = x (x+1) ... (x+n-1)."""
    out = MultiPoly.const(1, x.vars)
    for k in range(n):
        out = out * (x + k)
    return out


def lah(n: int, r: int) -> int:
    """Number of assemblées of [n] with r blocks."""
    if n == 0:
        return int(r == 0)
    if not 1 <= r <= n:
        return 0
    return math.comb(n - 1, r - 1) * math.factorial(n) // math.factorial(r)


# ---------------------------------------------------------------- enumeration

KINDS = ("rat", "rat_plus", "at", "assemblee", "signed_sp", "signed_as", "mlh", "mlh_star")


def enumerate_objects(kind: str, n: int, r: int = 0, max_n: int = DEFAULT_MAX_N) -> Iterator:
    """Stream every object of the given kind and size, without repetition."""
    if kind not in KINDS:
        raise VerifyError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if not 0 <= n <= max_n:
        raise VerifyError(f"n={n} outside 0..{max_n}")
    if kind == "rat":
        return tab.all_rat(n, r)
    if kind == "rat_plus":
        return tab.all_rat_plus(n, r)
    if kind == "at":
        return tab.all_rat(n, 0)
    if kind == "assemblee":
        return asm.all_assemblees(n, r)
    if kind == "signed_sp":
        return asm.all_signed(n, r) if n else iter(())
    if kind == "signed_as":
        return asm.all_as(n, r) if n else iter(())
    if kind == "mlh":
        return lag.all_mlh(n, r)
    return lag.all_mlh_star(n, r)


@functools.lru_cache(maxsize=None)
def stat_tally(word: ShapeWord, extended: bool = False) -> Counter:
    """Counter of (frow, fcol, fcell, topup) over the fillings of one word.

    A standalone backtracker: it never builds RAT objects and shares no
    code with :func:`tableaux.compute_stats`, so it doubles as an oracle.
    """
    D = build_diagram(word)
    letter = dict(zip(word.labels, word.letters))
    nrows = word.letters.count(2)
    ncols = word.letters.count(0)
    top = word.labels[0] if word.n and word.letters[0] == 1 else None
    cells = [(i, j, letter[j] == 0, letter[i] == 2, i == top) for i, j in D.order]
    last = {}
    for t, (i, j, col_ok, _, _) in enumerate(cells):
        if col_ok:
            last[j] = t
    closes = [[] for _ in cells]
    for j, t in last.items():
        closes[t].append(j)
    out: Counter = Counter()
    if extended:
        if top is None or any(letter[j] == 0 and j not in last for j in word.labels):
            return out
    blocked: set = set()
    m = len(cells)

    def rec(t, lefts, ups, fcell, topup):
        if t == m:
            out[(nrows - lefts, ncols - ups, fcell, topup)] += 1
            return
        i, j, col_ok, row_ok, on_top = cells[t]
        pointed = (col_ok and j in blocked) or (row_ok and i in blocked)
        if not (extended and any(c not in blocked for c in closes[t])):
            rec(t + 1, lefts, ups, fcell + (not pointed), topup)
        if pointed:
            return
        if col_ok:
            blocked.add(j)
            if not extended or all(c in blocked for c in closes[t]):
                rec(t + 1, lefts, ups + 1, fcell, topup + on_top)
            blocked.discard(j)
        if row_ok:
            blocked.add(i)
            if not (extended and any(c not in blocked for c in closes[t])):
                rec(t + 1, lefts + 1, ups, fcell, topup)
            blocked.discard(i)

    rec(0, 0, 0, 0, 0)
    return out


Y_VARS = ("alpha", "beta", "q", "y")


@functools.lru_cache(maxsize=None)
def poly_Y(n: int, r: int) -> MultiPoly:
    """Sum over RAT(n,r) of alpha^frow beta^fcol q^fcell y^row."""
    acc: Counter = Counter()
    for w in tab.words(n, r):
        rows = w.letters.count(2)
        for (fr, fc, fcell, _), c in stat_tally(w).items():
            acc[(fr, fc, fcell, rows)] += c
    return MultiPoly.from_counter(Y_VARS, acc)


@functools.lru_cache(maxsize=None)
def poly_Y_plus(n: int, r: int) -> MultiPoly:
    """The same polynomial read off RAT+(n+1,r+1), with topup in place of fcol."""
    acc: Counter = Counter()
    for w in tab.words(n + 1, r + 1, first=1):
        rows = w.letters.count(2)
        for (fr, _, fcell, topup), c in stat_tally(w, extended=True).items():
            acc[(fr, topup, fcell, rows)] += c
    return MultiPoly.from_counter(Y_VARS, acc)


def _assemblee_tuple(pi: asm.Assemblee) -> tuple:
    s = asm.signed_stats(asm.to_signed(pi))
    return (s.lrmax, s.rlmin, s.cro, s.wex)


@functools.lru_cache(maxsize=None)
def poly_Y_assemblee(n: int, r: int) -> MultiPoly:
    """Sum over A(n+1,r+1) of alpha^LRmax* beta^RLmin* q^cro y^wex."""
    acc = Counter(_assemblee_tuple(pi) for pi in asm.all_assemblees(n + 1, r + 1))
    return MultiPoly.from_counter(Y_VARS, acc)


def _z_vars(k: int, first: Sequence[str]) -> tuple:
    return tuple(first) + tuple(f"z{i}" for i in range(1, k + 1))


def poly_refined(n: int, r: int) -> MultiPoly:
    """Sum over RAT(n,r) of alpha^frow beta^fcol prod z_i^(arrows in diagonal i)."""
    acc: Counter = Counter()
    for R in tab.all_rat(n, r):
        st = tab.compute_stats(R)
        acc[(st.frow, st.fcol) + st.diag_arrows] += 1
    return MultiPoly.from_counter(_z_vars(r, ("alpha", "beta")), acc)


def poly_refined_plus(n: int, r: int) -> MultiPoly:
    """Sum over RAT+(n+1,r+1) of alpha^frow prod z_i^(arrows in diagonal i)."""
    acc: Counter = Counter()
    for R in tab.all_rat_plus(n + 1, r + 1):
        st = tab.compute_stats(R)
        acc[(st.frow,) + st.diag_arrows] += 1
    return MultiPoly.from_counter(_z_vars(r + 1, ("alpha",)), acc)


def closed_form_refined(n: int, r: int, vars: Sequence[str]) -> MultiPoly:
    """C(n,r) (sum of all vars)_{n-r}."""
    s = MultiPoly.const(0, vars)
    for v in vars:
        s = s + MultiPoly.var(v, vars)
    return math.comb(n, r) * rising(s, n - r)


def pasep_Z(n: int, r: int, alpha, beta, q) -> Fraction:
    """(alpha beta)^(n-r) Y_{n,r}(1/alpha, 1/beta, q), evaluated exactly."""
    alpha, beta, q = Fraction(alpha), Fraction(beta), Fraction(q)
    if alpha == 0 or beta == 0:
        raise VerifyError("alpha and beta must be nonzero")
    m = n - r
    total = Fraction(0)
    for (fr, fc, fcell, _), c in poly_Y(n, r).terms.items():
        # free rows and free columns are distinct border steps, so no denominator survives
        if fr > m or fc > m:
            raise VerifyError("negative power after inversion")
        total += c * alpha ** (m - fr) * beta ** (m - fc) * q**fcell
    return total


# ---------------------------------------------------------------- reports

@dataclass
class Instance:
    n: int
    r: int
    passed: bool
    seconds: float
    counterexample: str | None = None


@dataclass
class IdentityReport:
    identity: str
    max_n: int
    instances: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(x.passed for x in self.instances)

    @property
    def counterexample(self) -> str | None:
        return next((x.counterexample for x in self.instances if not x.passed), None)

    def lines(self) -> list[str]:
        return [
            f"{'PASS' if x.passed else 'FAIL'} {self.identity} n={x.n} r={x.r} ({x.seconds:.3f}s)"
            + (f" counterexample: {x.counterexample}" if x.counterexample else "")
            for x in self.instances
        ]

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "max_n": self.max_n,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "instances": [vars(x) for x in self.instances],
        }


class _Fail(Exception):
    pass


def _expect(ok: bool, what) -> None:
    if not ok:
        raise _Fail(str(what() if callable(what) else what))


def _run(name: str, max_n: int, sizes: Iterable[tuple], body: Callable) -> IdentityReport:
    rep = IdentityReport(name, max_n)
    for n, r in sizes:
        t0 = time.perf_counter()
        try:
            body(n, r)
            ok, cx = True, None
        except _Fail as e:
            ok, cx = False, str(e)
        except (ValueError, AssertionError) as e:
            ok, cx = False, f"{type(e).__name__}: {e}"
        rep.instances.append(Instance(n, r, ok, time.perf_counter() - t0, cx))
    return rep


def _nr(lo: int, max_n: int, r_lo: int = 0) -> list:
    return [(n, r) for n in range(lo, max_n + 1) for r in range(r_lo, n + 1)]


def _plus_sizes(max_n: int) -> list:
    """(m, k) for RAT+(m,k) and A(m,k) with 1 <= k <= m <= max_n."""
    return [(m, k) for m in range(1, max_n + 1) for k in range(1, m + 1)]


# ---------------------------------------------------------------- catalog

def _check_znr(max_n: int) -> IdentityReport:
    ab = ("alpha", "beta")

    def body(n, r):
        acc: Counter = Counter()
        for w in tab.words(n, r):
            for (fr, fc, _, _), c in stat_tally(w).items():
                acc[(fr, fc)] += c
        lhs = MultiPoly.from_counter(ab, acc)
        a, b = MultiPoly.var("alpha", ab), MultiPoly.var("beta", ab)
        rhs = math.comb(n, r) * rising(a + b + r, n - r)
        _expect(lhs == rhs, lambda: f"Y={lhs} but closed form={rhs}")

    return _run("ZNR", max_n, _nr(0, max_n), body)


def _check_pasep(max_n: int) -> IdentityReport:
    samples = [(Fraction(2, 3), Fraction(5, 7)), (Fraction(-3, 2), Fraction(4))]

    def body(n, r):
        for al, be in samples:
            got = pasep_Z(n, r, al, be, 1)
            want = (al * be) ** (n - r) * math.comb(n, r) * math.prod(
                1 / al + 1 / be + r + k for k in range(n - r)
            )
            _expect(got == want, f"alpha={al} beta={be}: {got} != {want}")
        if n == r:
            _expect(pasep_Z(n, r, 3, 5, Fraction(1, 2)) == 1, "Z_{n,n} != 1")

    return _run("PASEP", max_n, _nr(0, max_n), body)


def _check_mvgen(max_n: int) -> IdentityReport:
    def body(n, r):
        lhs = poly_refined(n, r)
        rhs = closed_form_refined(n, r, lhs.vars)
        _expect(lhs == rhs, lambda: f"RAT side {lhs} != {rhs}")
        lhs = poly_refined_plus(n, r)
        rhs = closed_form_refined(n, r, lhs.vars)
        _expect(lhs == rhs, lambda: f"RAT+ side {lhs} != {rhs}")

    return _run("MVGEN", max_n, _nr(0, max_n), body)


def _check_yplus(max_n: int) -> IdentityReport:
    def body(n, r):
        a, b = poly_Y(n, r), poly_Y_plus(n, r)
        _expect(a == b, lambda: f"{a} != {b}")

    return _run("YPLUS", max_n, _nr(0, max_n), body)


def _check_yasm(max_n: int) -> IdentityReport:
    def body(n, r):
        y, yp, ya = poly_Y(n, r), poly_Y_plus(n, r), poly_Y_assemblee(n, r)
        _expect(y == yp, lambda: f"RAT {y} != RAT+ {yp}")
        _expect(y == ya, lambda: f"RAT {y} != assemblee side {ya}")
        # pointwise through zeta: a multiset statement, stronger than equal sums
        left, right = Counter(), Counter()
        for R in tab.all_rat_plus(n + 1, r + 1):
            st = tab.compute_stats(R)
            left[(st.frow, st.topup, st.fcell, st.row)] += 1
            s = asm.signed_stats(bij.zeta(R))
            right[(s.lrmax, s.rlmin, s.cro, s.wex)] += 1
        _expect(left == right, "multisets differ through zeta")

    return _run("YASM", max_n, _nr(0, max_n), body)


def _check_lah(max_n: int) -> IdentityReport:
    def body(n, r):
        want = lah(n, r)
        got = sum(1 for _ in asm.all_assemblees(n, r))
        _expect(got == want, f"|A({n},{r})|={got}, expected {want}")
        signed = {asm.to_signed(pi) for pi in asm.all_assemblees(n, r)}
        _expect(len(signed) == want and all(asm.is_as(t) for t in signed), "AS count")
        plus = sum(sum(stat_tally(w, extended=True).values()) for w in tab.words(n, r, first=1))
        _expect(plus == want, f"|RAT+({n},{r})|={plus}, expected {want}")

    return _run("LAH", max_n, _plus_sizes(max_n), body)


def _check_qfact(max_n: int) -> IdentityReport:
    qv = ("q",)
    q = MultiPoly.var("q", qv)

    def body(n, r):
        mlh = Counter(lag.weight_exponent(H) for H in lag.all_mlh(n, r))
        sp = Counter(asm.crossings(t).total for t in asm.all_signed(n, r))
        aset = Counter(asm.crossings(t).total for t in asm.all_as(n, r))
        fact = MultiPoly.const(1, qv)
        for i in range(1, r + 1):
            fact = fact * sum((q**k for k in range(i)), MultiPoly.const(0, qv))
        P = lambda c: MultiPoly.from_counter(qv, Counter({(k,): v for k, v in c.items()}))
        _expect(P(mlh) == P(sp), lambda: f"MLH {P(mlh)} != SP {P(sp)}")
        _expect(P(sp) == fact * P(aset), lambda: f"SP {P(sp)} != [r]_q! * {P(aset)}")

    return _run("QFACT", max_n, _plus_sizes(max_n), body)


def _check_packed(max_n: int) -> IdentityReport:
    def body(n, r):
        kinds = Counter(tab.packed_classify(T) for T in tab.all_rat(n, r))
        f = math.factorial
        if r == 0:
            _expect(kinds["horizontal"] == f(n - 1), f"h({n})={kinds['horizontal']}")
            _expect(kinds["vertical"] == f(n - 1), f"v({n})={kinds['vertical']}")
        else:
            _expect(kinds["diagonal"] == f(n), f"d({n})={kinds['diagonal']}")

    return _run("PACKED", max_n, [(n, r) for n in range(1, max_n + 1) for r in (0, 1)], body)


def _each_plus(check: Callable) -> Callable:
    def body(m, k):
        for R in tab.all_rat_plus(m, k):
            msg = check(R)
            _expect(msg is None, lambda: f"{tab.format_rat(R)!r}: {msg}")

    return body


def _check_iisz(max_n: int) -> IdentityReport:
    def check(R):
        a, b = bij.arrow_zigzag(R), asm.foata(asm.eps_word(bij.insertion(R)))
        return None if a == b else f"{asm.format_cycles(a)} != {asm.format_cycles(b)}"

    return _run("IISZ", max_n, _plus_sizes(max_n), _each_plus(check))


def _check_iflat(max_n: int) -> IdentityReport:
    def check(R):
        a, b = asm.eps_word(bij.insertion(R)), bij.at_insertion(tab.flatten(R))
        return None if a == b else f"{asm.format_word(a)} != {asm.format_word(b)}"

    return _run("IFLAT", max_n, _plus_sizes(max_n), _each_plus(check))


def _check_zflat(max_n: int) -> IdentityReport:
    def check(R):
        T = tab.flatten(R)
        b = asm.map_to_cycles(dict(zip(T.word.labels, bij.at_zigzag(T))))
        a = bij.arrow_zigzag(R)
        return None if a == b else f"{asm.format_cycles(a)} != {asm.format_cycles(b)}"

    return _run("ZFLAT", max_n, _plus_sizes(max_n), _each_plus(check))


def _each_assemblee(check: Callable) -> Callable:
    def body(m, k):
        for pi in asm.all_assemblees(m, k):
            msg = check(pi)
            _expect(msg is None, lambda: f"{pi}: {msg}")

    return body


def _check_fei(max_n: int) -> IdentityReport:
    def check(pi):
        R = bij.insertion_inverse(pi)
        if bij.fusion_exchange(asm.iota_inv(asm.eps_word(pi))) != R:
            return "fusion-exchange of iota^-1(e(pi)) differs from the inverse insertion"
        if bij.insertion(R) != pi:
            return "insertion does not invert"
        return None

    return _run("FEI", max_n, _plus_sizes(max_n), _each_assemblee(check))


def _check_fez(max_n: int) -> IdentityReport:
    def check(pi):
        R = bij.fusion_exchange(pi)
        if bij.fe_inverse(R) != pi:
            return "fe_inverse does not invert"
        a, b = bij.arrow_zigzag(R), asm.foata(asm.iota(pi))
        return None if a == b else f"{asm.format_cycles(a)} != {asm.format_cycles(b)}"

    return _run("FEZ", max_n, _plus_sizes(max_n), _each_assemblee(check))


def _zrpt_violations(R: tab.RAT) -> str | None:
    st = tab.compute_stats(R)
    tau = bij.zeta(R)
    s = asm.signed_stats(tau)
    pairs = [
        ("diag/neg", tuple(R.diagonals()), tau.neg),
        ("tile/sinv", st.tile, s.sinv),
        ("row/wex", st.row, s.wex),
        ("topup/RLmin*", st.topup, s.rlmin),
        ("frow/LRmax*", st.frow, s.lrmax),
        ("fcell/cro", st.fcell, s.cro),
    ]
    bad = [f"{name} {a}!={b}" for name, a, b in pairs if a != b]
    if not asm.is_as(tau):
        bad.append("image not in assemblee form")
    return f"zeta={' '.join(map(str, tau.values))}: " + ", ".join(bad) if bad else None


def _check_zrpt(max_n: int) -> IdentityReport:
    def body(m, k):
        seen = set()
        for R in tab.all_rat_plus(m, k):
            msg = _zrpt_violations(R)
            _expect(msg is None, lambda: f"{tab.format_rat(R)!r}: {msg}")
            seen.add(bij.zeta(R))
        _expect(len(seen) == lah(m, k), f"zeta hits {len(seen)} of {lah(m, k)} assemblees")

    return _run("ZRPT", max_n, _plus_sizes(max_n), body)


def _check_spmlh(max_n: int) -> IdentityReport:
    def body(n, r):
        count = 0
        for tau in asm.all_signed(n, r):
            H = lag.sp_to_mlh(tau)
            errs = lag.validate_mlh_star(H)
            _expect(not errs, lambda: f"{tau.values}: {errs}")
            _expect(lag.weight_exponent_star(H) == asm.crossings(tau).total, f"{tau.values}: weight")
            _expect(lag.mlh_to_sp(H) == tau, f"{tau.values}: psi(phi) differs")
            count += 1
        stars = sum(1 for _ in lag.all_mlh_star(n, r))
        _expect(count == stars, f"|SP|={count} but |MLH*|={stars}")

    return _run("SPMLH", max_n, _plus_sizes(max_n), body)


def _check_rho(max_n: int) -> IdentityReport:
    def body(n, r):
        images = set()
        for nu in asm.all_signed(n, r):
            tau, sigma = lag.rho(nu)
            _expect(asm.is_as(tau), f"{nu.values}: not in assemblee form")
            _expect(lag.rho_inverse(tau, sigma) == nu, f"{nu.values}: inverse differs")
            _expect(
                asm.crossings(nu).total == asm.crossings(tau).total + asm.inversions(sigma),
                f"{nu.values}: crossings not additive",
            )
            images.add((tau, sigma))
        _expect(len(images) == lah(n, r) * math.factorial(r), "rho is not onto")

    return _run("RHO", max_n, _plus_sizes(max_n), body)


def _check_ck(max_n: int) -> IdentityReport:
    def body(m, _):
        for T in tab.all_at_plus(m):
            z = dict(zip(T.word.labels, bij.at_zigzag(T)))
            f = asm.cycles_to_map(asm.foata(bij.at_insertion(T)))
            _expect(z == f, lambda: f"{tab.format_rat(T)!r}: zigzag {z} != foata {f}")

    return _run("CK", max_n, [(m, 0) for m in range(1, max_n + 1)], body)


def _check_cn(max_n: int) -> IdentityReport:
    def body(m, _):
        images = set()
        for T in tab.all_at_plus(m):
            v = bij.at_insertion(T)
            images.add(v)
            free = set(tab.compute_stats(T).free_rows)
            rl = set(asm.word_stats(v).rlmin)
            _expect(free == rl, lambda: f"{tab.format_rat(T)!r}: free rows {free} != RL-minima {rl}")
        _expect(len(images) == math.factorial(m), f"{len(images)} images, expected {m}!")
        _expect(all(sorted(v) == list(range(1, m + 1)) for v in images), "image not in S_m")

    return _run("CN", max_n, [(m, 0) for m in range(1, max_n + 1)], body)


# id -> (check, default bound)
CATALOG: dict = {
    "ZNR": (_check_znr, 7),
    "PASEP": (_check_pasep, 6),
    "MVGEN": (_check_mvgen, 6),
    "YPLUS": (_check_yplus, 6),
    "YASM": (_check_yasm, 5),
    "LAH": (_check_lah, 7),
    "QFACT": (_check_qfact, 6),
    "PACKED": (_check_packed, 6),
    "IISZ": (_check_iisz, 6),
    "IFLAT": (_check_iflat, 6),
    "ZFLAT": (_check_zflat, 6),
    "FEI": (_check_fei, 6),
    "FEZ": (_check_fez, 6),
    "ZRPT": (_check_zrpt, 6),
    "SPMLH": (_check_spmlh, 6),
    "RHO": (_check_rho, 6),
    "CK": (_check_ck, 6),
    "CN": (_check_cn, 6),
}


def check_identity(identity: str, max_n: int | None = None) -> IdentityReport:
    """Run one catalog entry up to size ``max_n`` (its default when omitted).

    For identities over extended objects the bound applies to n+1.
    """
    key = identity.upper()
    if key not in CATALOG:
        raise VerifyError(f"unknown identity {identity!r}; known: {', '.join(CATALOG)}")
    fn, default = CATALOG[key]
    bound = default if max_n is None else max_n
    if bound < 0 or bound > 9:
        raise VerifyError(f"max_n={bound} outside 0..9")
    return fn(bound)
