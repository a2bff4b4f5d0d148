"""Assemblées, ε-words, the Foata and ι maps, signed permutations and arc diagrams."""

from __future__ import annotations

import contextlib
import functools
import itertools
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .shapes import Eps, Label, format_label, parse_label

__all__ = [
    "AssembleeError",
    "Assemblee",
    "parse_assemblee",
    "canonicalize",
    "from_canonical",
    "eps_word",
    "eps_word_inv",
    "parse_word",
    "format_word",
    "foata",
    "foata_inv",
    "format_cycles",
    "parse_cycles",
    "cycles_to_map",
    "iota",
    "iota_inv",
    "SignedPerm",
    "parse_signed",
    "to_signed",
    "from_signed",
    "is_as",
    "neg_order",
    "ArcDiagram",
    "arc_diagram",
    "CrossingProfile",
    "crossings",
    "crossing_rule",
    "brute_crossings",
    "SignedStats",
    "signed_stats",
    "WordStats",
    "word_stats",
    "inversions",
    "all_assemblees",
    "all_signed",
    "all_as",
]


class AssembleeError(ValueError):
    """Malformed assemblée, word, or signed permutation."""


# ---------------------------------------------------------------- assemblées

@dataclass(frozen=True)
class Assemblee:
    """A set of disjoint nonempty sequences, stored sorted by head."""

    blocks: tuple

    @classmethod
    def of(cls, blocks: Iterable[Sequence[int]]) -> "Assemblee":
        bl = [tuple(b) for b in blocks]
        if any(not b for b in bl):
            raise AssembleeError("empty block")
        flat = [x for b in bl for x in b]
        if len(set(flat)) != len(flat):
            raise AssembleeError("blocks are not disjoint")
        return cls(tuple(sorted(bl, key=lambda b: b[0])))

    @property
    def ground(self) -> tuple:
        return tuple(sorted(x for b in self.blocks for x in b))

    @property
    def heads(self) -> frozenset:
        return frozenset(b[0] for b in self.blocks)

    def __str__(self) -> str:
        return "".join("[" + " ".join(map(str, b)) + "]" for b in self.blocks)


def parse_assemblee(text: str) -> Assemblee:
    text = text.strip()
    if not re.fullmatch(r"(\s*\[\s*\d+(\s+\d+)*\s*\])+\s*", text):
        raise AssembleeError(f"bad assemblée {text!r}")
    blocks = [tuple(int(x) for x in m.split()) for m in re.findall(r"\[([^\]]*)\]", text)]
    return Assemblee.of(blocks)


def canonicalize(pi: Assemblee) -> tuple[tuple, frozenset]:
    """(f(π), heads): blocks in increasing head order, concatenated."""
    return tuple(x for b in pi.blocks for x in b), pi.heads


def from_canonical(f: Sequence[int], heads: Iterable[int]) -> Assemblee:
    heads = set(heads)
    if not f or f[0] not in heads:
        raise AssembleeError("first letter must be a head")
    blocks, cur = [], []
    for x in f:
        if x in heads and cur:
            blocks.append(cur)
            cur = []
        cur.append(x)
    blocks.append(cur)
    if any(a[0] > b[0] for a, b in zip(blocks, blocks[1:])):
        raise AssembleeError("heads are not increasing")
    return Assemblee.of(blocks)


# ---------------------------------------------------------------- words

def parse_word(text: str) -> tuple:
    return tuple(parse_label(t) for t in text.replace(",", " ").split())


def format_word(v: Iterable[Label]) -> str:
    return " ".join(format_label(x) for x in v)


def eps_word(pi: Assemblee) -> tuple:
    one = min(pi.ground)
    b1 = next(b for b in pi.blocks if one in b)
    rest = sorted((b for b in pi.blocks if b is not b1), key=lambda b: b[-1])
    k = b1.index(one)
    out = list(b1[: k + 1]) + [Eps(1)]
    for t, b in enumerate(rest):
        out += list(b) + [Eps(t + 2)]
    out += list(b1[k + 1 :])
    return tuple(out)


def eps_word_inv(v: Sequence[Label]) -> Assemblee:
    pos = {x.k: t for t, x in enumerate(v) if isinstance(x, Eps)}
    m = len(pos)
    if m == 0 or sorted(pos) != list(range(1, m + 1)):
        raise AssembleeError("ε-word must contain e1..ek exactly once")
    idx = [pos[k] for k in range(1, m + 1)]
    if idx != sorted(idx):
        raise AssembleeError("ε-letters out of order")
    segs = []
    prev = -1
    for t in idx:
        segs.append(list(v[prev + 1 : t]))
        prev = t
    tail = list(v[prev + 1 :])
    if any(not s for s in segs):
        raise AssembleeError("empty block in ε-word")
    nums = [x for x in v if not isinstance(x, Eps)]
    if len(set(nums)) != len(nums):
        raise AssembleeError("repeated letter")
    ends = [s[-1] for s in segs]
    if ends[0] != min(nums) or any(a >= b for a, b in zip(ends, ends[1:])):
        raise AssembleeError("block ends are not increasing from the minimum")
    return Assemblee.of([segs[0] + tail] + segs[1:])


# ---------------------------------------------------------------- Foata

def foata(v: Sequence[Label]) -> tuple:
    """Cut after each right-to-left minimum; the pieces are the cycles."""
    cycles, cur = [], []
    low = None
    rl = set()
    for x in reversed(v):
        if low is None or x < low:
            low = x
            rl.add(x)
    for x in v:
        cur.append(x)
        if x in rl:
            cycles.append(tuple(cur))
            cur = []
    return tuple(cycles)


def foata_inv(cycles: Iterable[Sequence[Label]]) -> tuple:
    out = []
    norm = []
    for c in cycles:
        c = tuple(c)
        k = c.index(min(c))
        norm.append(c[k + 1 :] + c[: k + 1])
    for c in sorted(norm, key=lambda c: c[-1]):
        out.extend(c)
    return tuple(out)


def cycles_to_map(cycles: Iterable[Sequence[Label]]) -> dict:
    m = {}
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            m[a] = b
    return m


def map_to_cycles(m: dict) -> tuple:
    """Canonical cycle form: each cycle ends with its minimum, sorted by minimum."""
    seen, cycles = set(), []
    for x in sorted(m):
        if x in seen:
            continue
        c = [x]
        seen.add(x)
        y = m[x]
        while y != x:
            c.append(y)
            seen.add(y)
            y = m[y]
        cycles.append(tuple(c))
    return foata(foata_inv(cycles))


def format_cycles(cycles) -> str:
    return "".join("(" + ",".join(format_label(x) for x in c) + ")" for c in cycles)


def parse_cycles(text: str) -> tuple:
    inner = re.findall(r"\(([^)]*)\)", text)
    if not inner or re.sub(r"\([^)]*\)", "", text).strip():
        raise AssembleeError(f"bad cycle notation {text!r}")
    return tuple(parse_word(c) for c in inner)


# ---------------------------------------------------------------- iota

def iota(pi: Assemblee) -> tuple:
    f, heads = canonicalize(pi)
    X = sorted(f)
    rank = {x: t for t, x in enumerate(X)}
    # u = f^{-1} as a word over positions, relabeled by X
    u = [None] * len(f)
    for t, x in enumerate(f):
        u[rank[x]] = X[t]
    hs = sorted(heads)
    after = {rank[h]: k + 1 for k, h in enumerate(hs)}
    out = []
    for t, x in enumerate(u):
        out.append(x)
        if t in after:
            out.append(Eps(after[t]))
    return tuple(out)


def iota_inv(v: Sequence[Label]) -> Assemblee:
    u = [x for x in v if not isinstance(x, Eps)]
    X = sorted(u)
    rank = {x: t for t, x in enumerate(X)}
    heads = []
    for t, x in enumerate(v):
        if isinstance(x, Eps):
            if t == 0 or isinstance(v[t - 1], Eps):
                raise AssembleeError("ε-letter must follow a number")
            heads.append(X[u.index(v[t - 1])])
    f = [None] * len(u)
    for t, x in enumerate(u):
        f[rank[x]] = X[t]
    return from_canonical(f, heads)


# ---------------------------------------------------------------- signed permutations

@dataclass(frozen=True)
class SignedPerm:
    domain: tuple
    values: tuple

    def __post_init__(self):
        if len(self.domain) != len(self.values):
            raise AssembleeError("domain and values differ in length")
        if list(self.domain) != sorted(set(self.domain)):
            raise AssembleeError("domain must be strictly increasing")
        if sorted(abs(v) for v in self.values) != list(self.domain):
            raise AssembleeError("absolute values are not a permutation of the domain")

    @classmethod
    def of(cls, values: Sequence[int], domain: Sequence[int] | None = None) -> "SignedPerm":
        values = tuple(values)
        domain = tuple(range(1, len(values) + 1)) if domain is None else tuple(domain)
        return cls(domain, values)

    def __call__(self, i: int) -> int:
        return self._map[i]

    @functools.cached_property
    def _map(self) -> dict:
        return dict(zip(self.domain, self.values))

    @functools.cached_property
    def _inv(self) -> dict:
        return {abs(v): (k if v > 0 else -k) for k, v in zip(self.domain, self.values)}

    def inv(self, i: int) -> int:
        """Signed preimage: the k with |τ(k)| = i, carrying the sign of τ(k)."""
        return self._inv[i]

    @property
    def neg(self) -> tuple:
        return tuple(i for i, v in zip(self.domain, self.values) if v < 0)

    @property
    def n(self) -> int:
        return len(self.domain)

    def __str__(self) -> str:
        return " ".join(map(str, self.values))


def parse_signed(text: str, domain: Sequence[int] | None = None) -> SignedPerm:
    toks = text.replace(",", " ").split()
    try:
        vals = [int(t.replace("−", "-")) for t in toks]
    except ValueError as exc:
        raise AssembleeError(f"bad signed permutation {text!r}") from exc
    if any(v == 0 for v in vals):
        raise AssembleeError("zero entry")
    return SignedPerm.of(vals, domain)


def is_as(tau: SignedPerm) -> bool:
    """Assemblée form: the smallest element is negative and |τ(d_i)| increases."""
    if not tau.n or tau.values[0] > 0:
        return False
    negs = [abs(tau(d)) for d in tau.neg]
    return all(a < b for a, b in zip(negs, negs[1:]))


def to_signed(pi: Assemblee) -> SignedPerm:
    f, heads = canonicalize(pi)
    return SignedPerm.of([-x if x in heads else x for x in f], sorted(f))


def from_signed(tau: SignedPerm) -> Assemblee:
    if not is_as(tau):
        raise AssembleeError(f"{tau} is not in assemblée form")
    f = [abs(v) for v in tau.values]
    return from_canonical(f, [abs(v) for v in tau.values if v < 0])


def neg_order(tau: SignedPerm) -> tuple:
    """neg(τ) sorted by the order <_τ."""

    def key(i):
        a = abs(tau(i))
        return (min(i, a), 0 if i <= a else 1)

    return tuple(sorted(tau.neg, key=key))


@dataclass(frozen=True)
class ArcDiagram:
    """Vertices -r..-1 then the domain; arcs are (left, right) pairs."""

    r: int
    domain: tuple
    upper: tuple
    lower: tuple
    spiral: tuple  # ((-j, d_j), (-j, |τ(d_j)|)) per negative vertex

    @property
    def loops(self) -> tuple:
        return tuple(a for a in self.upper if a[0] == a[1])


def arc_diagram(tau: SignedPerm) -> ArcDiagram:
    rank = {d: t + 1 for t, d in enumerate(neg_order(tau))}
    upper, lower, spiral = [], [], []
    for i, v in zip(tau.domain, tau.values):
        if v >= i:
            upper.append((i, v))
        elif v > 0:
            lower.append((v, i))
        else:
            j = rank[i]
            lower.append((-j, i))
            upper.append((-j, -v))
            spiral.append(((-j, i), (-j, -v)))
    return ArcDiagram(len(rank), tau.domain, tuple(sorted(upper)), tuple(sorted(lower)), tuple(sorted(spiral)))


@dataclass(frozen=True)
class CrossingProfile:
    upper_by_b: dict
    lower_by_b: dict

    @property
    def upper(self) -> int:
        return sum(self.upper_by_b.values())

    @property
    def lower(self) -> int:
        return sum(self.lower_by_b.values())

    @property
    def total(self) -> int:
        return self.upper + self.lower


# Weak middle inequality for upper crossings; flipped only by mutation tests.
_UPPER_WEAK = [True]


@contextlib.contextmanager
def crossing_rule(upper_weak: bool):
    """Temporarily change the middle inequality of upper crossings."""
    old = _UPPER_WEAK[0]
    _UPPER_WEAK[0] = upper_weak
    try:
        yield
    finally:
        _UPPER_WEAK[0] = old


def _count(arcs, weak):
    by_b = Counter()
    for a, b in arcs:
        for c, d in arcs:
            if a < c and b < d and (c <= b if weak else c < b):
                by_b[b] += 1
    return by_b


def crossings(tau: SignedPerm) -> CrossingProfile:
    """Per-b crossing counts; b is the right end of the arc that starts first."""
    D = arc_diagram(tau)
    up = _count(D.upper, _UPPER_WEAK[0])
    lo = _count(D.lower, False)
    return CrossingProfile(
        {b: up.get(b, 0) for b in tau.domain},
        {b: lo.get(b, 0) for b in tau.domain},
    )


def brute_crossings(tau: SignedPerm) -> int:
    """Independent count straight from τ, without building the diagram."""
    rank = {d: t + 1 for t, d in enumerate(neg_order(tau))}
    up, lo = [], []
    for i in tau.domain:
        v = tau(i)
        if v < 0:
            up.append((-rank[i], -v))
            lo.append((-rank[i], i))
        elif v >= i:
            up.append((i, v))
        else:
            lo.append((v, i))
    total = 0
    for (a, b), (c, d) in itertools.permutations(up, 2):
        total += a < c <= b < d
    for (a, b), (c, d) in itertools.permutations(lo, 2):
        total += a < c < b < d
    return total


def inversions(w: Sequence) -> int:
    return sum(1 for s, t in itertools.combinations(range(len(w)), 2) if w[s] > w[t])


@dataclass(frozen=True)
class SignedStats:
    sh: tuple
    sinv: int
    wex: int
    neg: tuple
    lrmax: int
    rlmin: int
    cro: int


def signed_stats(tau: SignedPerm) -> SignedStats:
    dom, val = tau.domain, tau.values
    sh = tuple(2 if v >= i else 1 if v < 0 else 0 for i, v in zip(dom, val))
    dvals = [abs(tau(d)) for d in tau.neg]
    dmax = max(dvals, default=0)
    dmin = min(dvals, default=None)
    lr = 0
    best = 0
    for v in val:
        if v > best and v > dmax:
            lr += 1
        best = max(best, abs(v))
    rl = 0
    low = None
    for v in reversed(val):
        if v > 0 and (low is None or v < low) and (dmin is None or v < dmin):
            rl += 1
        low = abs(v) if low is None else min(low, abs(v))
    return SignedStats(
        sh=sh,
        sinv=inversions(sh),
        wex=sum(1 for i, v in zip(dom, val) if v >= i),
        neg=tau.neg,
        lrmax=lr,
        rlmin=rl,
        cro=crossings(tau).total,
    )


@dataclass(frozen=True)
class WordStats:
    inv: int
    rlmin: tuple
    rlmax: tuple
    ides: frozenset


def word_stats(v: Sequence) -> WordStats:
    if len(set(v)) != len(v):
        raise AssembleeError("letters must be distinct")
    rlmin, rlmax = [], []
    lo = hi = None
    for x in reversed(v):
        if lo is None or x < lo:
            lo = x
            rlmin.append(x)
        if hi is None or x > hi:
            hi = x
            rlmax.append(x)
    pos = {x: t for t, x in enumerate(v)}
    ides = frozenset(x for x in v if isinstance(x, int) and x + 1 in pos and pos[x + 1] < pos[x])
    return WordStats(inversions(v), tuple(reversed(rlmin)), tuple(reversed(rlmax)), ides)


# ---------------------------------------------------------------- enumeration

def all_assemblees(n: int | Sequence[int], r: int | None = None) -> Iterator[Assemblee]:
    """Assemblées on [n] (or on a given set), optionally with r blocks."""
    X = list(range(1, n + 1)) if isinstance(n, int) else sorted(n)
    m = len(X)
    for f in itertools.permutations(X):
        for cuts in itertools.product((False, True), repeat=max(m - 1, 0)):
            if r is not None and sum(cuts) + 1 != r:
                continue
            blocks, cur = [], [f[0]]
            for x, c in zip(f[1:], cuts):
                if c:
                    blocks.append(cur)
                    cur = []
                cur.append(x)
            blocks.append(cur)
            if all(a[0] < b[0] for a, b in zip(blocks, blocks[1:])):
                yield Assemblee(tuple(tuple(b) for b in blocks))


def all_signed(n: int, r: int) -> Iterator[SignedPerm]:
    """SP(n, r): r negative entries, one of them at position 1."""
    dom = tuple(range(1, n + 1))
    for p in itertools.permutations(dom):
        for rest in itertools.combinations(dom[1:], r - 1):
            negs = {1, *rest}
            yield SignedPerm(dom, tuple(-v if i in negs else v for i, v in zip(dom, p)))


def all_as(n: int, r: int) -> Iterator[SignedPerm]:
    for pi in all_assemblees(n, r):
        yield to_signed(pi)
