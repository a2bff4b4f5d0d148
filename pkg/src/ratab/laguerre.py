"""Marked Laguerre histories and their bijection with signed permutations.

Steps are ``U`` (up), ``H`` (solid horizontal), ``h`` (dashed horizontal)
and ``D`` (down).  Heights are never stored; they are recomputed from the
step kinds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .assemblee import SignedPerm, crossings

__all__ = [
    "LaguerreError",
    "Step",
    "StarStep",
    "heights",
    "parse_mlh",
    "format_mlh",
    "parse_mlh_star",
    "format_mlh_star",
    "validate_mlh",
    "validate_mlh_star",
    "mark_count",
    "weight_exponent",
    "weight_exponent_star",
    "star_to_plain",
    "plain_to_star",
    "sp_to_mlh",
    "mlh_to_sp",
    "rho",
    "rho_inverse",
    "all_mlh",
    "all_mlh_star",
]

KINDS = ("U", "H", "h", "D")
DELTA = {"U": 1, "H": 0, "h": 0, "D": -1}


class LaguerreError(ValueError):
    """Malformed path or a signed permutation outside the domain."""


@dataclass(frozen=True)
class Step:
    """Plain marked step: one label, optional mark."""

    kind: str
    label: int
    marked: bool = False

    def __str__(self) -> str:
        return f"{self.kind}:{self.label}" + ("!" if self.marked else "")


@dataclass(frozen=True)
class StarStep:
    """Modified step: labels () for U, (k,) for H/h, (k, k') for D; marks in 'a', 'd', 'ad'."""

    kind: str
    labels: tuple = ()
    marks: str = ""

    def __str__(self) -> str:
        s = self.kind
        if self.labels:
            s += ":" + ",".join(map(str, self.labels))
        if self.marks:
            s += "!" + self.marks
        return s


def heights(steps: Sequence) -> list[int]:
    """Starting height of every step."""
    out, h = [], 0
    for s in steps:
        out.append(h)
        h += DELTA[s.kind]
    return out


# ---------------------------------------------------------------- text format

_PLAIN = re.compile(r"([UHhD]):(\d+)(!?)")
_STAR = re.compile(r"([UHhD])(?::(\d+)(?:,(\d+))?)?(?:!(ad|a|d))?")


def parse_mlh(text: str) -> tuple:
    out = []
    for tok in text.split():
        m = _PLAIN.fullmatch(tok)
        if not m:
            raise LaguerreError(f"bad step {tok!r}")
        out.append(Step(m.group(1), int(m.group(2)), bool(m.group(3))))
    return tuple(out)


def format_mlh(steps: Sequence[Step]) -> str:
    return " ".join(map(str, steps))


def parse_mlh_star(text: str) -> tuple:
    out = []
    for tok in text.split():
        m = _STAR.fullmatch(tok)
        if not m:
            raise LaguerreError(f"bad step {tok!r}")
        kind, a, b, marks = m.groups()
        labels = tuple(int(x) for x in (a, b) if x is not None)
        want = {"U": 0, "H": 1, "h": 1, "D": 2}[kind]
        if len(labels) != want:
            raise LaguerreError(f"step {tok!r} needs {want} label(s)")
        out.append(StarStep(kind, labels, marks or ""))
    return tuple(out)


def format_mlh_star(steps: Sequence[StarStep]) -> str:
    return " ".join(map(str, steps))


# ---------------------------------------------------------------- validity

def _path_errors(steps) -> list[str]:
    errs = []
    h = 0
    for t, s in enumerate(steps):
        if s.kind not in KINDS:
            errs.append(f"step {t + 1}: unknown kind {s.kind!r}")
            continue
        h += DELTA[s.kind]
        if h < 0:
            errs.append(f"step {t + 1}: path goes below zero")
    if h != 0:
        errs.append("path does not end at height 0")
    return errs


def validate_mlh(steps: Sequence[Step]) -> list[str]:
    errs = _path_errors(steps)
    for t, (s, h) in enumerate(zip(steps, heights(steps))):
        top = h if s.kind in ("U", "H") else h - 1
        if not 0 <= s.label <= top:
            errs.append(f"step {t + 1}: label {s.label} outside [0,{top}]")
    if not steps or not steps[0].marked:
        errs.append("first step must be marked")
    return errs


def validate_mlh_star(steps: Sequence[StarStep]) -> list[str]:
    errs = _path_errors(steps)
    for t, (s, h) in enumerate(zip(steps, heights(steps))):
        if s.kind == "U":
            ok_marks = ("", "a", "d", "ad")
            if s.labels:
                errs.append(f"step {t + 1}: up steps carry no label")
        elif s.kind == "D":
            ok_marks = ("",)
            if len(s.labels) != 2 or any(not 0 <= x <= h - 1 for x in s.labels):
                errs.append(f"step {t + 1}: down labels outside [0,{h - 1}]^2")
        else:
            ok_marks = ("", "a")
            top = h if s.kind == "H" else h - 1
            if len(s.labels) != 1 or not 0 <= s.labels[0] <= top:
                errs.append(f"step {t + 1}: label outside [0,{top}]")
        if s.marks not in ok_marks:
            errs.append(f"step {t + 1}: marks {s.marks!r} not allowed on {s.kind}")
    if not steps or "a" not in steps[0].marks:
        errs.append("first step must carry mark a")
    return errs


def mark_count(steps) -> int:
    if steps and isinstance(steps[0], Step):
        return sum(s.marked for s in steps)
    return sum(len(s.marks) for s in steps)


# ---------------------------------------------------------------- weights

def weight_exponent(steps: Sequence[Step]) -> int:
    return sum(s.label for s in steps) + sum(h for s, h in zip(steps, heights(steps)) if s.marked)


def weight_exponent_star(steps: Sequence[StarStep]) -> int:
    total = 0
    for s, h in zip(steps, heights(steps)):
        total += sum(s.labels) + h * len(s.marks) + s.marks.count("d")
    return total


# ---------------------------------------------------------------- pairing

def _pairs(steps) -> dict:
    """Up-step index -> index of its matching down step."""
    out, stack = {}, []
    for t, s in enumerate(steps):
        if s.kind == "U":
            stack.append(t)
        elif s.kind == "D":
            out[stack.pop()] = t
    return out


def star_to_plain(steps: Sequence[StarStep]) -> tuple:
    pair = _pairs(steps)
    back = {d: u for u, d in pair.items()}
    out = []
    for t, s in enumerate(steps):
        if s.kind == "U":
            out.append(Step("U", steps[pair[t]].labels[1], "a" in s.marks))
        elif s.kind == "D":
            out.append(Step("D", s.labels[0], "d" in steps[back[t]].marks))
        else:
            out.append(Step(s.kind, s.labels[0], "a" in s.marks))
    return tuple(out)


def plain_to_star(steps: Sequence[Step]) -> tuple:
    pair = _pairs(steps)
    back = {d: u for u, d in pair.items()}
    out = []
    for t, s in enumerate(steps):
        if s.kind == "U":
            marks = ("a" if s.marked else "") + ("d" if steps[pair[t]].marked else "")
            out.append(StarStep("U", (), marks))
        elif s.kind == "D":
            out.append(StarStep("D", (s.label, steps[back[t]].label), ""))
        else:
            out.append(StarStep(s.kind, (s.label,), "a" if s.marked else ""))
    return tuple(out)


# ---------------------------------------------------------------- phi and psi

def _check_sp(tau: SignedPerm) -> None:
    if tau.domain != tuple(range(1, tau.n + 1)):
        raise LaguerreError("expected a signed permutation of 1..n")
    if not tau.n or tau.values[0] > 0:
        raise LaguerreError("1 must be a negative position")


def sp_to_mlh(tau: SignedPerm) -> tuple:
    """The modified marked Laguerre history of τ; its weight is cro(τ)."""
    _check_sp(tau)
    prof = crossings(tau)
    up, lo = prof.upper_by_b, prof.lower_by_b
    out = []
    h = 0
    for i in tau.domain:
        img, pre = tau(i), tau.inv(i)
        a, b = abs(img), abs(pre)
        if a > i and b > i:
            marks = ("a" if img < 0 else "") + ("d" if pre < 0 else "")
            step = StarStep("U", (), marks)
        elif a == i:
            step = StarStep("H", (0,), "") if img > 0 else StarStep("H", (h,), "a")
        elif b < i < a:
            step = StarStep("H", (up[i],), "a" if img < 0 else "")
        elif a < i < b:
            step = StarStep("h", (lo[i],), "a" if pre < 0 else "")
        else:
            step = StarStep("D", (up[i], lo[i]), "")
        out.append(step)
        h += DELTA[step.kind]
    return tuple(out)


def mlh_to_sp(steps: Sequence[StarStep]) -> SignedPerm:
    errs = validate_mlh_star(steps)
    if errs:
        raise LaguerreError("; ".join(errs))
    n = len(steps)
    r = mark_count(steps)
    touched = 0
    ou, ol = [], []  # open upper / lower arc starts
    upper, lower = [], []

    def fresh():
        nonlocal touched
        touched += 1
        if touched > r:
            raise LaguerreError("ran out of negative vertices")
        return -touched

    for i, s in enumerate(steps, start=1):
        if s.kind == "U":
            if s.marks == "":
                ou.append(i)
                ol.append(i)
            elif s.marks == "a":
                m = fresh()
                lower.append((m, i))
                ou.append(m)
                ol.append(i)
            elif s.marks == "d":
                m = fresh()
                upper.append((m, i))
                ol.append(m)
                ou.append(i)
            else:
                m, ell = fresh(), fresh()
                lower.append((m, i))
                ou.append(m)
                upper.append((ell, i))
                ol.append(ell)
        elif s.kind == "H":
            k = s.labels[0]
            if s.marks == "":
                if k == 0:  # an unmarked crossing step always counts its own new arc
                    upper.append((i, i))
                    continue
                prev = list(ou)
                ou.append(i)
                x = _pick_after(prev, ou, i, k, weak=True)
                ou.remove(x)
                upper.append((x, i))
            else:
                h = len(ou)
                if k == h:
                    m = fresh()
                    lower.append((m, i))
                    upper.append((m, i))
                    continue
                prev = list(ou)
                m = fresh()
                lower.append((m, i))
                ou.append(m)
                x = _pick_after(prev, ou, i, k, weak=True)
                ou.remove(x)
                upper.append((x, i))
        elif s.kind == "h":
            k = s.labels[0]
            if s.marks == "":
                prev = list(ol)
                ol.append(i)
                x = _pick_after(prev, ol, i, k, weak=False)
                ol.remove(x)
                lower.append((x, i))
            else:
                prev = list(ol)
                m = fresh()
                upper.append((m, i))
                ol.append(m)
                x = _pick_after(prev, ol, i, k, weak=False)
                ol.remove(x)
                lower.append((x, i))
        else:
            k, k2 = s.labels
            x = _pick_after(list(ou), ou, i, k, weak=True)
            ou.remove(x)
            upper.append((x, i))
            y = _pick_after(list(ol), ol, i, k2, weak=False)
            ol.remove(y)
            lower.append((y, i))
    if ou or ol or touched != r:
        raise LaguerreError("arcs left open")
    img = {}
    neg_lower = {a: b for a, b in lower if a < 0}
    neg_upper = {a: b for a, b in upper if a < 0}
    for a, b in upper:
        if a > 0:
            img[a] = b
    for a, b in lower:
        if a > 0:
            img[b] = a
    for v, d in neg_lower.items():
        img[d] = -neg_upper[v]
    if sorted(img) != list(range(1, n + 1)):
        raise LaguerreError("arcs do not form a signed permutation")
    return SignedPerm(tuple(range(1, n + 1)), tuple(img[i] for i in range(1, n + 1)))


def _pick_after(cands: list, after: list, i: int, k: int, weak: bool) -> int:
    """Choose x in cands so that, once x is closed, k open starts c satisfy x < c (<=|<) i."""
    hits = []
    for x in cands:
        cnt = sum(1 for c in after if c != x and x < c and (c <= i if weak else c < i))
        if cnt == k:
            hits.append(x)
    if len(hits) != 1:
        raise LaguerreError(f"step {i}: {len(hits)} candidates for label {k}")
    return hits[0]


# ---------------------------------------------------------------- rho

def rho(nu: SignedPerm) -> tuple[SignedPerm, tuple]:
    """(τ, σ) with τ in assemblée form and cro(ν) = cro(τ) + inv(σ)."""
    _check_sp(nu)
    a = nu.neg
    b = sorted(abs(nu(x)) for x in a)
    where = {v: t for t, v in enumerate(b)}
    sigma = tuple(where[abs(nu(x))] + 1 for x in a)
    m = dict(zip(nu.domain, nu.values))
    for t, x in enumerate(a):
        m[x] = -b[t]
    return SignedPerm(nu.domain, tuple(m[x] for x in nu.domain)), sigma


def rho_inverse(tau: SignedPerm, sigma: Sequence[int]) -> SignedPerm:
    a = tau.neg
    if sorted(sigma) != list(range(1, len(a) + 1)):
        raise LaguerreError("σ must be a permutation of 1..r")
    b = [abs(tau(x)) for x in a]
    if b != sorted(b):
        raise LaguerreError("τ is not in assemblée form")
    m = dict(zip(tau.domain, tau.values))
    for t, x in enumerate(a):
        m[x] = -b[sigma[t] - 1]
    return SignedPerm(tau.domain, tuple(m[x] for x in tau.domain))


# ---------------------------------------------------------------- enumeration

def _shapes(n: int) -> Iterator[tuple]:
    """2-Motzkin step-kind sequences of length n."""

    def rec(t, h, acc):
        if h > n - t:
            return
        if t == n:
            yield tuple(acc)
            return
        for k in KINDS:
            if k in ("h", "D") and h == 0:
                continue
            acc.append(k)
            yield from rec(t + 1, h + DELTA[k], acc)
            acc.pop()

    yield from rec(0, 0, [])


def all_mlh(n: int, r: int) -> Iterator[tuple]:
    for kinds in _shapes(n):
        hs = heights([Step(k, 0) for k in kinds])
        opts = []
        for t, (k, h) in enumerate(zip(kinds, hs)):
            top = h if k in ("U", "H") else h - 1
            marks = (True,) if t == 0 else (False, True)
            opts.append([(lab, mk) for lab in range(top + 1) for mk in marks])
        yield from _product_marks(kinds, opts, r)


def _product_marks(kinds, opts, r):
    n = len(kinds)

    def rec(t, used, acc):
        if used > r or used + (n - t) < r:
            return
        if t == n:
            yield tuple(acc)
            return
        for lab, mk in opts[t]:
            acc.append(Step(kinds[t], lab, mk))
            yield from rec(t + 1, used + mk, acc)
            acc.pop()

    yield from rec(0, 0, [])


def all_mlh_star(n: int, r: int) -> Iterator[tuple]:
    for kinds in _shapes(n):
        hs = heights([Step(k, 0) for k in kinds])
        opts = []
        for t, (k, h) in enumerate(zip(kinds, hs)):
            if k == "U":
                marks = ("a", "ad") if t == 0 else ("", "a", "d", "ad")
                opts.append([StarStep("U", (), m) for m in marks])
            elif k == "D":
                opts.append([StarStep("D", (x, y), "") for x in range(h) for y in range(h)])
            else:
                top = h if k == "H" else h - 1
                marks = ("a",) if t == 0 else ("", "a")
                opts.append([StarStep(k, (x,), m) for x in range(top + 1) for m in marks])

        def rec(t, used, acc):
            if used > r or used + 2 * (n - t) < r:
                return
            if t == n:
                if used == r:
                    yield tuple(acc)
                return
            for s in opts[t]:
                acc.append(s)
                yield from rec(t + 1, used + len(s.marks), acc)
                acc.pop()

        yield from rec(0, 0, [])
