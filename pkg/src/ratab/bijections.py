"""Maps between extended RAT and assemblées or signed permutations.

Zigzag paths enter a strip at the NW border and walk toward the SE border.
Every tile (i, j) is crossed west to east by strip i and north to south by
strip j; at a turning tile the path swaps to the other strip.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .assemblee import (
    Assemblee,
    SignedPerm,
    canonicalize,
    eps_word,
    eps_word_inv,
    foata,
    iota,
    iota_inv,
    map_to_cycles,
)
from .shapes import Eps, Label, ShapeWord, build_diagram
from .tableaux import (
    LEFT,
    UP,
    RAT,
    TableauError,
    compute_stats,
    flatten,
    free_cells,
    is_extended,
    make_rat,
    validate_rat,
)

__all__ = [
    "BijectionError",
    "zigzag_exits",
    "at_insertion",
    "at_zigzag",
    "insertion",
    "insertion_via_flatten",
    "insertion_inverse",
    "arrow_zigzag",
    "arrow_zigzag_via_flatten",
    "fusion_exchange",
    "FETrace",
    "fe_inverse",
    "zeta",
    "Corner",
    "rat_corners",
    "first_corner",
    "shape_descents",
    "first_shape_descent",
    "reduce_rat",
    "expand_rat",
    "reduce_signed",
    "expand_signed",
    "zeta_inverse",
]


class BijectionError(ValueError):
    """Input outside the domain of a map."""


# ---------------------------------------------------------------- zigzag paths

def zigzag_exits(R: RAT, turning: set) -> dict:
    """Map each strip label to the strip on which its zigzag path leaves."""
    D = R.diagram
    strips = D.strip_index
    out = {}
    for start in R.word.labels:
        s, t = start, 0
        while t < len(strips[s]):
            cell = strips[s][t]
            if cell in turning:
                other = cell[1] if s == cell[0] else cell[0]
                s, t = other, D.position(cell, other) + 1
            else:
                t += 1
        out[start] = s
    return out


def _require_at_plus(T: RAT) -> None:
    if T.word.r:
        raise BijectionError("expected an alternative tableau")
    ups = {c[1] for c, k in T.arrows if k == UP}
    if any(c not in ups for c in T.columns()):
        raise BijectionError("every column needs an up-arrow")


def at_insertion(T: RAT) -> tuple:
    """Insertion word of an extended alternative tableau."""
    _require_at_plus(T)
    st = compute_stats(T)
    v = list(st.free_rows)
    up_row = {c[1]: c[0] for c, k in T.arrows if k == UP}
    for c in sorted(T.columns(), reverse=True):
        lefts = sorted(x[0] for x, k in T.arrows if k == LEFT and x[1] == c)
        j = up_row[c]
        at = v.index(j)
        v[at:at] = lefts + [c]
    return tuple(v)


def at_zigzag(T: RAT) -> tuple:
    """Two-line image (in label order) of the arrow-zigzag permutation."""
    _require_at_plus(T)
    ex = zigzag_exits(T, set(T.amap))
    return tuple(ex[x] for x in T.word.labels)


# ---------------------------------------------------------------- insertion

def _require_plus(R: RAT) -> None:
    if not is_extended(R):
        raise BijectionError("expected an extended RAT")


def insertion(R: RAT) -> Assemblee:
    _require_plus(R)
    diags = R.diagonals()
    eps = {d: Eps(t + 1) for t, d in enumerate(diags)}
    v = [eps[d] for d in diags] + list(compute_stats(R).free_rows)
    letter = {a: w for a, w in zip(R.word.labels, R.word.letters)}
    for ell in sorted((a for a in R.word.labels if letter[a] != 2), reverse=True):
        lefts = sorted(c[0] for c, k in R.arrows if k == LEFT and c[1] == ell)
        if letter[ell] == 1:
            j = eps[ell]
        else:
            h = next(c[0] for c, k in R.arrows if k == UP and c[1] == ell)
            j = eps.get(h, h)
        at = v.index(j)
        v[at:at] = lefts + [ell]
    return eps_word_inv(v)


def insertion_via_flatten(R: RAT) -> Assemblee:
    return eps_word_inv(at_insertion(flatten(R)))


def _classify(v: list) -> dict:
    """ascent -> 2, special descent -> 1, regular descent -> 0."""
    out = {}
    for t, x in enumerate(v):
        if isinstance(x, Eps):
            continue
        nxt = v[t + 1] if t + 1 < len(v) else None
        if nxt is None or nxt > x:
            out[x] = 2
        elif isinstance(nxt, Eps):
            out[x] = 1
        else:
            out[x] = 0
    return out


def insertion_inverse(pi: Assemblee) -> RAT:
    if min(pi.ground) != 1 or list(pi.ground) != list(range(1, len(pi.ground) + 1)):
        raise BijectionError("expected an assemblée on 1..n")
    v = list(eps_word(pi))
    kind = _classify(v)
    labels = sorted(kind)
    word = ShapeWord(tuple(kind[a] for a in labels), tuple(labels))
    diags = [a for a in labels if kind[a] == 1]
    diag_of = {Eps(t + 1): d for t, d in enumerate(diags)}
    arrows = {}
    for ell in (a for a in labels if kind[a] != 2):
        at = v.index(ell)
        if kind[ell] == 0:
            j = v[at + 1]
            s = at
            while s - 1 >= 0 and not isinstance(v[s - 1], Eps) and j < v[s - 1] < v[s]:
                s -= 1
            arrows[(diag_of.get(j, j), ell)] = UP
        else:
            s = at
            while s - 1 >= 0 and not isinstance(v[s - 1], Eps) and v[s - 1] < v[s]:
                s -= 1
        for r in v[s:at]:
            arrows[(r, ell)] = LEFT
        del v[s : at + 1]
    return make_rat(word, arrows)


# ---------------------------------------------------------------- arrow zigzag

def _with_eps(sigma: dict, diags: list) -> tuple:
    m = dict(sigma)
    for t, d in enumerate(diags):
        e = Eps(t + 1)
        m[e] = m[d]
        m[d] = e
    return map_to_cycles(m)


def arrow_zigzag(R: RAT) -> tuple:
    """Cycle form of the arrow-zigzag permutation with ε inserted after each diagonal."""
    _require_plus(R)
    return _with_eps(zigzag_exits(R, set(R.amap)), R.diagonals())


def arrow_zigzag_via_flatten(R: RAT) -> tuple:
    T = flatten(R)
    ex = zigzag_exits(T, set(T.amap))
    return map_to_cycles(ex)


# ---------------------------------------------------------------- fusion-exchange

@dataclass(frozen=True)
class FETrace:
    """Label sets on the sides of every tile, as (lo, hi) or None."""

    sides: dict  # cell -> (S, E, N, W)
    nw: dict  # strip label -> label set on its NW-border edge


def _prec(I, J) -> bool:
    return I is not None and J is not None and I[1] + 1 == J[0]


def _union(I, J):
    return (min(I[0], J[0]), max(I[1], J[1]))


def fusion_exchange(pi: Assemblee, trace: bool = False):
    f, heads = canonicalize(pi)
    n = len(f)
    if sorted(f) != list(range(1, n + 1)):
        raise BijectionError("expected an assemblée on 1..n")
    pos = {x: t for t, x in enumerate(f)}
    ides = {x for x in f if x + 1 in pos and pos[x + 1] < pos[x]}
    letters = tuple(1 if x in heads else 0 if x in ides else 2 for x in f)
    word = ShapeWord.standard(letters)
    D = build_diagram(word)
    edge = {k + 1: (f[k], f[k]) for k in range(n)}
    arrows = {}
    sides = {}
    for cell in D.order:
        i, j = cell
        E, S = edge[i], edge[j]
        if _prec(S, E) and letters[j - 1] != 1:
            N, W = None, _union(S, E)
            arrows[cell] = UP
        elif _prec(E, S) and letters[i - 1] != 1:
            N, W = _union(S, E), None
            arrows[cell] = LEFT
        else:
            N, W = S, E
        edge[j], edge[i] = N, W
        sides[cell] = (S, E, N, W)
    R = make_rat(word, arrows)
    if trace:
        return R, FETrace(sides, dict(edge))
    return R


def fe_inverse(R: RAT) -> Assemblee:
    """Inverse of fusion-exchange, through the insertion map and ι."""
    return iota_inv(eps_word(insertion(R)))


# ---------------------------------------------------------------- zeta

def zeta(R: RAT) -> SignedPerm:
    _require_plus(R)
    turning = {c for c, k in R.arrows if k == UP} | set(free_cells(R))
    ex = zigzag_exits(R, turning)
    letter = dict(zip(R.word.labels, R.word.letters))
    vals = tuple(-ex[a] if letter[a] == 1 else ex[a] for a in R.word.labels)
    return SignedPerm(tuple(R.word.labels), vals)


# ---------------------------------------------------------------- corners

@dataclass(frozen=True)
class Corner:
    i: int
    j: int
    kind: str  # "L", "U" or "E" (no arrow)


def rat_corners(R: RAT) -> list[Corner]:
    out = []
    w, lab = R.word.letters, R.word.labels
    for k in range(len(w) - 1):
        if w[k] > w[k + 1]:
            c = (lab[k], lab[k + 1])
            out.append(Corner(c[0], c[1], R.amap.get(c, "E")))
    return out


def first_corner(R: RAT) -> Corner | None:
    cs = rat_corners(R)
    return cs[0] if cs else None


def _sh(tau: SignedPerm) -> list:
    return [2 if v >= i else 1 if v < 0 else 0 for i, v in zip(tau.domain, tau.values)]


def shape_descents(tau: SignedPerm) -> list[Corner]:
    sh = _sh(tau)
    X = tau.domain
    out = []
    for k in range(len(X) - 1):
        if sh[k] > sh[k + 1]:
            i, j = X[k], X[k + 1]
            if tau(i) == i:
                g = "L"
            elif tau(j) == i:
                g = "U"
            else:
                g = "E"
            out.append(Corner(i, j, g))
    return out


def first_shape_descent(tau: SignedPerm) -> Corner | None:
    ds = shape_descents(tau)
    return ds[0] if ds else None


def _swap_labels(arrows: dict, a, b) -> dict:
    sw = {a: b, b: a}
    out = {}
    for (x, y), k in arrows.items():
        x, y = sw.get(x, x), sw.get(y, y)
        out[(min(x, y), max(x, y))] = k
    return out


def reduce_rat(R: RAT, c: Corner) -> RAT:
    """D operator on a RAT at the corner c."""
    labels = list(R.word.labels)
    k = labels.index(c.i)
    if k + 1 >= len(labels) or labels[k + 1] != c.j or R.word.letters[k] <= R.word.letters[k + 1]:
        raise BijectionError(f"({c.i},{c.j}) is not a corner")
    if R.amap.get((c.i, c.j), "E") != c.kind:
        raise BijectionError("corner type mismatch")
    if c.kind in ("L", "U"):
        gone = c.i if c.kind == "L" else c.j
        rest = {x: a for x, a in R.amap.items() if gone not in x}
        if len(rest) != len(R.amap) - 1:
            raise BijectionError(f"strip {gone} holds more than the corner arrow")
        return make_rat(R.word.restrict(set(labels) - {gone}), rest)
    letters = list(R.word.letters)
    letters[k], letters[k + 1] = letters[k + 1], letters[k]
    return make_rat(ShapeWord(tuple(letters), R.word.labels), _swap_labels(R.amap, c.i, c.j))


def expand_rat(R: RAT, c: Corner) -> RAT:
    """I operator on a RAT: the inverse of ``reduce_rat`` at c."""
    if c.kind == "E":
        labels = list(R.word.labels)
        k = labels.index(c.i)
        if labels[k + 1] != c.j or R.word.letters[k] >= R.word.letters[k + 1]:
            raise BijectionError("cannot re-insert a corner tile here")
        letters = list(R.word.letters)
        letters[k], letters[k + 1] = letters[k + 1], letters[k]
        return make_rat(ShapeWord(tuple(letters), R.word.labels), _swap_labels(R.amap, c.i, c.j))
    new, letter = (c.i, 2) if c.kind == "L" else (c.j, 0)
    pairs = sorted(list(zip(R.word.labels, R.word.letters)) + [(new, letter)])
    word = ShapeWord(tuple(p[1] for p in pairs), tuple(p[0] for p in pairs))
    arrows = dict(R.amap)
    arrows[(c.i, c.j)] = LEFT if c.kind == "L" else UP
    return make_rat(word, arrows)


def reduce_signed(tau: SignedPerm, c: Corner) -> SignedPerm:
    m = dict(zip(tau.domain, tau.values))
    if c.kind == "L":
        if m[c.i] != c.i:
            raise BijectionError("type L needs a fixed point")
        del m[c.i]
    elif c.kind == "U":
        if m[c.j] != c.i:
            raise BijectionError("type U needs τ(j) = i")
        del m[c.j]
        y = next(y for y, v in m.items() if abs(v) == c.j)
        m[y] = c.i if m[y] > 0 else -c.i
    else:
        m[c.i], m[c.j] = m[c.j], m[c.i]
    dom = tuple(sorted(m))
    return SignedPerm(dom, tuple(m[x] for x in dom))


def expand_signed(tau: SignedPerm, c: Corner) -> SignedPerm:
    m = dict(zip(tau.domain, tau.values))
    if c.kind == "L":
        m[c.i] = c.i
    elif c.kind == "U":
        y = next(y for y, v in m.items() if abs(v) == c.i)
        m[y] = c.j if m[y] > 0 else -c.j
        m[c.j] = c.i
    else:
        m[c.i], m[c.j] = m[c.j], m[c.i]
    dom = tuple(sorted(m))
    return SignedPerm(dom, tuple(m[x] for x in dom))


def zeta_inverse(tau: SignedPerm) -> RAT:
    from .assemblee import is_as

    if not is_as(tau):
        raise BijectionError(f"{tau} is not in assemblée form")
    stack = []
    cur = tau
    while True:
        c = first_shape_descent(cur)
        if c is None:
            break
        stack.append(c)
        cur = reduce_signed(cur, c)
    sh = _sh(cur)
    R = make_rat(ShapeWord(tuple(sh), cur.domain), {})
    if zeta(R) != cur:
        raise BijectionError("reduction did not reach a tile-free tableau")
    for c in reversed(stack):
        R = expand_rat(R, c)
    return R
