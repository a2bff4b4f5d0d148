"""Arrow fillings of rhombic diagrams: validity, statistics and structure maps.

Both arrow kinds point toward the northwest end of their strip: an up-arrow
at position k of a column points at the column cells at positions < k, and a
left-arrow does the same along its row.  Positions count from the NW border.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .shapes import (
    Eps,
    Label,
    RhombicDiagram,
    ShapeError,
    ShapeWord,
    TileKind,
    build_diagram,
    format_label,
    parse_label,
    parse_shape_word,
)

__all__ = [
    "UP",
    "LEFT",
    "TableauError",
    "RAT",
    "make_rat",
    "parse_rat",
    "format_rat",
    "placement_errors",
    "validate_rat",
    "is_valid",
    "TableauStats",
    "compute_stats",
    "free_cells",
    "is_extended",
    "extend",
    "restrict",
    "flatten",
    "unflatten",
    "split",
    "unsplit",
    "packed_classify",
    "straighten",
    "unstraighten",
    "enumerate_fillings",
    "words",
    "all_rat",
    "all_rat_plus",
    "all_at_plus",
]

UP = "U"
LEFT = "L"


class TableauError(ValueError):
    """A filling breaks a placement rule or a membership condition."""


@dataclass(frozen=True)
class RAT:
    word: ShapeWord
    # sorted tuple of ((i, j), kind)
    arrows: tuple = ()

    @property
    def diagram(self) -> RhombicDiagram:
        return build_diagram(self.word)

    @functools.cached_property
    def amap(self) -> dict:
        return dict(self.arrows)

    @property
    def labels(self) -> tuple:
        return self.word.labels

    def letter(self, label: Label) -> int:
        return self._letter_of[label]

    @functools.cached_property
    def _letter_of(self) -> dict:
        return dict(zip(self.word.labels, self.word.letters))

    def rows(self) -> list:
        return [a for a, w in zip(self.word.labels, self.word.letters) if w == 2]

    def columns(self) -> list:
        return [a for a, w in zip(self.word.labels, self.word.letters) if w == 0]

    def diagonals(self) -> list:
        return [a for a, w in zip(self.word.labels, self.word.letters) if w == 1]

    def __str__(self) -> str:
        return format_rat(self)


def make_rat(word: ShapeWord | str, arrows: Mapping | Iterable = ()) -> RAT:
    if isinstance(word, str):
        word = parse_shape_word(word)
    items = arrows.items() if isinstance(arrows, Mapping) else arrows
    return RAT(word, tuple(sorted(items, key=lambda kv: kv[0])))


# ---------------------------------------------------------------- text format

_ARROW_RE = re.compile(r"([UL])@\(\s*([^,\s]+)\s*,\s*([^)\s]+)\s*\)")


def parse_rat(text: str) -> RAT:
    """Parse ``shape:``/``labels:``/``arrows:`` lines; placements are checked."""
    fields = {}
    for line in text.strip().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, val = line.partition(":")
        fields[key.strip().lower()] = val.strip()
    if "shape" not in fields:
        raise TableauError("missing 'shape:' line")
    labels = None
    if fields.get("labels"):
        labels = [parse_label(t) for t in fields["labels"].split()]
    word = parse_shape_word(fields["shape"], labels)
    arrows = {}
    body = fields.get("arrows", "")
    consumed = _ARROW_RE.sub("", body).strip()
    if consumed:
        raise TableauError(f"unparsed arrow text {consumed!r}")
    for kind, a, b in _ARROW_RE.findall(body):
        cell = (parse_label(a), parse_label(b))
        if cell in arrows:
            raise TableauError(f"two arrows in cell {cell}")
        arrows[cell] = kind
    R = make_rat(word, arrows)
    errs = placement_errors(R)
    if errs:
        raise TableauError("; ".join(errs))
    return R


def format_rat(R: RAT) -> str:
    lines = [f"shape: {R.word.text()}"]
    if not R.word.is_standard():
        lines.append("labels: " + " ".join(format_label(x) for x in R.word.labels))
    arr = " ".join(f"{k}@({format_label(c[0])},{format_label(c[1])})" for c, k in R.arrows)
    lines.append(f"arrows: {arr}".rstrip())
    return "\n".join(lines)


# ---------------------------------------------------------------- validity

def placement_errors(R: RAT) -> list[str]:
    """Arrows outside cells, or up/left arrows outside a column/row."""
    D = R.diagram
    out = []
    for cell, kind in R.arrows:
        tile = D.tiles.get(cell)
        if tile is None:
            out.append(f"no cell at {cell}")
        elif kind == UP and tile.kind is TileKind.TALL:
            out.append(f"up-arrow at {cell} is not in a column")
        elif kind == LEFT and tile.kind is TileKind.SHORT:
            out.append(f"left-arrow at {cell} is not in a row")
        elif kind not in (UP, LEFT):
            out.append(f"unknown arrow kind {kind!r}")
    return out


def validate_rat(R: RAT) -> list[str]:
    """Empty list iff R is a valid filling; raises on impossible placements."""
    errs = placement_errors(R)
    if errs:
        raise TableauError("; ".join(errs))
    D = R.diagram
    amap = R.amap
    out = []
    for lab, w in zip(R.word.labels, R.word.letters):
        if w == 1:
            continue
        kind = UP if w == 0 else LEFT
        cells = D.strip_index[lab]
        for k, c in enumerate(cells):
            if amap.get(c) != kind:
                continue
            for c2 in cells[:k]:
                if c2 in amap:
                    out.append(f"{amap[c2]}@{c2} is pointed at by {kind}@{c}")
    return out


def is_valid(R: RAT) -> bool:
    try:
        return not validate_rat(R)
    except TableauError:
        return False


# ---------------------------------------------------------------- statistics

@dataclass(frozen=True)
class TableauStats:
    fcell: int
    frow: int
    fcol: int
    row: int
    col: int
    diag: int
    tile: int
    topup: int
    diag_arrows: tuple = field(default=())
    free_rows: tuple = field(default=())
    free_cols: tuple = field(default=())


def free_cells(R: RAT) -> list:
    """Cells with no arrow that no arrow points at."""
    D = R.diagram
    amap = R.amap
    # strip -> largest position holding an arrow that points along it
    reach = {}
    for lab, w in zip(R.word.labels, R.word.letters):
        if w == 1:
            continue
        kind = UP if w == 0 else LEFT
        hit = [k for k, c in enumerate(D.strip_index[lab]) if amap.get(c) == kind]
        reach[lab] = max(hit) if hit else -1
    out = []
    for c in D.order:
        if c in amap:
            continue
        i, j = c
        if i in reach and D.position(c, i) < reach[i]:
            continue
        if j in reach and D.position(c, j) < reach[j]:
            continue
        out.append(c)
    return out


def compute_stats(R: RAT) -> TableauStats:
    amap = R.amap
    rows, cols, diags = R.rows(), R.columns(), R.diagonals()
    lefts = {c[0] for c, k in R.arrows if k == LEFT}
    ups = {c[1] for c, k in R.arrows if k == UP}
    free_rows = tuple(x for x in rows if x not in lefts)
    free_cols = tuple(x for x in cols if x not in ups)
    diag_arrows = tuple(
        sum(1 for c in amap if (c[0] == d and amap[c] == UP) or (c[1] == d and amap[c] == LEFT))
        for d in diags
    )
    topup = 0
    if R.word.n and R.word.letters[0] == 1:
        top = R.word.labels[0]
        topup = sum(1 for c, k in R.arrows if k == UP and c[0] == top)
    return TableauStats(
        fcell=len(free_cells(R)),
        frow=len(free_rows),
        fcol=len(free_cols),
        row=len(rows),
        col=len(cols),
        diag=len(diags),
        tile=len(R.diagram.tiles),
        topup=topup,
        diag_arrows=diag_arrows,
        free_rows=free_rows,
        free_cols=free_cols,
    )


# ---------------------------------------------------------------- extension

def is_extended(R: RAT) -> bool:
    if not R.word.n or R.word.letters[0] != 1:
        return False
    ups = {c[1] for c, k in R.arrows if k == UP}
    return all(c in ups for c in R.columns())


def _shift(label, by):
    return label + by if isinstance(label, int) else label


def extend(R: RAT) -> RAT:
    """RAT(n,r) with labels 1..n to RAT+(n+1,r+1) with labels 1..n+1."""
    if not R.word.is_standard():
        raise TableauError("extend expects labels 1..n")
    st = compute_stats(R)
    word = ShapeWord.standard((1,) + R.word.letters)
    arrows = {(c[0] + 1, c[1] + 1): k for c, k in R.arrows}
    for j in st.free_cols:
        arrows[(1, j + 1)] = UP
    return make_rat(word, arrows)


def restrict(R: RAT) -> RAT:
    if not R.word.is_standard() or not is_extended(R):
        raise TableauError("restrict expects an extended RAT labeled 1..n+1")
    word = ShapeWord.standard(R.word.letters[1:])
    arrows = {(c[0] - 1, c[1] - 1): k for c, k in R.arrows if c[0] != 1}
    return make_rat(word, arrows)


# ---------------------------------------------------------------- flattening

def flatten(R: RAT) -> RAT:
    """RAT+(n+1,r+1) to AT+(n+1,r+1) with border labels e1..e_{r+1}, 1..n+1."""
    if not is_extended(R):
        raise TableauError("flatten expects an extended RAT")
    diags = R.diagonals()
    eps = {d: Eps(t + 1) for t, d in enumerate(diags)}
    letters = (2,) * len(diags) + tuple(0 if w == 1 else w for w in R.word.letters)
    labels = tuple(eps[d] for d in diags) + R.word.labels
    arrows = {(eps[d], d): UP for d in diags}
    for (i, j), k in R.arrows:
        arrows[(eps.get(i, i), j)] = k
    return make_rat(ShapeWord(letters, labels), arrows)


def unflatten(T: RAT) -> RAT:
    labels = T.word.labels
    m = 0
    while m < len(labels) and isinstance(labels[m], Eps):
        m += 1
    if m == 0 or labels[:m] != tuple(Eps(t + 1) for t in range(m)):
        raise TableauError("border must start with e1..e_k")
    if any(w != 2 for w in T.word.letters[:m]):
        raise TableauError("the e-edges must be vertical")
    if any(w == 1 for w in T.word.letters):
        raise TableauError("not an alternative tableau")
    amap = T.amap
    if any(k == LEFT and c[0] in labels[:m] for c, k in T.arrows):
        raise TableauError("a top row contains a left-arrow")
    d = []
    for e in labels[:m]:
        cols = [c[1] for c, k in T.arrows if k == UP and c[0] == e]
        if not cols:
            raise TableauError(f"row {e} has no up-arrow")
        d.append(min(cols))  # rightmost cell of the row
    if d[0] != labels[m] or any(a >= b for a, b in zip(d, d[1:])):
        raise TableauError("rightmost up-arrows of the top rows are not increasing from 1")
    dset = set(d)
    letters = tuple(1 if lab in dset else w for lab, w in zip(labels[m:], T.word.letters[m:]))
    word = ShapeWord(letters, labels[m:])
    back = {e: d[t] for t, e in enumerate(labels[:m])}
    arrows = {}
    for (i, j), k in T.arrows:
        if i in back and j == back[i]:
            continue
        arrows[(back.get(i, i), j)] = k
    R = make_rat(word, arrows)
    if validate_rat(R) or not is_extended(R):
        raise TableauError("input is not in the image of flatten")
    return R


# ---------------------------------------------------------------- split

def split(T: RAT) -> list[tuple[tuple, RAT]]:
    """Connected components of the 'shares an arrow' relation, as packed RAT."""
    parent = {x: x for x in T.word.labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, j), _ in T.arrows:
        a, b = find(i), find(j)
        if a != b:
            parent[max(a, b)] = min(a, b)
    classes: dict = {}
    for x in T.word.labels:
        classes.setdefault(find(x), []).append(x)
    out = []
    for cls in sorted(classes.values()):
        keep = set(cls)
        word = T.word.restrict(keep)
        arrows = {c: k for c, k in T.arrows if c[0] in keep}
        out.append((tuple(cls), make_rat(word, arrows)))
    return out


def unsplit(parts: Iterable) -> RAT:
    pairs = []
    arrows = {}
    for item in parts:
        P = item[1] if isinstance(item, tuple) else item
        pairs.extend(zip(P.word.labels, P.word.letters))
        arrows.update(P.amap)
    pairs.sort(key=lambda p: p[0])
    word = ShapeWord(tuple(p[1] for p in pairs), tuple(p[0] for p in pairs))
    return make_rat(word, arrows)


def packed_classify(T: RAT) -> str:
    """'horizontal', 'vertical', 'diagonal' or 'not packed'."""
    n = T.word.n
    if n == 0 or len(T.arrows) != n - 1:
        return "not packed"
    r = T.word.r
    if r == 1:
        return "diagonal"
    if r > 1:
        return "not packed"
    rows = T.rows()
    if rows and not any(k == LEFT and c[0] == rows[0] for c, k in T.arrows):
        return "horizontal"
    cols = T.columns()
    if cols and not any(k == UP and c[1] == cols[-1] for c, k in T.arrows):
        return "vertical"
    return "not packed"


# ---------------------------------------------------------------- straighten

def straighten(T: RAT) -> RAT:
    if packed_classify(T) != "diagonal":
        raise TableauError("straighten expects a packed RAT of diagonal type")
    d = T.diagonals()[0]
    letters = tuple(0 if w == 1 else w for w in T.word.letters)
    arrows = {c: k for c, k in T.arrows if c[0] != d}
    return make_rat(ShapeWord(letters, T.word.labels), arrows)


def unstraighten(U: RAT) -> RAT:
    if U.word.r:
        raise TableauError("unstraighten expects an alternative tableau")
    st = compute_stats(U)
    if st.frow:
        raise TableauError("unstraighten expects no free rows")
    if not st.free_cols:
        raise TableauError("no free column")
    C = st.free_cols[0]  # smallest label = rightmost
    if any(k == UP and c[1] == C for c, k in U.arrows):
        raise TableauError("rightmost free column holds an up-arrow")
    letters = tuple(1 if lab == C else w for lab, w in zip(U.word.labels, U.word.letters))
    free = set(st.free_cols)
    arrows = dict(U.amap)
    for j in U.columns():
        if j > C and j in free:
            arrows[(C, j)] = UP
    return make_rat(ShapeWord(letters, U.word.labels), arrows)


# ---------------------------------------------------------------- enumeration

def enumerate_fillings(word: ShapeWord | str, extended: bool = False) -> Iterator[RAT]:
    """All valid fillings of the diagram of ``word``.

    Cells are visited in placement order (southeast first), so every arrow
    that could point at a cell is decided before the cell itself.  With
    ``extended`` only fillings with an up-arrow in every column are kept.
    """
    if isinstance(word, str):
        word = parse_shape_word(word)
    D = build_diagram(word)
    letter = dict(zip(word.labels, word.letters))
    cells = D.order
    ncell = len(cells)
    # last cell (in placement order) of each column, for the extended filter
    last_of_col = {}
    for t, (i, j) in enumerate(cells):
        if letter[j] == 0:
            last_of_col[j] = t
    closes = {}
    for j, t in last_of_col.items():
        closes.setdefault(t, []).append(j)
    if extended:
        if not word.n or word.letters[0] != 1:
            return
        if any(letter[j] == 0 and j not in last_of_col for j in word.labels):
            return
    blocked: set = set()
    has_up: set = set()
    chosen: list = []

    def rec(t):
        if t == ncell:
            yield make_rat(word, chosen)
            return
        i, j = cells[t]
        col_ok = letter[j] == 0
        row_ok = letter[i] == 2
        pointed = (col_ok and j in blocked) or (row_ok and i in blocked)
        opts = [None]
        if not pointed:
            if col_ok:
                opts.append(UP)
            if row_ok:
                opts.append(LEFT)
        for o in opts:
            added = None
            if o == UP:
                chosen.append(((i, j), UP))
                added = j
            elif o == LEFT:
                chosen.append(((i, j), LEFT))
                added = i
            if added is not None:
                blocked.add(added)
            if o == UP:
                has_up.add(j)
            ok = True
            if extended:
                ok = all(c in has_up for c in closes.get(t, ()))
            if ok:
                yield from rec(t + 1)
            if o == UP:
                has_up.discard(j)
            if added is not None:
                blocked.discard(added)
                chosen.pop()

    yield from rec(0)


def words(n: int, r: int, first: int | None = None, alphabet=(0, 1, 2)) -> Iterator[ShapeWord]:
    """Standard-labeled words of length n with r ones."""
    for letters in itertools.product(alphabet, repeat=n):
        if letters.count(1) != r:
            continue
        if first is not None and (not letters or letters[0] != first):
            continue
        yield ShapeWord.standard(letters)


def all_rat(n: int, r: int) -> Iterator[RAT]:
    for w in words(n, r):
        yield from enumerate_fillings(w)


def all_rat_plus(n: int, r: int) -> Iterator[RAT]:
    """RAT+(n, r): words of length n with r ones, starting with 1."""
    for w in words(n, r, first=1):
        yield from enumerate_fillings(w, extended=True)


def all_at_plus(n: int) -> Iterator[RAT]:
    """Extended alternative tableaux of size n (first letter 2, every column has an up)."""
    for letters in itertools.product((0, 2), repeat=n):
        if not letters or letters[0] != 2:
            continue
        w = ShapeWord.standard(letters)
        for T in enumerate_fillings(w):
            ups = {c[1] for c, k in T.arrows if k == UP}
            if all(c in ups for c in T.columns()):
                yield T
