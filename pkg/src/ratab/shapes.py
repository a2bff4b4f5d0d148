"""Shape words, rhombic diagrams with the maximal tiling, and strips.

A shape word is read from the northeast end of the southeast border:
letter 2 is a south step, 1 a southwest step and 0 a west step.
Tiles are placed by repeatedly swapping the leftmost adjacent descent,
so every tile knows the two strips it belongs to.  Coordinates are kept
doubled so that side midpoints stay integral.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence, Union

__all__ = [
    "Eps",
    "Label",
    "parse_label",
    "format_label",
    "ShapeError",
    "ShapeWord",
    "parse_shape_word",
    "TileKind",
    "Tile",
    "RhombicDiagram",
    "build_diagram",
    "strip_cells",
    "cell_at",
    "STEP",
]


class ShapeError(ValueError):
    """Malformed shape word or label list."""


@functools.total_ordering
class Eps:
    """Symbolic label below every positive integer; ``Eps(j) < Eps(k)`` iff ``j < k``."""

    __slots__ = ("k",)

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("Eps index must be positive")
        self.k = k

    def __eq__(self, other):
        return isinstance(other, Eps) and other.k == self.k

    def __lt__(self, other):
        if isinstance(other, Eps):
            return self.k < other.k
        if isinstance(other, int):
            return True
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, Eps):
            return self.k > other.k
        if isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self):
        return hash(("eps", self.k))

    def __repr__(self):
        return f"e{self.k}"

    __str__ = __repr__


# Integers stand for ordinary labels; mixing with Eps is safe for <, >, sorting.
Label = Union[int, Eps]


def parse_label(token: str) -> Label:
    token = token.strip()
    m = re.fullmatch(r"[eε](\d+)", token)
    if m:
        return Eps(int(m.group(1)))
    if re.fullmatch(r"-?\d+", token):
        return int(token)
    raise ShapeError(f"bad label {token!r}")


def format_label(label: Label) -> str:
    return str(label)


# step vectors (dx, dy) in unit coordinates
STEP = {2: (0, -1), 1: (-1, -1), 0: (-1, 0)}


@dataclass(frozen=True)
class ShapeWord:
    letters: tuple[int, ...]
    labels: tuple[Label, ...]

    def __post_init__(self):
        if len(self.letters) != len(self.labels):
            raise ShapeError("letters and labels differ in length")
        if any(x not in (0, 1, 2) for x in self.letters):
            raise ShapeError("letters must be 0, 1 or 2")
        if any(not a < b for a, b in zip(self.labels, self.labels[1:])):
            raise ShapeError("labels must be strictly increasing")

    @classmethod
    def standard(cls, letters: Iterable[int]) -> "ShapeWord":
        letters = tuple(letters)
        return cls(letters, tuple(range(1, len(letters) + 1)))

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def counts(self) -> tuple[int, int, int]:
        """(#0, #1, #2)."""
        return tuple(self.letters.count(x) for x in (0, 1, 2))  # type: ignore[return-value]

    @property
    def r(self) -> int:
        return self.letters.count(1)

    def letter(self, label: Label) -> int:
        return self.letters[self.labels.index(label)]

    def text(self) -> str:
        return "".join(map(str, self.letters))

    def is_standard(self) -> bool:
        return self.labels == tuple(range(1, self.n + 1))

    def restrict(self, keep: Iterable[Label]) -> "ShapeWord":
        keep = set(keep)
        pairs = [(w, lab) for w, lab in zip(self.letters, self.labels) if lab in keep]
        return ShapeWord(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


def parse_shape_word(text: str, labels: Sequence[Label] | None = None) -> ShapeWord:
    text = text.strip()
    if not re.fullmatch(r"[012]*", text):
        raise ShapeError(f"bad character in shape word {text!r}")
    letters = tuple(int(c) for c in text)
    if labels is None:
        return ShapeWord.standard(letters)
    labels = tuple(labels)
    if len(labels) != len(letters):
        raise ShapeError("label count does not match word length")
    return ShapeWord(letters, labels)


class TileKind(Enum):
    SQUARE = "square"
    TALL = "tall"
    SHORT = "short"


KIND_OF_PAIR = {(2, 0): TileKind.SQUARE, (2, 1): TileKind.TALL, (1, 0): TileKind.SHORT}

Point = tuple[int, int]


@dataclass(frozen=True)
class Tile:
    """One tile; ``strips[0]`` crosses it west to east, ``strips[1]`` north to south."""

    kind: TileKind
    strips: tuple[Label, Label]
    # doubled coordinates, ordered NE, E-S corner, SW, NW
    corners: tuple[Point, Point, Point, Point]

    @staticmethod
    def _mid(p: Point, q: Point) -> Point:
        return ((p[0] + q[0]) // 2, (p[1] + q[1]) // 2)

    @property
    def E(self) -> Point:
        return self._mid(self.corners[0], self.corners[1])

    @property
    def S(self) -> Point:
        return self._mid(self.corners[1], self.corners[2])

    @property
    def W(self) -> Point:
        return self._mid(self.corners[3], self.corners[2])

    @property
    def N(self) -> Point:
        return self._mid(self.corners[0], self.corners[3])

    @property
    def anchor(self) -> tuple[int, int]:
        """Lower-left corner in unit coordinates."""
        return (min(p[0] for p in self.corners) // 2, min(p[1] for p in self.corners) // 2)


@dataclass(frozen=True)
class RhombicDiagram:
    word: ShapeWord
    tiles: dict = field(hash=False)
    # label -> cell keys ordered from the NW border towards the SE border
    strip_index: dict = field(hash=False)
    # cell keys in placement order (southeast first)
    order: tuple = field(hash=False)
    se_border: tuple = field(hash=False)
    nw_border: tuple = field(hash=False)

    def position(self, cell, label) -> int:
        return self._positions[(cell, label)]

    @functools.cached_property
    def _positions(self) -> dict:
        out = {}
        for lab, cells in self.strip_index.items():
            for k, c in enumerate(cells):
                out[(c, lab)] = k
        return out


def _border(letters: Sequence[int]) -> list[Point]:
    x = sum(-STEP[w][0] for w in letters)
    y = sum(-STEP[w][1] for w in letters)
    pts = [(2 * x, 2 * y)]
    for w in letters:
        dx, dy = STEP[w]
        x, y = x + dx, y + dy
        pts.append((2 * x, 2 * y))
    return pts


@functools.lru_cache(maxsize=4096)
def build_diagram(word: ShapeWord) -> RhombicDiagram:
    letters = list(word.letters)
    labels = list(word.labels)
    pts = _border(letters)
    se = tuple(pts)
    tiles: dict = {}
    placed: dict = {lab: [] for lab in labels}
    order = []
    while True:
        k = next((t for t in range(len(letters) - 1) if letters[t] > letters[t + 1]), None)
        if k is None:
            break
        i, j = labels[k], labels[k + 1]
        kind = KIND_OF_PAIR[(letters[k], letters[k + 1])]
        p0, p1, p2 = pts[k], pts[k + 1], pts[k + 2]
        dx, dy = STEP[letters[k + 1]]
        q = (p0[0] + 2 * dx, p0[1] + 2 * dy)
        tiles[(i, j)] = Tile(kind, (i, j), (p0, p1, p2, q))
        placed[i].append((i, j))
        placed[j].append((i, j))
        order.append((i, j))
        letters[k], letters[k + 1] = letters[k + 1], letters[k]
        labels[k], labels[k + 1] = labels[k + 1], labels[k]
        pts[k + 1] = q
    strip_index = {lab: tuple(reversed(cells)) for lab, cells in placed.items()}
    return RhombicDiagram(word, tiles, strip_index, tuple(order), se, tuple(pts))


def strip_cells(D: RhombicDiagram, label: Label) -> list[Tile]:
    if label not in D.strip_index:
        raise ShapeError(f"unknown strip {label}")
    return [D.tiles[c] for c in D.strip_index[label]]


def cell_at(D: RhombicDiagram, i: Label, j: Label) -> Tile | None:
    return D.tiles.get((i, j))
