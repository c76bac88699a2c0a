"""Justified standard tableaux and their promotion-type operator algebra.

Shapes are partitions drawn with rows flush right ("right"), staggered one
step per row ("half-right"), or right-justified with an inner partition
removed ("skew-right").  Cells are absolute ``(row, column)`` pairs with
row 1 at the top, and a standard filling is strictly increasing along rows
and along absolute columns.

The operators here are all right actions: ``t.fg`` means apply ``f`` first.
``tau(t, i)`` swaps the entries ``i`` and ``i+1`` when the result is again
standard; partial promotion ``d_k = tau_k ... tau_{N-1}`` and partial
inverse promotion ``d*_k = tau_{k-1} ... tau_1`` compose into the hook
bijections ``phi`` and ``psi``.  Full promotion is also implemented by
jeu-de-taquin sliding, which doubles as an independent cross-check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DisconnectedShapeError,
    NotABraidHookError,
    ShapeConditionError,
)

__all__ = [
    "Shape",
    "Tableau",
    "SlidingPath",
    "Crossing",
    "standard_tableaux",
    "random_standard_tableau",
    "braid_hooks",
    "tau",
    "apply_taus",
    "partial_promotion",
    "partial_inverse_promotion",
    "promotion",
    "inverse_promotion",
    "promotion_via_taus",
    "inverse_promotion_via_taus",
    "promotion_path",
    "inverse_promotion_path",
    "crossings",
    "phi",
    "phi_inverse",
    "psi",
    "evacuation",
    "dual_evacuation",
    "conjugate",
    "staircase_pair",
    "partial_braid_hooks",
    "expected_braid_hooks",
    "updown_crossing_balance",
    "tableau_to_text",
    "tableau_to_json",
    "tableau_from_json",
]


def _check_partition(parts: Sequence[int], strict: bool = False) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if not parts or any(p <= 0 for p in parts):
        raise ShapeConditionError(f"{parts} is not a partition with positive parts")
    for a, b in zip(parts, parts[1:]):
        if b > a or (strict and b >= a):
            kind = "strictly" if strict else "weakly"
            raise ShapeConditionError(f"{parts} is not {kind} decreasing")
    return parts


class Shape:
    """A finite cell set in one of the justification modes.

    ``right``/``skew-right`` anchor every row's rightmost cell at column
    ``outer[0]`` (skew removes the leftmost ``inner[r]`` cells of row r+1);
    ``half-right`` anchors row r's rightmost cell at column ``outer[0]-r+1``.
    ``cells`` mode carries an explicit cell set (conjugated shapes).
    """

    __slots__ = ("mode", "outer", "inner", "cells", "cell_set", "_rows", "_diags")

    def __init__(self, mode: str, cells: Iterable[tuple[int, int]],
                 outer: tuple[int, ...] | None = None,
                 inner: tuple[int, ...] | None = None):
        self.mode = mode
        self.cells = tuple(sorted(cells))
        self.cell_set = frozenset(self.cells)
        if not self.cells:
            raise ShapeConditionError("shape has no cells")
        if len(self.cell_set) != len(self.cells):
            raise ShapeConditionError("duplicate cells")
        self.outer = outer
        self.inner = inner
        rows: dict[int, list[int]] = {}
        for r, c in self.cells:
            rows.setdefault(r, []).append(c)
        self._rows = {r: tuple(sorted(cs)) for r, cs in rows.items()}
        self._diags = None

    @classmethod
    def right(cls, outer: Sequence[int]) -> "Shape":
        outer = _check_partition(outer)
        width = outer[0]
        cells = [
            (r + 1, c)
            for r, length in enumerate(outer)
            for c in range(width - length + 1, width + 1)
        ]
        return cls("right", cells, outer=outer)

    @classmethod
    def half_right(cls, outer: Sequence[int]) -> "Shape":
        outer = _check_partition(outer, strict=True)
        width = outer[0]
        cells = []
        for r, length in enumerate(outer):
            edge = width - r
            cells.extend((r + 1, c) for c in range(edge - length + 1, edge + 1))
        return cls("half-right", cells, outer=outer)

    @classmethod
    def skew_right(cls, outer: Sequence[int], inner: Sequence[int] = ()) -> "Shape":
        outer = _check_partition(outer)
        inner = tuple(int(p) for p in inner)
        if inner and any(b > a for a, b in zip(inner, inner[1:])):
            raise ShapeConditionError(f"inner {inner} is not weakly decreasing")
        inner = inner + (0,) * (len(outer) - len(inner))
        if len(inner) > len(outer) or any(m > l for l, m in zip(outer, inner)):
            raise ShapeConditionError(f"inner {inner} not contained in {outer}")
        width = outer[0]
        cells = []
        for r, (length, cut) in enumerate(zip(outer, inner)):
            cells.extend(
                (r + 1, c) for c in range(width - length + 1, width - cut + 1)
            )
        return cls("skew-right", cells, outer=outer, inner=inner)

    @classmethod
    def from_cells(cls, cells: Iterable[tuple[int, int]]) -> "Shape":
        return cls("cells", cells)

    @property
    def size(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: tuple[int, int]) -> bool:
        return cell in self.cell_set

    def __eq__(self, other) -> bool:
        return isinstance(other, Shape) and self.cell_set == other.cell_set

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        if self.mode == "cells":
            return f"Shape.from_cells({list(self.cells)!r})"
        if self.mode == "skew-right":
            return f"Shape.skew_right({self.outer!r}, {self.inner!r})"
        name = self.mode.replace("-", "_")
        return f"Shape.{name}({self.outer!r})"

    def row_columns(self) -> dict[int, tuple[int, ...]]:
        return self._rows

    def diagonals(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """Cells grouped by the diagonal index c - r + 1, top-down per group."""
        if self._diags is None:
            groups: dict[int, list[tuple[int, int]]] = {}
            for r, c in self.cells:
                groups.setdefault(c - r + 1, []).append((r, c))
            self._diags = {d: tuple(sorted(g)) for d, g in groups.items()}
        return self._diags

    def is_connected(self) -> bool:
        """Consecutive rows must share at least one vertical cell edge."""
        rows = sorted(self._rows)
        if rows != list(range(rows[0], rows[-1] + 1)):
            return False
        for r in rows[:-1]:
            here = set(self._rows[r])
            below = set(self._rows[r + 1])
            if not here & below:
                return False
        return True


def _is_standard(shape: Shape, pos: tuple[tuple[int, int], ...]) -> bool:
    if set(pos) != shape.cell_set or len(pos) != shape.size:
        return False
    entry = {cell: v + 1 for v, cell in enumerate(pos)}
    for (r, c), v in entry.items():
        right = entry.get((r, c + 1))
        if right is not None and right < v:
            return False
        below = entry.get((r + 1, c))
        if below is not None and below < v:
            return False
    return True


class Tableau:
    """A standard filling of a shape; ``pos[v-1]`` is the cell holding v."""

    __slots__ = ("shape", "pos", "_entries")

    def __init__(self, shape: Shape, pos: Iterable[tuple[int, int]],
                 _checked: bool = False):
        self.shape = shape
        self.pos = tuple(pos)
        self._entries = None
        if not _checked and not _is_standard(shape, self.pos):
            raise ValueError(f"filling {self.pos} is not standard on {shape!r}")

    @property
    def size(self) -> int:
        return len(self.pos)

    def entries(self) -> dict[tuple[int, int], int]:
        if self._entries is None:
            self._entries = {cell: v + 1 for v, cell in enumerate(self.pos)}
        return self._entries

    def entry(self, cell: tuple[int, int]) -> int:
        return self.entries()[cell]

    def cell_of(self, value: int) -> tuple[int, int]:
        return self.pos[value - 1]

    def row_values(self) -> list[list[int]]:
        entry = self.entries()
        return [
            [entry[(r, c)] for c in cols]
            for r, cols in sorted(self.shape.row_columns().items())
        ]

    def tau(self, i: int) -> "Tableau":
        return tau(self, i)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tableau)
            and self.pos == other.pos
            and self.shape.cell_set == other.shape.cell_set
        )

    def __hash__(self) -> int:
        return hash(self.pos)

    def __lt__(self, other: "Tableau") -> bool:
        return self._row_word() < other._row_word()

    def _row_word(self) -> tuple[int, ...]:
        entry = self.entries()
        return tuple(entry[cell] for cell in self.shape.cells)

    def __repr__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.row_values())


def standard_tableaux(shape: Shape) -> list[Tableau]:
    """All standard fillings, sorted lexicographically by row-reading word."""
    cells = shape.cells
    cell_set = shape.cell_set
    n = len(cells)
    prereq = {
        cell: tuple(
            nb
            for nb in ((cell[0], cell[1] - 1), (cell[0] - 1, cell[1]))
            if nb in cell_set
        )
        for cell in cells
    }
    filled: set[tuple[int, int]] = set()
    pos: list[tuple[int, int]] = []
    out: list[Tableau] = []

    def place():
        if len(pos) == n:
            out.append(Tableau(shape, tuple(pos), _checked=True))
            return
        for cell in cells:
            if cell in filled:
                continue
            if all(p in filled for p in prereq[cell]):
                filled.add(cell)
                pos.append(cell)
                place()
                pos.pop()
                filled.remove(cell)

    place()
    out.sort()
    return out


def random_standard_tableau(shape: Shape, rng) -> Tableau:
    """A standard filling sampled by choosing a random addable cell each step."""
    cell_set = shape.cell_set
    prereq = {
        cell: tuple(
            nb
            for nb in ((cell[0], cell[1] - 1), (cell[0] - 1, cell[1]))
            if nb in cell_set
        )
        for cell in shape.cells
    }
    filled: set[tuple[int, int]] = set()
    pos: list[tuple[int, int]] = []
    while len(pos) < shape.size:
        addable = [
            cell
            for cell in shape.cells
            if cell not in filled and all(p in filled for p in prereq[cell])
        ]
        cell = rng.choice(addable)
        filled.add(cell)
        pos.append(cell)
    return Tableau(shape, tuple(pos), _checked=True)


def braid_hooks(t: Tableau) -> list[int]:
    """All k with k-1 left of k, k+1 below k, and no cell below k-1."""
    hooks = []
    shape = t.shape
    for k in range(2, t.size):
        r, c = t.pos[k - 2]
        if t.pos[k - 1] == (r, c + 1) and t.pos[k] == (r + 1, c + 1):
            if (r + 1, c) not in shape:
                hooks.append(k)
    return hooks


def tau(t: Tableau, i: int) -> Tableau:
    """Swap entries i and i+1 when they share neither row nor column."""
    if not 1 <= i < t.size:
        raise IndexError(f"tau index {i} outside 1..{t.size - 1}")
    a = t.pos[i - 1]
    b = t.pos[i]
    if a[0] == b[0] or a[1] == b[1]:
        return t
    pos = list(t.pos)
    pos[i - 1], pos[i] = b, a
    return Tableau(t.shape, tuple(pos), _checked=True)


def apply_taus(t: Tableau, indices: Iterable[int]) -> Tableau:
    """Apply a whole tau word in one pass (right action, left factor first)."""
    pos = list(t.pos)
    for i in indices:
        a = pos[i - 1]
        b = pos[i]
        if a[0] != b[0] and a[1] != b[1]:
            pos[i - 1], pos[i] = b, a
    return Tableau(t.shape, tuple(pos), _checked=True)


def partial_promotion(t: Tableau, k: int) -> Tableau:
    """d_k = tau_k tau_{k+1} ... tau_{N-1}; k = N is the identity."""
    if not 1 <= k <= t.size:
        raise IndexError(f"k {k} outside 1..{t.size}")
    return apply_taus(t, range(k, t.size))


def partial_inverse_promotion(t: Tableau, k: int) -> Tableau:
    """d*_k = tau_{k-1} tau_{k-2} ... tau_1; k = 1 is the identity."""
    if not 1 <= k <= t.size:
        raise IndexError(f"k {k} outside 1..{t.size}")
    return apply_taus(t, range(k - 1, 0, -1))


def promotion_via_taus(t: Tableau) -> Tableau:
    return partial_promotion(t, 1)


def inverse_promotion_via_taus(t: Tableau) -> Tableau:
    return partial_inverse_promotion(t, t.size)


def _slide_forward(t: Tableau) -> tuple[Tableau, tuple[tuple[int, int], ...]]:
    """Remove 1, slide the smaller of right/lower neighbours, append N+1."""
    n = t.size
    grid = dict(zip(t.pos, range(1, n + 1)))
    empty = t.pos[0]
    path = [empty]
    del grid[empty]
    while True:
        r, c = empty
        candidates = [
            (grid[cell], cell)
            for cell in ((r, c + 1), (r + 1, c))
            if cell in grid
        ]
        if not candidates:
            break
        value, cell = min(candidates)
        grid[empty] = value
        del grid[cell]
        empty = cell
        path.append(empty)
    grid[empty] = n + 1
    pos: list[tuple[int, int] | None] = [None] * n
    for cell, value in grid.items():
        pos[value - 2] = cell
    return Tableau(t.shape, tuple(pos), _checked=True), tuple(path)


def _slide_backward(t: Tableau) -> tuple[Tableau, tuple[tuple[int, int], ...]]:
    """Remove N, slide the larger of left/upper neighbours, prepend 1."""
    n = t.size
    grid = dict(zip(t.pos, range(1, n + 1)))
    empty = t.pos[n - 1]
    path = [empty]
    del grid[empty]
    while True:
        r, c = empty
        candidates = [
            (grid[cell], cell)
            for cell in ((r, c - 1), (r - 1, c))
            if cell in grid
        ]
        if not candidates:
            break
        value, cell = max(candidates)
        grid[empty] = value
        del grid[cell]
        empty = cell
        path.append(empty)
    grid[empty] = 0
    pos: list[tuple[int, int] | None] = [None] * n
    for cell, value in grid.items():
        pos[value] = cell
    return Tableau(t.shape, tuple(pos), _checked=True), tuple(reversed(path))


def promotion(t: Tableau) -> Tableau:
    """Full promotion by jeu-de-taquin sliding."""
    return _slide_forward(t)[0]


def inverse_promotion(t: Tableau) -> Tableau:
    """Full inverse promotion by jeu-de-taquin sliding."""
    return _slide_backward(t)[0]


@dataclass(frozen=True)
class SlidingPath:
    """An undirected lattice path of cells, stored top-left to bottom-right."""

    cells: tuple[tuple[int, int], ...]
    kind: str  # "promotion" | "inverse-promotion"

    def steps(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return list(zip(self.cells, self.cells[1:]))

    def horizontal_steps(self) -> frozenset:
        return frozenset(s for s in self.steps() if s[0][0] == s[1][0])

    def vertical_steps(self) -> frozenset:
        return frozenset(s for s in self.steps() if s[0][1] == s[1][1])


def promotion_path(t: Tableau) -> SlidingPath:
    """Cells visited by the empty slot during promotion, from the cell of 1."""
    return SlidingPath(_slide_forward(t)[1], "promotion")


def inverse_promotion_path(t: Tableau) -> SlidingPath:
    """Cells visited during inverse promotion, reordered top-left first."""
    return SlidingPath(_slide_backward(t)[1], "inverse-promotion")


@dataclass(frozen=True)
class Crossing:
    """A path crossing.  RtoL swaps (R above L) to (L above R); LtoR the reverse."""

    position: tuple[int, int]
    k: int
    direction: str  # "RtoL" | "LtoR"


def crossings(t: Tableau) -> list[Crossing]:
    """All crossings of the promotion and inverse promotion paths.

    A crossing in the usual direction sits at a left inner corner: the
    promotion path steps right into the corner cell, the inverse path steps
    down out of it, and the cell below the step's origin is missing.  The
    reverse crossing (possible only on jagged skew boundaries) is the mirror
    with the cell above-right missing.
    """
    shape = t.shape
    left = promotion_path(t)
    right = inverse_promotion_path(t)
    right_h = right.horizontal_steps()
    right_v = right.vertical_steps()
    found = []
    for (a, b) in left.steps():
        if a[0] == b[0]:  # horizontal step a -> b of L
            below_b = (b[0] + 1, b[1])
            if (b, below_b) in right_v and (a[0] + 1, a[1]) not in shape:
                found.append(Crossing(b, t.entry(b), "RtoL"))
        else:  # vertical step a -> b of L
            right_of_b = (b[0], b[1] + 1)
            if (b, right_of_b) in right_h and (a[0], a[1] + 1) not in shape:
                found.append(Crossing(b, t.entry(b), "LtoR"))
    found.sort(key=lambda cr: cr.position)
    return found


def phi(k: int, t: Tableau) -> Tableau:
    """The hook bijection phi(k, t) = t.d*_k d_k for a braid hook k of t."""
    if k not in braid_hooks(t):
        raise NotABraidHookError(f"{k} is not a braid hook of\n{t!r}")
    return partial_promotion(partial_inverse_promotion(t, k), k)


def _require_pointed_right(shape: Shape) -> None:
    if shape.mode != "right" or shape.outer is None:
        raise ShapeConditionError("operation needs a right-justified shape")
    outer = shape.outer
    second = outer[1] if len(outer) > 1 else 0
    if not (len(outer) >= 2 and outer[0] > second and outer[-1] == 1):
        raise ShapeConditionError(
            f"shape {outer} needs two or more rows, a strictly longer first row,"
            " and a final row of one cell"
        )


def phi_inverse(t: Tableau) -> tuple[int, Tableau]:
    """Recover (k, t') with phi(k, t') = t via the unique path crossing."""
    _require_pointed_right(t.shape)
    found = crossings(t)
    if len(found) != 1 or found[0].direction != "RtoL":
        raise ValueError(f"expected a unique crossing, found {found}")
    k = found[0].k
    n = t.size
    undone = apply_taus(t, range(n - 1, k - 1, -1))  # d_k inverse
    undone = apply_taus(undone, range(1, k))  # d*_k inverse
    if k not in braid_hooks(undone):
        raise AssertionError(f"crossing k={k} did not unwind to a braid hook")
    return k, undone


def psi(k: int, t: Tableau) -> Tableau:
    """Same operator as phi, on half-right-justified tableaux."""
    if k not in braid_hooks(t):
        raise NotABraidHookError(f"{k} is not a braid hook of\n{t!r}")
    return partial_promotion(partial_inverse_promotion(t, k), k)


def evacuation(t: Tableau) -> Tableau:
    """(tau_1..tau_{N-1})(tau_1..tau_{N-2})...(tau_1), left factor first."""
    seq: list[int] = []
    for top in range(t.size - 1, 0, -1):
        seq.extend(range(1, top + 1))
    return apply_taus(t, seq)


def dual_evacuation(t: Tableau) -> Tableau:
    """(tau_{N-1}..tau_1)(tau_{N-1}..tau_2)...(tau_{N-1}), left factor first."""
    seq: list[int] = []
    for low in range(1, t.size):
        seq.extend(range(t.size - 1, low - 1, -1))
    return apply_taus(t, seq)


def conjugate(t: Tableau) -> Tableau:
    """Reflect in the bottom-left/top-right diagonal and reverse the entries.

    The image is re-anchored so its smallest row and column are 1.
    """
    reflected = [(-c, -r) for (r, c) in t.pos]
    min_r = min(r for r, _ in reflected)
    min_c = min(c for _, c in reflected)
    moved = [(r - min_r + 1, c - min_c + 1) for (r, c) in reflected]
    shape = Shape.from_cells(moved)
    pos = tuple(reversed(moved))
    return Tableau(shape, pos, _checked=True)


def staircase_pair(t: Tableau) -> Tableau:
    """Adjoin (t.evacuation) conjugated and shifted by N to the right of t.

    The top cell of the conjugate lands immediately right of the rightmost
    cell of t's first row; the union is a right-justified standard tableau.
    """
    n = t.size
    partner = conjugate(evacuation(t))
    top_row = min(r for r, _ in t.pos)
    anchor_col = max(c for r, c in t.pos if r == top_row)
    top_cell = min(partner.shape.cells)  # unique cell in the top row
    dr = top_row - top_cell[0]
    dc = anchor_col + 1 - top_cell[1]
    shifted = [(r + dr, c + dc) for (r, c) in partner.pos]
    if set(shifted) & set(t.pos):
        raise ShapeConditionError("staircase pair parts overlap")
    pos = t.pos + tuple(shifted)
    union = sorted(set(pos))
    rows: dict[int, list[int]] = {}
    for r, c in union:
        rows.setdefault(r, []).append(c)
    width = max(c for _, c in union)
    outer = []
    for r in sorted(rows):
        cols = sorted(rows[r])
        if cols != list(range(cols[0], width + 1)):
            raise ShapeConditionError("staircase pair is not right-justified")
        outer.append(len(cols))
    shape = Shape.right(tuple(outer))
    return Tableau(shape, pos)


def partial_braid_hooks(t: Tableau, side: str) -> list[int]:
    """Inner corners with consecutive values on the promotion (left) or
    inverse promotion (right) path; the source cell has no cell below."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    path = promotion_path(t) if side == "left" else inverse_promotion_path(t)
    cells = path.cells
    shape = t.shape
    hooks = []
    for a, b, d in zip(cells, cells[1:], cells[2:]):
        if b != (a[0], a[1] + 1) or d != (b[0] + 1, b[1]):
            continue  # need a right step then a down step
        if (a[0] + 1, a[1]) in shape:
            continue
        if side == "left" and t.entry(d) == t.entry(b) + 1:
            hooks.append(t.entry(b))
        elif side == "right" and t.entry(b) == t.entry(a) + 1:
            hooks.append(t.entry(b))
    return sorted(hooks)


def expected_braid_hooks(shape: Shape) -> Fraction:
    """Exact average of the braid-hook count over all standard fillings."""
    tableaux = standard_tableaux(shape)
    total = sum(len(braid_hooks(t)) for t in tableaux)
    return Fraction(total, len(tableaux))


def updown_crossing_balance(shape: Shape) -> dict:
    """Per-tableau difference of RtoL minus LtoR crossings on a skew shape."""
    if shape.mode != "skew-right":
        raise ShapeConditionError("crossing balance is defined for skew-right shapes")
    outer = shape.outer
    second = outer[1] if len(outer) > 1 else 0
    if not (outer[0] > second and outer[-1] == 1):
        raise ShapeConditionError(
            f"shape {outer} needs a strictly longer first row and a final row of one cell"
        )
    if len(shape.row_columns()) != len(outer):
        raise ShapeConditionError("inner partition removes a whole row")
    if not shape.is_connected():
        raise DisconnectedShapeError(f"skew shape {outer}/{shape.inner} is disconnected")
    diffs = []
    for t in standard_tableaux(shape):
        found = crossings(t)
        up = sum(1 for cr in found if cr.direction == "RtoL")
        down = sum(1 for cr in found if cr.direction == "LtoR")
        diffs.append(up - down)
    return {"diffs": diffs, "all_diffs_one": all(d == 1 for d in diffs)}


def tableau_to_text(t: Tableau) -> str:
    """One row per line; absent cells inside a row's span print as dots."""
    entry = t.entries()
    lines = []
    for r, cols in sorted(t.shape.row_columns().items()):
        tokens = []
        for c in range(1, max(cols) + 1):
            if (r, c) in t.shape.cell_set:
                tokens.append(str(entry[(r, c)]))
            else:
                tokens.append(".")
        lines.append(" ".join(tokens))
    return "\n".join(lines)


def tableau_to_json(t: Tableau) -> str:
    shape = t.shape
    desc: dict = {"mode": shape.mode}
    if shape.mode == "cells":
        desc["cells"] = [list(cell) for cell in shape.cells]
    else:
        desc["outer"] = list(shape.outer)
        desc["inner"] = list(shape.inner) if shape.inner else None
    return json.dumps({"shape": desc, "rows": t.row_values()})


def tableau_from_json(text: str) -> Tableau:
    data = json.loads(text)
    desc = data["shape"]
    mode = desc["mode"]
    if mode == "right":
        shape = Shape.right(desc["outer"])
    elif mode == "half-right":
        shape = Shape.half_right(desc["outer"])
    elif mode == "skew-right":
        shape = Shape.skew_right(desc["outer"], desc.get("inner") or ())
    elif mode == "cells":
        shape = Shape.from_cells(tuple(map(tuple, desc["cells"])))
    else:
        raise ValueError(f"unknown shape mode {mode!r}")
    entry: dict[tuple[int, int], int] = {}
    for row, (r, cols) in zip(data["rows"], sorted(shape.row_columns().items())):
        for value, c in zip(row, cols):
            entry[(r, c)] = value
    pos = [cell for cell, _ in sorted(entry.items(), key=lambda kv: kv[1])]
    return Tableau(shape, tuple(pos))
