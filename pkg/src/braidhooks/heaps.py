"""Heaps of pieces: the poset of a word and its rotation onto tableaux.

Dropping a piece for each letter, rightmost letter first, builds a poset
whose linear extensions are the commutation class of the word.  Rotating
the heap by 45 degrees matches it with a justified shape: the piece in
column c at stack position p corresponds to the p-th cell (top-down) of
the shape's diagonal c, and the drop order becomes a standard filling.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import QuadraticRuleError, ShapeMismatchError
from .tableaux import Shape, Tableau
from .words import Word, make_word

__all__ = [
    "HeapPoset",
    "LinearExtensionLabel",
    "heap_poset",
    "build_order_extension",
    "shape_poset",
    "nu",
    "nu_inverse",
    "heap_to_json",
]


@dataclass(frozen=True)
class HeapPoset:
    """Heap elements in canonical (column, stack position) order.

    ``columns[i]`` and ``positions[i]`` locate element i; ``covers`` holds
    the transitively reduced relation as (lower, upper) index pairs.  Two
    heaps are isomorphic (as marked posets) exactly when they are equal.
    """

    columns: tuple[int, ...]
    positions: tuple[int, ...]
    covers: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.columns)


@dataclass(frozen=True)
class LinearExtensionLabel:
    """Labels 1..m on the canonical elements of a heap poset."""

    labels: tuple[int, ...]


def _drop(word: Word) -> tuple[list[tuple[int, int]], list[int]]:
    """Simulate the drops; return (column, height) per element in drop order,
    plus each element's stack position within its column."""
    tops: dict[int, int] = {}
    counts: dict[int, int] = {}
    placed: list[tuple[int, int]] = []
    positions: list[int] = []
    for letter in reversed(word.letters):
        own = tops.get(letter, 0)
        adjacent = max(tops.get(letter - 1, 0), tops.get(letter + 1, 0))
        if own > adjacent:
            # the piece would rest directly on its own column: some word in
            # the commutation class contains the factor `a a`
            raise QuadraticRuleError(
                f"letter {letter} stacks on itself; class violates the quadratic rule"
            )
        height = max(own, adjacent) + 1
        tops[letter] = height
        counts[letter] = counts.get(letter, 0) + 1
        placed.append((letter, height))
        positions.append(counts[letter])
    return placed, positions


def _reduce_covers(n: int, relations: set[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    """Transitive reduction of an acyclic relation given as index pairs."""
    above: dict[int, set[int]] = {i: set() for i in range(n)}
    for lo, hi in relations:
        above[lo].add(hi)
    reach: dict[int, set[int]] = {}

    def reachable(i: int) -> set[int]:
        if i not in reach:
            acc: set[int] = set()
            for j in above[i]:
                acc.add(j)
                acc |= reachable(j)
            reach[i] = acc
        return reach[i]

    reduced = set()
    for lo, hi in relations:
        if not any(hi in reachable(mid) for mid in above[lo] if mid != hi):
            reduced.add((lo, hi))
    return frozenset(reduced)


def heap_poset(word: Word) -> HeapPoset:
    """The heap of a word, with covers between adjacent columns only."""
    placed, positions = _drop(word)
    order = sorted(range(len(placed)), key=lambda i: (placed[i][0], positions[i]))
    rank_of = {drop_idx: canon for canon, drop_idx in enumerate(order)}
    columns = tuple(placed[i][0] for i in order)
    stack_pos = tuple(positions[i] for i in order)
    by_column: dict[int, list[tuple[int, int]]] = {}
    for drop_idx, (col, height) in enumerate(placed):
        by_column.setdefault(col, []).append((height, drop_idx))
    for stack in by_column.values():
        stack.sort()
    relations: set[tuple[int, int]] = set()
    for drop_idx, (col, height) in enumerate(placed):
        for adj in (col - 1, col + 1):
            for other_height, other_idx in by_column.get(adj, ()):
                if other_height > height:
                    relations.add((rank_of[drop_idx], rank_of[other_idx]))
                    break
    return HeapPoset(columns, stack_pos, _reduce_covers(len(placed), relations))


def build_order_extension(word: Word) -> LinearExtensionLabel:
    """Label each canonical heap element with its drop step (1 = rightmost)."""
    placed, positions = _drop(word)
    order = sorted(range(len(placed)), key=lambda i: (placed[i][0], positions[i]))
    return LinearExtensionLabel(tuple(drop_idx + 1 for drop_idx in order))


def _diagonal_layout(shape: Shape) -> tuple[list[tuple[int, int]], list[int], list[int]]:
    """Cells in canonical (normalised diagonal, row) order with columns/positions."""
    diagonals = shape.diagonals()
    shift = 1 - min(diagonals)
    cells: list[tuple[int, int]] = []
    columns: list[int] = []
    positions: list[int] = []
    for d in sorted(diagonals):
        for p, cell in enumerate(diagonals[d], start=1):
            cells.append(cell)
            columns.append(d + shift)
            positions.append(p)
    return cells, columns, positions


def shape_poset(shape: Shape) -> HeapPoset:
    """The cell poset of a shape: each cell below its right and lower neighbour."""
    cells, columns, positions = _diagonal_layout(shape)
    index = {cell: i for i, cell in enumerate(cells)}
    covers = set()
    for cell, i in index.items():
        r, c = cell
        for nb in ((r, c + 1), (r + 1, c)):
            if nb in shape.cell_set:
                covers.add((i, index[nb]))
    return HeapPoset(tuple(columns), tuple(positions), frozenset(covers))


def nu(word: Word, shape: Shape) -> Tableau:
    """Transport the build order of the word's heap onto the shape's cells."""
    heap = heap_poset(word)
    target = shape_poset(shape)
    if heap != target:
        raise ShapeMismatchError(
            f"heap of {word} is not isomorphic to the poset of {shape!r}"
        )
    cells, _, _ = _diagonal_layout(shape)
    labels = build_order_extension(word).labels
    pos: list[tuple[int, int] | None] = [None] * shape.size
    for cell, label in zip(cells, labels):
        pos[label - 1] = cell
    return Tableau(shape, tuple(pos))


def nu_inverse(t: Tableau) -> Word:
    """Read the word back: letter p from the left is the (normalised) diagonal
    of the cell holding N+1-p."""
    shift = 1 - min(t.shape.diagonals())
    letters = tuple(c - r + 1 + shift for (r, c) in reversed(t.pos))
    rank = max(letters) + 1
    return make_word(letters, rank)


def heap_to_json(poset: HeapPoset) -> str:
    return json.dumps(
        {
            "elements": [
                {"id": i, "column": col} for i, col in enumerate(poset.columns)
            ],
            "covers": sorted([lo, hi] for lo, hi in poset.covers),
        }
    )
