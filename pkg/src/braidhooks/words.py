"""Reduced words in the symmetric group and their commutation classes.

A word is a finite sequence of generator indices; the word ``(1, 2, 1)``
stands for the product ``s1 s2 s1`` of simple transpositions, applied left
to right as right multiplications (``s_i`` swaps positions ``i`` and
``i+1`` in one-line notation).  Two adjacent letters commute when their
indices differ by at least two; a factor ``a (a+1) a`` (an "up" braid) may
be replaced by ``(a+1) a (a+1)`` (a "down" braid) and back.

Words of rank ``n`` live in the symmetric group on ``n`` points, so their
letters lie in ``1..n-1``.  All enumeration here is exact and guarded by a
configurable state cap (``BRAIDHOOKS_CAP`` in the environment).
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    ExplosionGuardError,
    InvalidSiteError,
    LetterRangeError,
    NotReducedError,
    QuadraticRuleError,
)

__all__ = [
    "Word",
    "Permutation",
    "MoveSite",
    "MatsumotoGraph",
    "COMMUTATION",
    "BRAID_UP",
    "BRAID_DOWN",
    "default_cap",
    "make_reduced_word",
    "make_word",
    "word_to_permutation",
    "is_reduced",
    "staircase_word",
    "trapezoid_word",
    "list_moves",
    "apply_move",
    "braid_sites",
    "commutation_class",
    "all_reduced_words",
    "matsumoto_graph",
    "braid_move_stats",
    "word_to_string",
    "word_from_string",
]

COMMUTATION = "comm"
BRAID_UP = "braid-up"
BRAID_DOWN = "braid-down"


def default_cap() -> int:
    """State cap for breadth-first enumerations (env ``BRAIDHOOKS_CAP``)."""
    return int(os.environ.get("BRAIDHOOKS_CAP", 10**8))


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation."""

    images: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def times_s(self, i: int) -> "Permutation":
        """Right-multiply by ``s_i``: swap positions ``i`` and ``i+1``."""
        img = list(self.images)
        img[i - 1], img[i] = img[i], img[i - 1]
        return Permutation(tuple(img))

    def length(self) -> int:
        """Coxeter length = number of inversions."""
        img = self.images
        return sum(
            1
            for a in range(len(img))
            for b in range(a + 1, len(img))
            if img[a] > img[b]
        )

    def descents(self) -> list[int]:
        """Positions ``i`` with ``w(i) > w(i+1)``."""
        img = self.images
        return [i + 1 for i in range(len(img) - 1) if img[i] > img[i + 1]]

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))


@dataclass(frozen=True, order=True)
class Word:
    """An immutable word in the generators of the symmetric group.

    ``letters`` are 1-based generator indices; ``rank`` is the ``n`` of the
    ambient group.  Ordering is lexicographic on the letter sequence, which
    is the canonical ordering used whenever word sets are materialised.
    """

    letters: tuple[int, ...]
    rank: int

    def __post_init__(self):
        for a in self.letters:
            if not 1 <= a <= self.rank - 1:
                raise LetterRangeError(
                    f"letter {a} outside 1..{self.rank - 1} for rank {self.rank}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return word_to_string(self)

    @property
    def size(self) -> int:
        return len(self.letters)

    def tau(self, i: int) -> "Word":
        """Swap the letters at positions ``i`` and ``i+1`` if they commute.

        Positions count from the left.  Under the heap bijection this is the
        entry swap of ``N-i`` and ``N-i+1``, so the odd/even products agree
        with the tableau-side ones up to a parity flip when N is odd.
        """
        n = len(self.letters)
        if not 1 <= i < n:
            raise IndexError(f"tau index {i} outside 1..{n - 1}")
        a, b = self.letters[i - 1], self.letters[i]
        if abs(a - b) < 2:
            return self
        swapped = self.letters[: i - 1] + (b, a) + self.letters[i + 1 :]
        return Word(swapped, self.rank)

    def permutation(self) -> Permutation:
        return word_to_permutation(self.letters, self.rank)


@dataclass(frozen=True)
class MoveSite:
    """A position in a word admitting a commutation or braid move."""

    position: int  # 1-based start index of the factor
    kind: str  # COMMUTATION | BRAID_UP | BRAID_DOWN


def make_reduced_word(letters: Iterable[int], rank: int) -> Word:
    """Build a word and check it is reduced."""
    word = Word(tuple(letters), rank)
    if not is_reduced(word.letters, rank):
        raise NotReducedError(f"word {word.letters} is not reduced in rank {rank}")
    return word


def make_word(letters: Iterable[int], rank: int) -> Word:
    """Build a word without the reducedness check.

    Words with repetition are needed for skew shapes, but a literal factor
    ``a a`` is still rejected (quadratic rule).
    """
    word = Word(tuple(letters), rank)
    for a, b in zip(word.letters, word.letters[1:]):
        if a == b:
            raise QuadraticRuleError(f"factor {a} {b} violates the quadratic rule")
    return word


def word_to_permutation(letters: Iterable[int], rank: int) -> Permutation:
    """Evaluate the word as a product of simple transpositions, left to right."""
    img = list(range(1, rank + 1))
    for a in letters:
        if not 1 <= a <= rank - 1:
            raise LetterRangeError(f"letter {a} outside 1..{rank - 1}")
        img[a - 1], img[a] = img[a], img[a - 1]
    return Permutation(tuple(img))


def is_reduced(letters: Iterable[int], rank: int) -> bool:
    """A word is reduced iff its length equals the length of its permutation."""
    letters = tuple(letters)
    return len(letters) == word_to_permutation(letters, rank).length()


def staircase_word(n: int) -> Word:
    """The canonical reduced word (s1..s_{n-1})(s1..s_{n-2})...(s1 s2)(s1)."""
    if n < 2:
        raise ValueError("staircase word needs rank at least 2")
    letters: list[int] = []
    for top in range(n - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return Word(tuple(letters), n)


def trapezoid_word(n: int) -> Word:
    """A word in rank ``2n+2`` whose heap is the trapezoid (2n+1, 2n-1, ..., 3, 1).

    The descending factors s_i s_{i-2} s_{i-4} ... run over i = 2n+1 down
    to 1, mirroring the staircase word's shrinking factors; this
    orientation makes the heap rotate onto the half-right trapezoid.
    """
    if n < 1:
        raise ValueError("trapezoid word needs n >= 1")
    letters: list[int] = []
    for i in range(2 * n + 1, 0, -1):
        letters.extend(range(i, 0, -2))
    return Word(tuple(letters), 2 * n + 2)


def list_moves(word: Word) -> list[MoveSite]:
    """All commutation and braid move sites of a word, by start position."""
    w = word.letters
    sites = []
    for p in range(len(w) - 1):
        if abs(w[p] - w[p + 1]) > 1:
            sites.append(MoveSite(p + 1, COMMUTATION))
    for p in range(len(w) - 2):
        if w[p] == w[p + 2]:
            if w[p + 1] == w[p] + 1:
                sites.append(MoveSite(p + 1, BRAID_UP))
            elif w[p + 1] == w[p] - 1:
                sites.append(MoveSite(p + 1, BRAID_DOWN))
    sites.sort(key=lambda s: (s.position, s.kind))
    return sites


def apply_move(word: Word, site: MoveSite) -> Word:
    """Apply a commutation or braid move at the given site."""
    w = list(word.letters)
    p = site.position - 1
    if site.kind == COMMUTATION:
        if p < 0 or p + 1 >= len(w) or abs(w[p] - w[p + 1]) <= 1:
            raise InvalidSiteError(f"no commutation at position {site.position}")
        w[p], w[p + 1] = w[p + 1], w[p]
    elif site.kind in (BRAID_UP, BRAID_DOWN):
        delta = 1 if site.kind == BRAID_UP else -1
        if (
            p < 0
            or p + 2 >= len(w)
            or w[p] != w[p + 2]
            or w[p + 1] != w[p] + delta
        ):
            raise InvalidSiteError(f"no {site.kind} move at position {site.position}")
        a, b = w[p], w[p + 1]
        w[p], w[p + 1], w[p + 2] = b, a, b
    else:
        raise InvalidSiteError(f"unknown move kind {site.kind!r}")
    return Word(tuple(w), word.rank)


def braid_sites(word: Word) -> tuple[int, int]:
    """Counts of (up, down) braid factors in the word."""
    up = down = 0
    for site in list_moves(word):
        if site.kind == BRAID_UP:
            up += 1
        elif site.kind == BRAID_DOWN:
            down += 1
    return up, down


def _bfs_closure(start: Word, kinds: tuple[str, ...], cap: int) -> list[Word]:
    seen = {start}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        for site in list_moves(word):
            if site.kind not in kinds:
                continue
            neighbour = apply_move(word, site)
            if neighbour not in seen:
                if len(seen) >= cap:
                    raise ExplosionGuardError(cap)
                seen.add(neighbour)
                queue.append(neighbour)
    return sorted(seen)


def commutation_class(word: Word, cap: int | None = None) -> list[Word]:
    """All words reachable by commutation moves only, lexicographically sorted."""
    return _bfs_closure(word, (COMMUTATION,), cap or default_cap())


def _first_reduced_word(perm: Permutation) -> Word:
    """Some reduced word for ``perm`` (peel descents from the right)."""
    popped: list[int] = []
    current = perm
    while True:
        descents = current.descents()
        if not descents:
            break
        i = descents[0]
        popped.append(i)
        current = current.times_s(i)
    return Word(tuple(reversed(popped)), perm.n)


def all_reduced_words(perm: Permutation, cap: int | None = None) -> list[Word]:
    """The complete set Red(perm), via move closure from one reduced word."""
    start = _first_reduced_word(perm)
    return _bfs_closure(
        start, (COMMUTATION, BRAID_UP, BRAID_DOWN), cap or default_cap()
    )


@dataclass(frozen=True)
class MatsumotoGraph:
    """Graph on Red(w): vertices sorted words, undirected deduplicated edges.

    Edge kinds collapse the braid direction: ``"braid"`` or ``"comm"``.
    """

    vertices: tuple[Word, ...]
    edges: frozenset[tuple[int, int, str]]

    def braid_edge_count(self) -> int:
        return sum(1 for _, _, kind in self.edges if kind == "braid")

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adjacency: dict[int, list[int]] = {i: [] for i in range(len(self.vertices))}
        for i, j, _ in self.edges:
            adjacency[i].append(j)
            adjacency[j].append(i)
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for u in adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == len(self.vertices)

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": [word_to_string(w) for w in self.vertices],
                "edges": sorted([i, j, kind] for i, j, kind in self.edges),
            }
        )

    def to_dot(self) -> str:
        lines = ["graph matsumoto {"]
        for idx, word in enumerate(self.vertices):
            lines.append(f'  v{idx} [label="{word_to_string(word)}"];')
        for i, j, kind in sorted(self.edges):
            style = "solid" if kind == "braid" else "dotted"
            lines.append(f"  v{i} -- v{j} [style={style}];")
        lines.append("}")
        return "\n".join(lines)


def matsumoto_graph(perm: Permutation, cap: int | None = None) -> MatsumotoGraph:
    """The full reduced-word graph of a permutation."""
    vertices = all_reduced_words(perm, cap)
    index = {w: i for i, w in enumerate(vertices)}
    edges = set()
    for word in vertices:
        i = index[word]
        for site in list_moves(word):
            j = index[apply_move(word, site)]
            kind = "comm" if site.kind == COMMUTATION else "braid"
            edges.add((min(i, j), max(i, j), kind))
    return MatsumotoGraph(tuple(vertices), frozenset(edges))


def braid_move_stats(words: Iterable[Word]) -> dict:
    """Exact braid-move statistics over a collection of words.

    Returns total site count, the mean per word, and the up/down split used
    by the skew-shape difference statistic.
    """
    words = list(words)
    if not words:
        raise ValueError("braid_move_stats needs a nonempty collection")
    up = down = 0
    for word in words:
        u, d = braid_sites(word)
        up += u
        down += d
    total = up + down
    return {
        "total": total,
        "mean": Fraction(total, len(words)),
        "up": up,
        "down": down,
    }


def word_to_string(word: Word) -> str:
    """Digit string when all letters are below ten, else comma-separated."""
    if all(a < 10 for a in word.letters):
        return "".join(str(a) for a in word.letters)
    return ",".join(str(a) for a in word.letters)


def word_from_string(text: str, rank: int) -> Word:
    if "," in text:
        letters = tuple(int(part) for part in text.split(","))
    else:
        letters = tuple(int(ch) for ch in text)
    return Word(letters, rank)
