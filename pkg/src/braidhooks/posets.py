"""Finite posets, linear extensions, order ideals, and ideal descents.

Elements are arbitrary hashable names; covers are (lower, upper) pairs and
are reduced to the transitive reduction at construction.  A linear
extension carries the same ``tau(i)``/``size`` interface as words and
tableaux, so the even/odd orbit machinery applies unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import (
    ExplosionGuardError,
    NotADescentError,
    PosetBoundsError,
    TrivialIdealError,
)
from .words import default_cap

__all__ = [
    "Poset",
    "LinearExtension",
    "linear_extensions",
    "order_ideals",
    "descents",
    "tau_on_extension",
    "poset_phi",
    "poset_phi_inverse",
    "verify_edges",
    "random_bounded_poset",
    "diamond_poset",
    "chain_poset",
    "antichain_poset",
    "poset_from_lines",
    "parse_ideal",
    "heap_as_poset",
]


class Poset:
    """A finite partial order given by its cover relation."""

    __slots__ = ("elements", "covers", "_index", "_below", "_above", "_leq")

    def __init__(self, elements: Sequence[Hashable],
                 covers: Iterable[tuple[Hashable, Hashable]]):
        self.elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate elements")
        pairs = {(self._index[a], self._index[b]) for a, b in covers}
        closure = self._close(pairs)
        if any((i, i) in closure for i in range(len(self.elements))):
            raise ValueError("cover relation has a cycle")
        reduced = {
            (a, b)
            for a, b in pairs
            if not any(
                (a, m) in closure and (m, b) in closure
                for m in range(len(self.elements))
                if m != a and m != b
            )
        }
        self.covers = frozenset(
            (self.elements[a], self.elements[b]) for a, b in reduced
        )
        self._leq = closure | {(i, i) for i in range(len(self.elements))}
        self._above = {i: set() for i in range(len(self.elements))}
        self._below = {i: set() for i in range(len(self.elements))}
        for a, b in reduced:
            self._above[a].add(b)
            self._below[b].add(a)

    @staticmethod
    def _close(pairs: set[tuple[int, int]]) -> set[tuple[int, int]]:
        closure = set(pairs)
        changed = True
        while changed:
            changed = False
            for a, b in list(closure):
                for c, d in list(closure):
                    if b == c and (a, d) not in closure:
                        closure.add((a, d))
                        changed = True
        return closure

    @property
    def size(self) -> int:
        return len(self.elements)

    def less(self, a: Hashable, b: Hashable) -> bool:
        return a != b and (self._index[a], self._index[b]) in self._leq

    def leq(self, a: Hashable, b: Hashable) -> bool:
        return (self._index[a], self._index[b]) in self._leq

    def covers_of(self, a: Hashable) -> set[Hashable]:
        return {self.elements[i] for i in self._above[self._index[a]]}

    def minimum(self) -> Hashable | None:
        mins = [e for e in self.elements if not self._below[self._index[e]]]
        return mins[0] if len(mins) == 1 else None

    def maximum(self) -> Hashable | None:
        maxs = [e for e in self.elements if not self._above[self._index[e]]]
        return maxs[0] if len(maxs) == 1 else None


@dataclass(frozen=True)
class LinearExtension:
    """Order-preserving labelling: ``seq[m-1]`` is the element labelled m."""

    poset: Poset
    seq: tuple[Hashable, ...]

    @property
    def size(self) -> int:
        return len(self.seq)

    def label(self, element: Hashable) -> int:
        return self.seq.index(element) + 1

    def element(self, label: int) -> Hashable:
        return self.seq[label - 1]

    def tau(self, i: int) -> "LinearExtension":
        return tau_on_extension(self, i)

    def __lt__(self, other: "LinearExtension") -> bool:
        return self._key() < other._key()

    def _key(self):
        index = self.poset._index
        return tuple(index[e] for e in self.seq)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearExtension) and self.seq == other.seq

    def __hash__(self) -> int:
        return hash(self.seq)


def linear_extensions(poset: Poset, cap: int | None = None) -> list[LinearExtension]:
    """All linear extensions, in lexicographic element-index order."""
    cap = cap or default_cap()
    n = poset.size
    below = poset._below
    placed: list[int] = []
    in_seq = [False] * n
    found: list[LinearExtension] = []

    def rec():
        if len(placed) == n:
            if len(found) >= cap:
                raise ExplosionGuardError(cap)
            found.append(
                LinearExtension(poset, tuple(poset.elements[i] for i in placed))
            )
            return
        for i in range(n):
            if not in_seq[i] and all(in_seq[j] for j in below[i]):
                in_seq[i] = True
                placed.append(i)
                rec()
                placed.pop()
                in_seq[i] = False

    rec()
    return found


def order_ideals(poset: Poset, cap: int | None = None) -> list[frozenset]:
    """All downward-closed subsets, from the empty set to the whole poset."""
    cap = cap or default_cap()
    n = poset.size
    below = poset._below
    ideals = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        ideal = frontier.pop()
        members = {poset._index[e] for e in ideal} if ideal else set()
        for i in range(n):
            if i in members or not below[i] <= members:
                continue
            bigger = frozenset(ideal | {poset.elements[i]})
            if bigger not in ideals:
                if len(ideals) >= cap:
                    raise ExplosionGuardError(cap)
                ideals.add(bigger)
                frontier.append(bigger)
    return sorted(ideals, key=lambda s: (len(s), sorted(map(str, s))))


def descents(extension: LinearExtension, ideal: frozenset) -> set:
    """Elements p of the ideal covered by the element labelled L(p)+1 outside it."""
    poset = extension.poset
    result = set()
    for m, element in enumerate(extension.seq[:-1], start=1):
        if element not in ideal:
            continue
        successor = extension.seq[m]
        if successor not in ideal and successor in poset.covers_of(element):
            result.add(element)
    return result


def tau_on_extension(extension: LinearExtension, i: int) -> LinearExtension:
    """Swap labels i and i+1 when the two elements are incomparable."""
    if not 1 <= i < extension.size:
        raise IndexError(f"tau index {i} outside 1..{extension.size - 1}")
    a = extension.seq[i - 1]
    b = extension.seq[i]
    if extension.poset.less(a, b) or extension.poset.less(b, a):
        return extension
    seq = list(extension.seq)
    seq[i - 1], seq[i] = b, a
    return LinearExtension(extension.poset, tuple(seq))


def _tau_oi(extension: LinearExtension, i: int) -> LinearExtension:
    start = 1 if i % 2 == 1 else 2
    for j in range(start, extension.size, 2):
        extension = extension.tau(j)
    return extension


def _require_bounds_and_proper(poset: Poset, ideal: frozenset) -> None:
    if poset.minimum() is None or poset.maximum() is None:
        raise PosetBoundsError("poset needs a unique minimum and maximum")
    if not ideal or len(ideal) == poset.size:
        raise TrivialIdealError("ideal must be proper and nonempty")


def poset_phi(p: Hashable, extension: LinearExtension, ideal: frozenset) -> LinearExtension:
    """Phi(p, L) = L.tau_{o(L(p))} ... tau_{o(1)} for a descent p of L."""
    _require_bounds_and_proper(extension.poset, ideal)
    if p not in descents(extension, ideal):
        raise NotADescentError(f"{p!r} is not a descent of {extension.seq} for {set(ideal)}")
    for j in range(extension.label(p), 0, -1):
        extension = _tau_oi(extension, j)
    return extension


def poset_phi_inverse(extension: LinearExtension, ideal: frozenset) -> tuple[Hashable, LinearExtension]:
    """Scan M, M.tau_{o(1)}, ... for the unique step leaving the ideal."""
    _require_bounds_and_proper(extension.poset, ideal)
    current = extension
    previous_element = current.seq[0]
    for k in range(2, extension.size + 1):
        moved = _tau_oi(current, k - 1)
        element = moved.seq[k - 1]
        if previous_element in ideal and element not in ideal:
            return previous_element, moved
        current = moved
        previous_element = element
    raise AssertionError("path never left the ideal; ideal was not proper")


def verify_edges(poset: Poset, ideal: frozenset, cap: int | None = None) -> dict:
    """Check |L(P)| = sum of descent counts, plus per-orbit averages of one."""
    from .homomesy import dihedral_orbits, orbit_average

    _require_bounds_and_proper(poset, ideal)
    extensions = linear_extensions(poset, cap)
    lhs = len(extensions)
    rhs = sum(len(descents(ext, ideal)) for ext in extensions)
    orbits = dihedral_orbits(extensions, "dihedral")
    averages = [
        orbit_average(orbit, lambda ext: len(descents(ext, ideal)))
        for orbit in orbits
    ]
    return {
        "lhs": lhs,
        "rhs": rhs,
        "ok": lhs == rhs and all(a == 1 for a in averages),
        "per_orbit": [
            {"size": orbit.size, "average": avg}
            for orbit, avg in zip(orbits, averages)
        ],
    }


def chain_poset(n: int) -> Poset:
    return Poset(range(n), [(i, i + 1) for i in range(n - 1)])


def antichain_poset(n: int) -> Poset:
    return Poset(range(n), [])


def diamond_poset() -> Poset:
    """Bottom, two incomparable middles, top."""
    return Poset(
        ["bot", "left", "right", "top"],
        [("bot", "left"), ("bot", "right"), ("left", "top"), ("right", "top")],
    )


def random_bounded_poset(rng, size: int) -> Poset:
    """A random layered poset with forced bottom and top elements."""
    if size < 3:
        raise ValueError("need at least 3 elements for a bounded poset")
    middle = size - 2
    layer_count = rng.randint(1, min(3, middle))
    layers: list[list[int]] = [[] for _ in range(layer_count)]
    for element in range(middle):
        layers[rng.randrange(layer_count)].append(element)
    layers = [layer for layer in layers if layer]
    covers: list[tuple[Hashable, Hashable]] = []
    for lower, upper in zip(layers, layers[1:]):
        for b in upper:
            choices = [a for a in lower if rng.random() < 0.5] or [rng.choice(lower)]
            covers.extend((a, b) for a in choices)
        covered = {a for a, b in covers if b in set(upper)}
        for a in lower:
            if a not in covered:
                covers.append((a, rng.choice(upper)))
    covers.extend(("bot", a) for a in layers[0])
    covers.extend((a, "top") for a in layers[-1])
    elements = ["bot"] + list(range(middle)) + ["top"]
    return Poset(elements, covers)


def heap_as_poset(heap) -> Poset:
    """View a heap/shape poset through the generic poset interface."""
    return Poset(range(heap.size), heap.covers)


def poset_from_lines(text: str) -> Poset:
    """Parse lines of the form ``a < b`` into a poset."""
    covers = []
    names: list[str] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "<" not in line:
            raise ValueError(f"expected 'a < b', got {line!r}")
        a, b = (part.strip() for part in line.split("<", 1))
        covers.append((a, b))
        for name in (a, b):
            if name not in names:
                names.append(name)
    return Poset(names, covers)


def parse_ideal(poset: Poset, text: str) -> frozenset:
    names = [part.strip() for part in text.split(",") if part.strip()]
    missing = [n for n in names if n not in poset.elements]
    if missing:
        raise ValueError(f"unknown elements {missing}")
    ideal = frozenset(names)
    for q in ideal:
        for p in poset.elements:
            if poset.less(p, q) and p not in ideal:
                raise ValueError(f"{set(ideal)} is not downward closed (missing {p!r})")
    return ideal
