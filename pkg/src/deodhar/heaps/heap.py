"""
Heaps of words on the integer lattice.

Entry ids are word positions, counted from 0.  Levels start at 1 and grow
upward.  The heap order is generated by ``i < j`` whenever ``i`` precedes ``j``
in the word and the two letters do not commute.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from ..coxeter import CoxeterSystem, Word, check_word

__all__ = ["HeapEntry", "Heap", "heap_from_word", "coalesce"]


@dataclass(frozen=True)
class HeapEntry:
    id: int
    generator: int
    column: int
    level: int

    @property
    def point(self) -> tuple[int, int]:
        return (self.column, self.level)


@dataclass(frozen=True)
class Heap:
    system: CoxeterSystem
    word: Word
    entries: tuple[HeapEntry, ...]
    covers: frozenset[tuple[int, int]] = field(repr=False)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> HeapEntry:
        return self.entries[i]

    @cached_property
    def below(self) -> tuple[int, ...]:
        """Bitmask of the entries strictly below each entry."""
        out = [0] * len(self.entries)
        for j in range(len(self.entries)):
            for i in range(j):
                if (i, j) in self.covers:
                    out[j] |= out[i] | (1 << i)
        return tuple(out)

    def less(self, i: int, j: int) -> bool:
        return bool((self.below[j] >> i) & 1)

    def between(self, i: int, j: int) -> list[int]:
        """Entries strictly between ``i`` and ``j`` in the heap order."""
        return [k for k in range(i + 1, j) if self.less(i, k) and self.less(k, j)]

    def levels(self) -> dict[int, int]:
        return {e.id: e.level for e in self.entries}

    def with_levels(self, levels: dict[int, int]) -> Heap:
        entries = tuple(HeapEntry(e.id, e.generator, e.column, levels[e.id]) for e in self.entries)
        return Heap(self.system, self.word, entries, self.covers)

    def column_entries(self, column: int) -> list[HeapEntry]:
        """Entries in a column, bottom to top (word order within a shared point)."""
        return sorted((e for e in self.entries if e.column == column), key=lambda e: (e.level, e.id))

    def at(self, column: int, level: int) -> list[HeapEntry]:
        return [e for e in self.entries if e.column == column and e.level == level]

    def points(self) -> set[tuple[int, int]]:
        return {e.point for e in self.entries}

    @property
    def height(self) -> int:
        return max((e.level for e in self.entries), default=0)


def _covers(system: CoxeterSystem, word: Word) -> frozenset[tuple[int, int]]:
    k = len(word)
    below = [0] * k
    out = set()
    for j in range(k):
        related = [i for i in range(j) if not system.commutes(word[i], word[j])]
        reach = 0
        # walk from the latest related entry down; skip those already implied
        for i in reversed(related):
            if not (reach >> i) & 1:
                out.add((i, j))
                reach |= below[i]
            below[j] |= below[i] | (1 << i)
    return frozenset(out)


def heap_from_word(system: CoxeterSystem, word: Iterable[int]) -> Heap:
    """Drop each letter into its column as low as the earlier non-commuting letters allow."""
    word = check_word(system, word)
    levels: list[int] = []
    entries = []
    for j, s in enumerate(word):
        y = 1 + max((levels[i] for i in range(j) if not system.commutes(word[i], s)), default=0)
        levels.append(y)
        entries.append(HeapEntry(j, s, system.column(s), y))
    return Heap(system, word, tuple(entries), _covers(system, word))


def _components(heap: Heap, levels: dict[int, int]) -> list[list[int]]:
    system = heap.system
    n = len(heap.entries)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    ents = heap.entries
    for i in range(n):
        for j in range(i + 1, n):
            a, b = ents[i], ents[j]
            linked = (not system.commutes(a.generator, b.generator)
                      and abs(levels[i] - levels[j]) == 1)
            shared = a.column == b.column and levels[i] == levels[j]
            if linked or shared:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: (min(levels[i] for i in g), min(g)))


def coalesce(heap: Heap) -> Heap:
    """
    Push connected components upward until each is blocked from above.

    Two entries are connected when their generators do not commute and their
    levels differ by one, or when they share a lattice point.
    """
    if not heap.entries:
        return heap
    levels = heap.levels()
    while True:
        moved = False
        for comp in _components(heap, levels):
            inside = set(comp)
            gaps = [levels[j] - levels[i] - 1 for i, j in heap.covers if i in inside and j not in inside]
            if gaps and min(gaps) > 0:
                step = min(gaps)
                for i in comp:
                    levels[i] += step
                moved = True
                break
        if not moved:
            break
    low = min(levels.values())
    return heap.with_levels({i: y - low + 1 for i, y in levels.items()})
