"""Decorated heaps and their string overlays."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..coxeter import CoxeterSystem, Word, build_system
from ..errors import PreconditionError, UnsupportedError
from ..masks import DefectProfile, Mask, Status, defect_profile
from .heap import Heap, coalesce, heap_from_word

__all__ = ["DecoratedHeap", "StringDiagram", "decorate", "strings", "defect_by_string_parity", "TAGS"]

# render tags by status
TAGS = {
    Status.PLAIN_ZERO: "plain-zero",
    Status.ZERO_DEFECT: "zero-defect",
    Status.PLAIN_ONE: "mask-1",
    Status.ONE_DEFECT: "mask-1",
}


@dataclass(frozen=True)
class DecoratedHeap:
    heap: Heap
    mask: Mask
    profile: DefectProfile

    @property
    def system(self) -> CoxeterSystem:
        return self.heap.system

    @property
    def word(self) -> Word:
        return self.heap.word

    @property
    def statuses(self) -> tuple[Status, ...]:
        return self.profile.statuses

    @property
    def decorations(self) -> tuple[str, ...]:
        return tuple(TAGS[s] for s in self.profile.statuses)

    def status(self, entry: int) -> Status:
        return self.profile.statuses[entry]

    def entries_with(self, status: Status) -> list[int]:
        return [i for i, s in enumerate(self.profile.statuses) if s is status]

    @cached_property
    def diagram(self) -> StringDiagram:
        return strings(self)


def decorate(heap: Heap, mask, word: Word | None = None) -> DecoratedHeap:
    """Attach mask values and defect statuses; ``heap`` is coalesced if it is not already."""
    word = heap.word if word is None else tuple(word)
    if word != heap.word:
        raise PreconditionError("heap was built from a different word")
    prof = defect_profile(heap.system, word, mask)
    return DecoratedHeap(coalesce(heap), tuple(int(b) for b in mask), prof)


@dataclass(frozen=True)
class StringDiagram:
    """
    Strings are named by their starting position ``1..n`` at the bottom.

    ``paths[p]`` lists the entries met by string ``p`` from bottom to top,
    ``labels[p]`` its final signed label, and ``top_assignment`` the labels
    read across the top.  ``pairs[j]`` records which two strings (left, right)
    enter entry ``j`` from below, with their labels at that moment.
    """
    paths: dict[int, tuple[int, ...]]
    points: dict[int, tuple[tuple[int, int], ...]]
    labels: dict[int, int]
    top_assignment: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    entry_labels: tuple[tuple[int, int], ...]
    crossings: tuple[tuple[int, int, int], ...]  # (entry, left string, right string)


def _type_a_word(system: CoxeterSystem, word: Word) -> tuple[CoxeterSystem, Word]:
    if system.family == "A":
        return system, word
    if system.family == "B":
        return build_system("A", system.rank), tuple(s + 1 for s in word)
    raise UnsupportedError(f"no type A transport for {system.name}")


def strings(decorated: DecoratedHeap) -> StringDiagram:
    """
    Run strings up through the heap: they cross at mask-1 entries and bounce at mask-0 entries.

    In type D the entry ``1~`` acts on positions 1 and 2 and bars both labels
    when it crosses them.  Type B heaps are drawn as the type A heap obtained by
    shifting every generator up by one.
    """
    system = decorated.system
    word = decorated.word
    if system.family == "D":
        n = system.degree
    elif system.family in "AB":
        system, word = _type_a_word(system, word)
        n = system.degree
    else:
        raise UnsupportedError(f"{system.name} elements have no 1-line notation")
    at = list(range(1, n + 1))  # string id at each position
    sign = {p: 1 for p in at}
    paths = {p: [] for p in at}
    pts = {p: [] for p in at}
    pairs, entry_labels, crossings = [], [], []
    heap = decorated.heap
    for j, s in enumerate(word):
        c = 1 if (system.family == "D" and s == 0) else s
        left, right = at[c - 1], at[c]
        pairs.append((left, right))
        entry_labels.append((sign[left] * left, sign[right] * right))
        for p in (left, right):
            paths[p].append(j)
            pts[p].append(heap[j].point)
        if decorated.mask[j]:
            at[c - 1], at[c] = right, left
            crossings.append((j, left, right))
            if system.family == "D" and s == 0:
                sign[left] = -sign[left]
                sign[right] = -sign[right]
    labels = {p: sign[p] * p for p in paths}
    top = tuple(labels[p] for p in at)
    return StringDiagram(
        paths={p: tuple(v) for p, v in paths.items()},
        points={p: tuple(v) for p, v in pts.items()},
        labels=labels, top_assignment=top, pairs=tuple(pairs),
        entry_labels=tuple(entry_labels), crossings=tuple(crossings),
    )


def defect_by_string_parity(decorated: DecoratedHeap, entry: int) -> bool:
    """
    Decide whether ``entry`` is a defect from the strings alone.

    Type A (and B after transport): the two strings entering the entry have
    crossed each other an odd number of times below it.  Type D: the signed
    labels entering the entry are out of order.  The ``1~`` entries are not
    covered by this test.
    """
    system = decorated.system
    diagram = decorated.diagram
    if not 0 <= entry < len(decorated.word):
        raise PreconditionError(f"no entry {entry}")
    if system.family == "D":
        if decorated.word[entry] == 0:
            raise UnsupportedError("the string test does not cover 1~ entries; use the length test")
        a, b = diagram.entry_labels[entry]
        return a > b
    left, right = diagram.pairs[entry]
    count = sum(1 for j, l, r in diagram.crossings if j < entry and {l, r} == {left, right})
    return count % 2 == 1


def decorated_heap(system: CoxeterSystem, word, mask) -> DecoratedHeap:
    word = tuple(word)
    return decorate(heap_from_word(system, word), mask)
