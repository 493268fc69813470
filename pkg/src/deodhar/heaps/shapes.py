"""Forbidden heap fragments, minimal pairs and type D convexity."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..coxeter import Element, build_system, element_from_word, is_short_braid_avoiding, reduced_word
from ..errors import PreconditionError, UnsupportedError
from .heap import Heap, coalesce, heap_from_word

__all__ = [
    "SHAPES", "detect_shape", "Resolution", "MinimalPair",
    "minimal_pairs", "minimal_pairs_and_convexity", "is_convex", "strip_nonconvex_prefix",
]

# lattice offsets (column, level) of the entries of each fragment
SHAPES = {
    "4-stack": ((0, 0), (0, 2), (0, 4), (0, 6)),
    "3-stack": ((0, 0), (0, 2), (0, 4)),
    "I-shape": ((-1, 0), (1, 0), (0, 1), (0, 3), (-1, 4), (1, 4)),
}


def detect_shape(heap: Heap, shape: str) -> bool:
    """Does some translate of the fragment sit inside the occupied lattice points?"""
    try:
        offsets = SHAPES[shape]
    except KeyError:
        raise PreconditionError(f"unknown shape {shape!r}; expected one of {sorted(SHAPES)}") from None
    pts = heap.points()
    dx0, dy0 = offsets[0]
    for x, y in pts:
        bx, by = x - dx0, y - dy0
        if all((bx + dx, by + dy) in pts for dx, dy in offsets):
            return True
    return False


class Resolution(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    DISTINCT = "distinct"


@dataclass(frozen=True)
class MinimalPair:
    lower: int
    upper: int
    column: int
    resolvers: tuple[int, ...]
    resolution: Resolution


def minimal_pairs(heap: Heap) -> list[MinimalPair]:
    """Same-generator entries with no other entry of their column between them."""
    system = heap.system
    out = []
    for a in heap.entries:
        later = [b for b in heap.entries if b.id > a.id and b.generator == a.generator]
        if not later:
            continue
        b = later[0]
        between = heap.between(a.id, b.id)
        if any(heap[k].column == a.column for k in between):
            continue
        resolvers = tuple(k for k in between if not system.commutes(heap[k].generator, a.generator))
        cols = {heap[k].column for k in resolvers}
        if cols == {a.column - 1}:
            res = Resolution.LEFT
        elif cols == {a.column + 1}:
            res = Resolution.RIGHT
        else:
            res = Resolution.DISTINCT
        out.append(MinimalPair(a.id, b.id, a.column, resolvers, res))
    return out


def minimal_pairs_and_convexity(w: Element) -> tuple[list[MinimalPair], bool]:
    if w.system.family not in "AD":
        raise UnsupportedError("minimal pairs are classified for types A and D")
    if not is_short_braid_avoiding(w):
        raise PreconditionError(f"{w!r} is not short-braid avoiding")
    pairs = minimal_pairs(heap_from_word(w.system, reduced_word(w)))
    return pairs, all(p.resolution is Resolution.DISTINCT for p in pairs)


def is_convex(w: Element) -> bool:
    return minimal_pairs_and_convexity(w)[1]


def strip_nonconvex_prefix(w: Element) -> Element:
    """
    Delete heap columns ``1..i`` of a non-convex type D element.

    ``i`` is the rightmost column holding a minimal pair with a left
    resolution.  Each deleted column must hold exactly two entries.  What is
    left uses only ``s_{i+1}, ..., s_{n-1}`` and is returned in ``A_{n-1}``.
    """
    system = w.system
    if system.family != "D":
        raise UnsupportedError("stripping applies to type D elements")
    pairs, convex = minimal_pairs_and_convexity(w)
    if convex:
        raise PreconditionError(f"{w!r} is convex")
    lefts = [p.column for p in pairs if p.resolution is Resolution.LEFT]
    if not lefts:
        raise PreconditionError(f"{w!r} has no left-resolved minimal pair")
    i = max(lefts)
    heap = heap_from_word(system, reduced_word(w))
    for c in range(1, i + 1):
        count = len(heap.column_entries(c))
        if count != 2:
            raise PreconditionError(f"column {c} holds {count} entries, expected 2")
    rest = tuple(s for s in heap.word if system.column(s) > i)
    target = build_system("A", system.rank - 1)
    x, reduced = element_from_word(target, rest)
    assert reduced
    return x


def coalesced_heap(w: Element) -> Heap:
    return coalesce(heap_from_word(w.system, reduced_word(w)))
