"""Fixed-width text pictures of (decorated) heaps."""

from __future__ import annotations

from ..masks import Status
from .decorated import DecoratedHeap
from .heap import Heap

__all__ = ["render_ascii", "GLYPHS"]

GLYPHS = {
    Status.PLAIN_ZERO: "o",
    Status.ZERO_DEFECT: "D",
    Status.PLAIN_ONE: "#",
    Status.ONE_DEFECT: "#",
}


def render_ascii(item: DecoratedHeap | Heap) -> str:
    """
    One row per level, top level first, one fixed-width cell per column.

    A bare heap draws every entry as ``#``.  In type D an ``1~`` entry is
    drawn with ``~`` after its glyph; when it shares the lattice point with an
    ``s_1`` entry the cell shows both, in word order, and every cell widens.
    """
    if isinstance(item, DecoratedHeap):
        heap = item.heap
        glyph = lambda e: GLYPHS[item.status(e.id)]
    else:
        heap = item
        glyph = lambda e: "#"
    if not heap.entries:
        return ""
    system = heap.system
    cols = sorted({system.column(s) for s in system.generators})
    lo, hi = cols[0], cols[-1]
    twisted = system.family == "D"
    grid = []
    for y in range(heap.height, 0, -1):
        row = []
        for c in range(lo, hi + 1):
            here = sorted(heap.at(c, y), key=lambda e: e.id)
            row.append("".join(glyph(e) + ("~" if twisted and e.generator == 0 else "") for e in here) or ".")
        grid.append(row)
    width = max(len(cell) for row in grid for cell in row)
    rows = [" ".join(cell.ljust(width) for cell in row).rstrip() for row in grid]
    return "\n".join(rows) + "\n"
