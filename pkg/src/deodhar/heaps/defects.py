"""Critical zeros of zero-defects and the defect graph of a mask."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import PreconditionError, UnsupportedError
from ..masks import Status
from .decorated import DecoratedHeap

__all__ = ["CriticalZeros", "DefectGraph", "critical_zeros", "defect_graph"]


@dataclass(frozen=True)
class CriticalZeros:
    entry: int
    lcz: int | None
    rcz: int | None
    self_included: bool

    def as_set(self) -> frozenset[int]:
        out = {z for z in (self.lcz, self.rcz) if z is not None}
        if self.self_included:
            out.add(self.entry)
        return frozenset(out)


def critical_zeros(decorated: DecoratedHeap, entry: int) -> CriticalZeros:
    """
    Locate ``lcz`` and ``rcz`` of a zero-defect.

    Let ``c`` be the last mask-1 entry below ``entry`` where its two strings
    crossed each other.  On each string, the critical zero is the last mask-0
    entry the string meets after ``c`` and before ``entry``.  A side with no
    such entry is reported as ``None``.
    """
    if decorated.system.family not in "AB":
        raise UnsupportedError("critical zeros are defined for type A heaps")
    if decorated.status(entry) is not Status.ZERO_DEFECT:
        raise PreconditionError(f"entry {entry} is not a zero-defect")
    diagram = decorated.diagram
    left, right = diagram.pairs[entry]
    crossing = max(j for j, l, r in diagram.crossings if j < entry and {l, r} == {left, right})

    def last_zero(string):
        hits = [k for k in diagram.paths[string] if crossing < k < entry and not decorated.mask[k]]
        return hits[-1] if hits else None

    return CriticalZeros(entry, last_zero(left), last_zero(right), True)


@dataclass(frozen=True)
class DefectGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    critical_zero_table: dict[int, CriticalZeros]

    def critical_entries(self) -> frozenset[int]:
        out: set[int] = set()
        for cz in self.critical_zero_table.values():
            out |= cz.as_set()
        return frozenset(out)

    def _components(self) -> int:
        parent = {v: v for v in self.vertices}

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        for a, b in self.edges:
            parent[find(a)] = find(b)
        return len({find(v) for v in self.vertices})

    def is_forest(self) -> bool:
        return len(self.edges) == len(self.vertices) - self._components()

    def is_tree(self) -> bool:
        return bool(self.vertices) and self.is_forest() and self._components() == 1

    def max_sharing(self) -> int:
        """Largest number of zero-defects for which one entry is critical."""
        counts: dict[int, int] = {}
        for cz in self.critical_zero_table.values():
            for z in cz.as_set():
                counts[z] = counts.get(z, 0) + 1
        return max(counts.values(), default=0)


def defect_graph(decorated: DecoratedHeap) -> DefectGraph:
    """Zero-defects joined whenever their critical-zero sets meet."""
    verts = tuple(decorated.entries_with(Status.ZERO_DEFECT))
    table = {v: critical_zeros(decorated, v) for v in verts}
    sets = {v: table[v].as_set() for v in verts}
    edges = tuple((a, b) for i, a in enumerate(verts) for b in verts[i + 1:] if sets[a] & sets[b])
    return DefectGraph(verts, edges, table)
