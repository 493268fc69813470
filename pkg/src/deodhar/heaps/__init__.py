"""Heaps of reduced words: lattice pictures, decorations, strings and defect graphs."""

from .decorated import DecoratedHeap, StringDiagram, decorate, decorated_heap, defect_by_string_parity, strings
from .defects import CriticalZeros, DefectGraph, critical_zeros, defect_graph
from .heap import Heap, HeapEntry, coalesce, heap_from_word
from .projection import Projection, pi_hypotheses, pi_project
from .render import render_ascii
from .shapes import (
    MinimalPair, Resolution, detect_shape, is_convex, minimal_pairs,
    minimal_pairs_and_convexity, strip_nonconvex_prefix,
)

__all__ = [
    "Heap", "HeapEntry", "heap_from_word", "coalesce",
    "DecoratedHeap", "StringDiagram", "decorate", "decorated_heap", "strings", "defect_by_string_parity",
    "CriticalZeros", "DefectGraph", "critical_zeros", "defect_graph",
    "MinimalPair", "Resolution", "detect_shape", "minimal_pairs", "minimal_pairs_and_convexity",
    "is_convex", "strip_nonconvex_prefix",
    "Projection", "pi_hypotheses", "pi_project", "render_ascii",
]
