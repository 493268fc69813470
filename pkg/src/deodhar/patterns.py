"""Classical pattern containment for permutations and the smoothness test."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from .coxeter import Element
from .errors import PreconditionError, UnsupportedError

__all__ = ["Pattern", "contains_pattern", "is_smooth_typeA", "SMOOTH_PATTERNS"]


@dataclass(frozen=True)
class Pattern:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if sorted(abs(e) for e in entries) != list(range(1, len(entries) + 1)):
            raise PreconditionError(f"{entries} is not a (signed) permutation pattern")
        object.__setattr__(self, "entries", entries)

    @property
    def signed(self) -> bool:
        return any(e < 0 for e in self.entries)

    def __len__(self):
        return len(self.entries)


SMOOTH_PATTERNS = (Pattern((3, 4, 1, 2)), Pattern((4, 2, 3, 1)))


def _as_pattern(p) -> Pattern:
    return p if isinstance(p, Pattern) else Pattern(tuple(p))


def _occurs(seq: Sequence[int], pat: Sequence[int]) -> bool:
    k = len(pat)
    if k > len(seq):
        return False
    # positions of pat values in increasing order, used to compare relative order
    order = sorted(range(k), key=lambda i: pat[i])

    def rec(start, chosen):
        j = len(chosen)
        if j == k:
            vals = [seq[i] for i in chosen]
            return all(vals[order[t]] < vals[order[t + 1]] for t in range(k - 1))
        for i in range(start, len(seq) - (k - j) + 1):
            # prune: relative order with earlier picks must match
            v = seq[i]
            if all((seq[chosen[t]] < v) == (pat[t] < pat[j]) for t in range(j)):
                chosen.append(i)
                if rec(i + 1, chosen):
                    return True
                chosen.pop()
        return False

    return rec(0, [])


def contains_pattern(w: Element, p) -> bool:
    """True when some subsequence of the 1-line notation of ``w`` is order-isomorphic to ``p``."""
    p = _as_pattern(p)
    if w.system.family != "A":
        raise UnsupportedError("pattern containment is implemented for type A only")
    if p.signed:
        raise UnsupportedError("signed patterns do not apply to type A permutations")
    return _occurs(w.one_line, p.entries)


def contains_pattern_bruteforce(seq: Sequence[int], pat: Sequence[int]) -> bool:
    k = len(pat)
    shape = sorted(range(k), key=lambda i: pat[i])
    for idx in combinations(range(len(seq)), k):
        vals = [seq[i] for i in idx]
        if sorted(range(k), key=lambda i: vals[i]) == shape:
            return True
    return False


def is_smooth_typeA(w: Element) -> bool:
    return not any(contains_pattern(w, p) for p in SMOOTH_PATTERNS)
