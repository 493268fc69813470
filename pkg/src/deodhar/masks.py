"""
Masks on a fixed reduced word: subexpressions, defects and Deodhar's statistic.

A mask is a tuple of bits, bit ``j`` belonging to the ``j``-th letter from the
left.  Position ``j`` is a defect when the letter lowers the length of the
prefix subexpression ``w^{sigma[j-1]}``; this does not depend on bit ``j``.

>>> from deodhar.coxeter import build_system
>>> A3 = build_system("A", 3)
>>> p = defect_profile(A3, (1, 2, 1), (1, 0, 0))
>>> [s.value for s in p.statuses], p.defects, p.deodhar_statistic
(['plain-one', 'plain-zero', 'zero-defect'], 1, 0)
>>> is_bounded(A3, (1, 2, 1)), is_bounded(A3, (2, 1, 3, 2))
(False, True)
"""

from __future__ import annotations

import enum
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from itertools import product

from .coxeter import CoxeterSystem, Element, Word, check_word, reduced_word, require_reduced
from .errors import PreconditionError, UnsupportedError
from .polynomial import QPolynomial

__all__ = [
    "Mask", "Status", "DefectProfile", "parse_mask", "format_mask", "is_proper",
    "subexpression", "defect_profile", "is_bounded", "is_bounded_bruteforce",
    "is_deodhar", "deodhar_polynomials", "masks_evaluating_to", "mu_masks",
]

Mask = tuple[int, ...]


class Status(enum.Enum):
    PLAIN_ZERO = "plain-zero"
    ZERO_DEFECT = "zero-defect"
    PLAIN_ONE = "plain-one"
    ONE_DEFECT = "one-defect"

    @property
    def bit(self) -> int:
        return int(self in (Status.PLAIN_ONE, Status.ONE_DEFECT))

    @property
    def defect(self) -> bool:
        return self in (Status.ZERO_DEFECT, Status.ONE_DEFECT)

    @classmethod
    def of(cls, bit: int, defect: bool) -> Status:
        if bit:
            return cls.ONE_DEFECT if defect else cls.PLAIN_ONE
        return cls.ZERO_DEFECT if defect else cls.PLAIN_ZERO


@dataclass(frozen=True)
class DefectProfile:
    statuses: tuple[Status, ...]
    defects: int
    deodhar_statistic: int
    subexpression: Element

    def count(self, status: Status) -> int:
        return sum(1 for s in self.statuses if s is status)

    def positions(self, status: Status) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.statuses) if s is status)


def parse_mask(text: str) -> Mask:
    text = text.replace(" ", "").replace(",", "")
    if not text or set(text) - {"0", "1"}:
        raise PreconditionError(f"mask must be a bit string, got {text!r}")
    return tuple(int(c) for c in text)


def format_mask(mask: Mask) -> str:
    return "".join(map(str, mask))


def is_proper(mask: Mask) -> bool:
    return not all(mask)


def _check(word: Word, mask) -> Mask:
    mask = tuple(int(b) for b in mask)
    if len(mask) != len(word):
        raise PreconditionError(f"mask has {len(mask)} bits but the word has {len(word)} letters")
    if any(b not in (0, 1) for b in mask):
        raise PreconditionError("mask entries must be 0 or 1")
    return mask


def subexpression(system: CoxeterSystem, word: Word, mask: Mask) -> Element:
    word = check_word(system, word)
    mask = _check(word, mask)
    key = system.identity_key
    for s, b in zip(word, mask):
        if b:
            key = system._rmul(key, s)
    return Element(system, key)


def defect_profile(system: CoxeterSystem, word: Word, mask: Mask) -> DefectProfile:
    """Classify every position of ``mask`` on the reduced word ``word``."""
    word = check_word(system, word)
    mask = _check(word, mask)
    require_reduced(system, word)
    key = system.identity_key
    statuses = []
    for s, b in zip(word, mask):
        statuses.append(Status.of(b, system._is_descent(key, s)))
        if b:
            key = system._rmul(key, s)
    d = sum(st.defect for st in statuses)
    D = (sum(st is Status.PLAIN_ZERO for st in statuses)
         - sum(st is Status.ZERO_DEFECT for st in statuses))
    return DefectProfile(tuple(statuses), d, D, Element(system, key))


# ----------------------------------------------------------------------
# prefix dynamic programs; ``mul(state, s)`` and ``desc(state, s)`` abstract
# over element keys and group-table indices


def _key_ops(system: CoxeterSystem) -> tuple[Callable, Callable]:
    return system._rmul, system._is_descent


def min_proper_statistic(start, word: Word, mul: Callable, desc: Callable):
    """Minimum of ``D`` over proper masks, or ``None`` for the empty word."""
    # state: (prefix element, prefix mask all ones) -> min D so far
    states = {(start, True): 0}
    for s in word:
        nxt: dict = {}
        for (x, ones), val in states.items():
            k = (mul(x, s), ones)
            if val < nxt.get(k, val + 1):
                nxt[k] = val
            v0 = val + (-1 if desc(x, s) else 1)
            k = (x, False)
            if v0 < nxt.get(k, v0 + 1):
                nxt[k] = v0
        states = nxt
    proper = [v for (x, ones), v in states.items() if not ones]
    return min(proper) if proper else None


def defect_polynomials(start, word: Word, mul: Callable, desc: Callable) -> dict:
    """Map each subexpression element to its ``{defects: mask count}`` table."""
    states: dict = {start: {0: 1}}
    for s in word:
        nxt: dict = {}
        for x, poly in states.items():
            if desc(x, s):
                poly = {d + 1: c for d, c in poly.items()}
            for y in (mul(x, s), x):
                acc = nxt.setdefault(y, {})
                for d, c in poly.items():
                    acc[d] = acc.get(d, 0) + c
        states = nxt
    return states


def is_bounded(system: CoxeterSystem, word: Word) -> bool:
    """Every proper mask on the reduced word has ``D > 0``."""
    word = check_word(system, word)
    require_reduced(system, word)
    m = min_proper_statistic(system.identity_key, word, *_key_ops(system))
    return m is None or m > 0


def is_bounded_bruteforce(system: CoxeterSystem, word: Word) -> bool:
    """Reference scan over all ``2^l`` masks."""
    word = check_word(system, word)
    for mask in product((0, 1), repeat=len(word)):
        if is_proper(mask) and defect_profile(system, word, mask).deodhar_statistic <= 0:
            return False
    return True


def is_deodhar(x: Element) -> bool:
    return is_bounded(x.system, reduced_word(x))


def deodhar_polynomials(system: CoxeterSystem, word: Word) -> dict[Element, QPolynomial]:
    """``sum q^d(sigma)`` over masks, grouped by the subexpression they evaluate to."""
    word = check_word(system, word)
    require_reduced(system, word)
    table = defect_polynomials(system.identity_key, word, *_key_ops(system))
    return {Element(system, k): QPolynomial.from_counts(v) for k, v in table.items()}


def masks_evaluating_to(system: CoxeterSystem, word: Word, x: Element) -> Iterator[tuple[Mask, DefectProfile]]:
    """Masks ``sigma`` with ``w^sigma = x``, in lexicographic order."""
    word = check_word(system, word)
    require_reduced(system, word)
    k = len(word)
    # suffix[j]: elements expressible as subwords of word[j:]
    suffix = [set() for _ in range(k + 1)]
    suffix[k] = {system.identity_key}
    for j in range(k - 1, -1, -1):
        s = word[j]
        suffix[j] = suffix[j + 1] | {system._lmul(y, s) for y in suffix[j + 1]}
    target = x.key
    if target not in suffix[0]:
        return
    inv = _inverse_key(system)

    def rec(j, key, bits):
        if j == k:
            if key == target:
                mask = tuple(bits)
                yield mask, defect_profile(system, word, mask)
            return
        s = word[j]
        for b in (0, 1):
            nk = system._rmul(key, s) if b else key
            # remaining subword must carry nk to the target
            if _mul_keys(system, inv(nk), target) in suffix[j + 1]:
                bits.append(b)
                yield from rec(j + 1, nk, bits)
                bits.pop()

    yield from rec(0, system.identity_key, [])


def _inverse_key(system):
    from .coxeter import inverse

    def inv(key):
        return inverse(Element(system, key)).key
    return inv


def _mul_keys(system, a, b):
    return (Element(system, a) * Element(system, b)).key


def mu_masks(system: CoxeterSystem, word: Word, x: Element) -> list[Mask]:
    """
    Proper masks with ``w^sigma = x`` and ``D(sigma) = 1``.

    Their number is ``mu(x, w)`` when the word is bounded (a Deodhar element).
    """
    word = check_word(system, word)
    if not is_bounded(system, word):
        raise UnsupportedError("mu-masks only count mu(x, w) for Deodhar elements")
    out = []
    w_len = len(word)
    for mask, prof in masks_evaluating_to(system, word, x):
        if is_proper(mask) and prof.deodhar_statistic == 1:
            assert 2 * prof.defects == w_len - x.length() - 1
            out.append(mask)
    return out
