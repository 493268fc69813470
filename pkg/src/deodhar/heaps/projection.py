"""Projection of masks on convex type D heaps with three first-column entries to type A."""

from __future__ import annotations

from dataclasses import dataclass

from ..coxeter import CoxeterSystem, Element, Word, build_system, check_word, reduced_word
from ..errors import PreconditionError
from ..masks import Mask, Status, defect_profile, is_deodhar
from .heap import coalesce, heap_from_word
from .shapes import minimal_pairs_and_convexity

__all__ = ["Projection", "pi_project", "pi_hypotheses"]


@dataclass(frozen=True)
class Projection:
    system: CoxeterSystem
    word: Word
    mask: Mask
    case: str
    image: dict[int, int]  # old entry id -> position in the new word
    added: tuple[int, int, int]  # positions of the new entries, top to bottom


def pi_hypotheses(w: Element, word: Word | None = None):
    """
    Check the hypotheses on ``w`` and return ``(word, coalesced heap, bottom, z, d)``.

    Raises PreconditionError naming the first hypothesis that fails.
    """
    system = w.system
    if system.family != "D":
        raise PreconditionError("pi_project needs a type D element")
    try:
        _, convex = minimal_pairs_and_convexity(w)
    except PreconditionError:
        convex = False
    if not convex:
        raise PreconditionError(f"{w!r} is not convex")
    if not is_deodhar(w):
        raise PreconditionError(f"{w!r} is not a Deodhar element")
    word = reduced_word(w) if word is None else check_word(system, word)
    heap = coalesce(heap_from_word(system, word))
    first = heap.column_entries(1)
    if len(first) != 3 or len({e.level for e in first}) != 3:
        raise PreconditionError(f"column 1 must hold three entries on distinct levels, found {len(first)}")
    bottom, z, d = first
    if heap.at(2, d.level + 1):
        raise PreconditionError("an entry sits directly northeast of the top entry of column 1")
    return word, heap, bottom, z, d


def pi_project(w: Element, mask, word: Word | None = None) -> Projection:
    """
    Add three entries to the left of column 1 and renumber columns ``j -> j+2``.

    With ``z`` the middle and ``d`` the top entry of column 1, the new entries
    sit at (2, level(z)+1), (1, level(z)), (2, level(z)-1) and receive mask
    values by case; old entries keep theirs except that ``z`` becomes 1 in
    the last case:

    ========================================  =========  =====
    case                                      new bits   z
    ========================================  =========  =====
    d not a zero-defect                       1 1 1      kept
    d zero-defect, z has mask 1               0 0 1      kept
    d zero-defect, z has mask 0, meet         0 1 0      kept
    d zero-defect, z has mask 0, apart        1 0 1      1
    ========================================  =========  =====

    New bits are listed top to bottom.  Whether the strings of ``d`` meet at ``z`` is
    read from the column 2 entry just below ``d``: they meet when it bounces.
    """
    word, heap, bottom, z, d = pi_hypotheses(w, word)
    system = w.system
    mask = tuple(int(b) for b in mask)
    prof = defect_profile(system, word, mask)
    status_d = prof.statuses[d.id]
    new_z = mask[z.id]
    if status_d is not Status.ZERO_DEFECT:
        # the table only lists a plain-one d; the same row serves every non zero-defect
        case, added = f"d {status_d.value}", (1, 1, 1)
    else:
        if mask[z.id]:
            case, added = "d zero-defect, z one", (0, 0, 1)
        else:
            hinge = heap.at(2, d.level - 1)
            if len(hinge) != 1:
                raise PreconditionError("no column 2 entry just below the top entry of column 1")
            if not mask[hinge[0].id]:
                case, added = "d zero-defect, z zero, strings meet", (0, 1, 0)
            else:
                case, added = "d zero-defect, z zero, strings apart", (1, 0, 1)
                new_z = 1

    lz = z.level
    cells = [(e.level, system.column(e.generator) + 2, e.id) for e in heap.entries]
    cells += [(lz + 1, 2, -1), (lz, 1, -2), (lz - 1, 2, -3)]
    cells.sort()
    target = build_system("A", system.rank + 1)
    new_word = tuple(c for _, c, _ in cells)
    bits = {e.id: mask[e.id] for e in heap.entries}
    bits[z.id] = new_z
    bits.update({-1: added[0], -2: added[1], -3: added[2]})
    new_mask = tuple(bits[i] for _, _, i in cells)
    pos = {i: p for p, (_, _, i) in enumerate(cells)}
    return Projection(
        system=target, word=new_word, mask=new_mask, case=case,
        image={e.id: pos[e.id] for e in heap.entries},
        added=(pos[-1], pos[-2], pos[-3]),
    )
