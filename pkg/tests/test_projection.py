import pytest

from deodhar import PreconditionError, build_system, element_from_word, enumerate_elements
from deodhar.heaps import pi_hypotheses, pi_project
from deodhar.masks import defect_profile, is_bounded
from oracles import masks

# the two D4 elements meeting every hypothesis, found by scanning the group
ELIGIBLE = ("1~ 2 1 3 2 1~", "1 2 1~ 3 2 1")
APART_FAILURE = (1, 1, 0, 0, 1, 0)


def _element(D4, text):
    w, ok = element_from_word(D4, D4.parse_word(text))
    assert ok
    return w, D4.parse_word(text)


def test_eligible_elements_are_exactly_two(D4):
    found = []
    for w in enumerate_elements(D4):
        try:
            pi_hypotheses(w)
        except PreconditionError:
            continue
        found.append(w.one_line)
    assert sorted(found) == sorted([(-4, -3, -2, -1), (4, -3, -2, 1)])


def _check(D4, w, word, mask):
    proj = pi_project(w, mask, word)
    A = proj.system
    old = defect_profile(D4, word, mask)
    new = defect_profile(A, proj.word, proj.mask)
    right_ok = all(
        old.statuses[i] == new.statuses[proj.image[i]]
        for i, s in enumerate(word) if D4.column(s) >= 2
    )
    return proj, old, new, right_ok


@pytest.mark.parametrize("text", ELIGIBLE)
def test_projection_lands_in_bounded_type_a(D4, text):
    w, word = _element(D4, text)
    proj = pi_project(w, (1,) * len(word), word)
    assert proj.system.family == "A" and proj.system.rank == 5
    assert len(proj.word) == len(word) + 3
    assert is_bounded(proj.system, proj.word)
    assert sorted([*proj.image.values(), *proj.added]) == list(range(len(proj.word)))


@pytest.mark.parametrize("text", ELIGIBLE)
def test_statistic_preserved_on_every_mask(D4, text):
    w, word = _element(D4, text)
    for mask in masks(len(word)):
        _, old, new, _ = _check(D4, w, word, mask)
        assert new.deodhar_statistic == old.deodhar_statistic


@pytest.mark.parametrize("text", ELIGIBLE)
def test_statuses_preserved_except_apart_mask(D4, text):
    w, word = _element(D4, text)
    bad = []
    for mask in masks(len(word)):
        proj, _, _, ok = _check(D4, w, word, mask)
        if not ok:
            bad.append((mask, proj.case))
    # the one mask where the "apart" row turns a one-defect hinge into a plain-one
    assert bad == [(APART_FAILURE, "d zero-defect, z zero, strings apart")]


def test_plain_one_row_adds_ones(D4):
    w, word = _element(D4, ELIGIBLE[0])
    proj = pi_project(w, (1,) * 6, word)
    assert proj.case == "d plain-one"
    assert [proj.mask[p] for p in proj.added] == [1, 1, 1]


def test_all_cases_reached(D4):
    cases = set()
    for text in ELIGIBLE:
        w, word = _element(D4, text)
        for mask in masks(6):
            cases.add(pi_project(w, mask, word).case)
    assert {
        "d plain-one", "d zero-defect, z one",
        "d zero-defect, z zero, strings meet", "d zero-defect, z zero, strings apart",
    } <= cases


def test_precondition_errors(D3, D4, A3):
    with pytest.raises(PreconditionError):
        pi_project(A3.identity(), ())
    with pytest.raises(PreconditionError, match="column 1"):
        w, word = _element(D4, "1 2 1~")
        pi_project(w, (1, 1, 1), word)
    w, word = _element(D3, "1 2 1~ 2 1")
    with pytest.raises(PreconditionError, match="not convex"):
        pi_project(w, (1,) * 5, word)
