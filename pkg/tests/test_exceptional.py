import json
from fractions import Fraction

import pytest

from enriques.certificates import dumps
from enriques.errors import BadParameter, NotEffective, UnsupportedModel
from enriques.exceptional import (
    Tag, Verdict, classify_exceptional, closed_forms, construct_exceptional, gap_check,
    rational_class_admissible, seshadri_point_lower_bound, verify_eps_equals_phi,
)
from enriques.invariants import length, phi
from enriques.lattice import E1, E2, E9, E10, E910, pair

TEMPLATES = [(Tag.TYPE_I, None), (Tag.TYPE_II, None)] + [
    (t, h) for t in (Tag.TYPE_III, Tag.TYPE_IV) for h in range(1, 6)]


@pytest.mark.parametrize("tag,h", TEMPLATES, ids=lambda x: str(getattr(x, "value", x)))
def test_template_invariants(tag, h):
    C = construct_exceptional(tag, h)
    sq, p, l = closed_forms(tag, h)
    assert (pair(C, C), phi(C), length(C, cap=200)) == (sq, p, l)
    assert sq == p * (p + 1) - 2
    t = classify_exceptional(C, cap=200)
    assert (t.tag, t.h, t.m) == (tag, h, p + 1)


def test_spec_closed_forms():
    assert closed_forms("type_iii", 1) == (10, 3, 3)
    assert closed_forms("type_iv", 1) == (18, 4, 4)


def test_type_ii_and_type_iv_2_are_separated():
    assert closed_forms(Tag.TYPE_II) == closed_forms(Tag.TYPE_IV, 2)
    assert classify_exceptional(construct_exceptional(Tag.TYPE_IV, 2)).tag is Tag.TYPE_IV


def test_classify_small_squares():
    assert classify_exceptional(E1 - E2).tag is Tag.MINUS_TWO
    assert classify_exceptional(E1 * 2).tag is Tag.HALF_PENCIL
    assert classify_exceptional(E1 * 2 + E2).tag is Tag.NONE
    with pytest.raises(NotEffective):
        classify_exceptional(-(E1 + E2))


def test_construct_rejects_bad_h():
    with pytest.raises(BadParameter):
        construct_exceptional(Tag.TYPE_III, 0)
    with pytest.raises(BadParameter):
        construct_exceptional(Tag.NONE)


def test_admissibility():
    assert rational_class_admissible(construct_exceptional(Tag.TYPE_II))
    assert not rational_class_admissible(construct_exceptional(Tag.TYPE_I))
    assert not rational_class_admissible(E1)
    assert rational_class_admissible(E1 * 2)
    with pytest.raises(UnsupportedModel):
        rational_class_admissible(E1 * 2, "general")


def test_point_lower_bound():
    assert seshadri_point_lower_bound(6).value == 3
    assert seshadri_point_lower_bound(6).generic_value == 6
    assert seshadri_point_lower_bound(6, 1).value == 1
    assert seshadri_point_lower_bound(5, 7).value == Fraction(5, 2)
    with pytest.raises(BadParameter):
        seshadri_point_lower_bound(0)


def test_gap_check():
    H = E1 * 2 + E2
    assert gap_check(H, E1, 1).verdict is Verdict.NO_GAP
    C = construct_exceptional(Tag.TYPE_II)
    H40 = C
    cert = gap_check(H40, C, 7)
    assert cert.verdict is Verdict.CONSTRAINED and cert.exceptional_type.tag is Tag.TYPE_II
    assert cert.validate()
    assert gap_check(H40, C, 8).verdict is Verdict.IMPOSSIBLE


@pytest.mark.parametrize("H", [E1 * 2 + E2, E1 + E2, (E9 + E10 + E910) * 2], ids=str)
def test_theorem_replay(H):
    cert = verify_eps_equals_phi(H)
    assert cert.verdict is Verdict.IMPOSSIBLE
    assert cert.validate()
    assert all(s.citation for s in cert.steps)
    tail = cert.steps[-5:]
    assert tail == cert.obstruction.steps
    data = json.loads(dumps(cert.to_json()))
    assert data["verdict"] == "impossible" and len(data["steps"]) == len(cert.steps)
