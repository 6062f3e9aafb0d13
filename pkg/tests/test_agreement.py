from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from tamilmorph import agreement as ag
from tamilmorph.agreement import AgrBundle as B, AgreementError


def _verb(an, token, tag=None):
    readings = an.analyze(token)
    return [a for a in readings if tag is None or a.tag == tag]


def test_gender_values():
    assert B.from_gender_value("aanpaal") == B(3, "sg", "masc")
    assert B.from_gender_value("palarpaal") == B(3, "pl", "epicene")
    assert B.from_gender_value("palavinpaal") == B(3, "pl", "neuter", "irrational")


@pytest.mark.parametrize("kw", [
    dict(person=2, number="pl", gender="epicene"),
    dict(person=3, number="sg", gender="epicene"),
    dict(person=1, number="sg", rationality="irrational"),
    dict(person=3, number="sg", gender="neuter", rationality="rational"),
    dict(person=4, number="sg"),
])
def test_bundle_invariants(kw):
    with pytest.raises(AgreementError):
        B(**kw)


@pytest.mark.parametrize("subject, pngs, fut_um", [
    (B(3, "sg", "masc"), ("3sm",), False),
    (B(1, "sg", case="dat"), ("3sn",), True),
    (B(3, "sg", "masc", honorific=True), ag.HONORIFIC_KEYS, False),
    (B(3, "pl", "neuter", "irrational"), ("3pn",), True),
    (B(2, "sg"), ("2s",), False),
])
def test_expected_terminal(subject, pngs, fut_um):
    exp = ag.expected_terminal(subject)
    assert exp.pngs == pngs and exp.fut_um == fut_um


def test_dative_note():
    assert ag.DEFAULT_AGREEMENT_NOTE in ag.expected_terminal(B(1, "sg", case="dat")).notes


@pytest.mark.parametrize("conjuncts, want", [
    ([B(1, "sg"), B(2, "sg")], B(1, "pl")),
    ([B(3, "sg", "neuter", "irrational")] * 2, B(3, "pl", "neuter", "irrational")),
    ([B(2, "sg"), B(3, "pl", "epicene"), B(3, "sg", "neuter", "irrational")], B(2, "pl")),
    ([B(3, "sg", "masc"), B(3, "sg", "fem")], B(3, "pl", "epicene")),
])
def test_resolve_coordination(conjuncts, want):
    assert ag.resolve_coordination(conjuncts) == want


def test_resolve_empty():
    with pytest.raises(AgreementError):
        ag.resolve_coordination([])


_BUNDLES = [B(1, "sg"), B(1, "pl"), B(2, "sg"), B(2, "pl"), B(3, "sg", "masc"),
            B(3, "sg", "fem"), B(3, "pl", "epicene"), B(3, "sg", "neuter", "irrational"),
            B(3, "pl", "neuter", "irrational")]


@given(st.lists(st.sampled_from(_BUNDLES), min_size=2, max_size=4), st.randoms())
def test_coordination_properties(conj, rnd):
    out = ag.resolve_coordination(conj)
    assert out.number == "pl"
    all_irrational = all(c.rationality == "irrational" for c in conj)
    assert out.rationality == ("irrational" if all_irrational else "rational")
    shuffled = list(conj)
    rnd.shuffle(shuffled)
    assert ag.resolve_coordination(shuffled) == out
    rational = [c.person for c in conj if c.rationality == "rational"]
    assert out.person == (min(rational) if rational else 3)


@pytest.mark.parametrize("b", _BUNDLES)
def test_singleton_idempotent(b):
    assert ag.resolve_coordination([b]) == b


@pytest.mark.parametrize("b", _BUNDLES)
def test_dative_never_first_or_second(b):
    for key in ag.expected_terminal(B(b.person, b.number, b.gender, b.rationality, case="dat")).pngs:
        assert ag.PNG_VALUES[key][0] == 3


def test_check_plural_irrational(an):
    dogs = B(3, "pl", "neuter", "irrational")
    r, _ = ag.check_readings(dogs, an.analyze("வந்தன"))
    assert r.ok and not r.leniency_applied
    r, _ = ag.check_readings(dogs, an.analyze("வந்தது"))
    assert r.status == ag.MISMATCH and r.mismatches[0].slot == "number"
    r, _ = ag.check_readings(dogs, an.analyze("வந்தது"), lenient_plural=True)
    assert r.ok and r.leniency_applied


def test_check_gender_mismatch(an):
    r, _ = ag.check_readings(B(3, "sg", "masc"), an.analyze("வந்தாள்"))
    assert r.status == ag.MISMATCH
    assert [(m.slot, m.expected, m.found) for m in r.mismatches] == [("gender", "masc", "fem")]


def test_check_dative_subject(an):
    r, chosen = ag.check_readings(B(1, "sg", case="dat"), an.analyze("தெரியும்"))
    assert r.ok and chosen.tag == "v.fut_um.3sn"


def test_check_honorific(an):
    r, _ = ag.check_readings(B(3, "sg", "masc", honorific=True), an.analyze("பேசினார்கள்"))
    assert r.ok


def test_check_non_finite(an):
    r, _ = ag.check_readings(B(3, "sg", "masc"), _verb(an, "நடக்க"))
    assert r.status == ag.NOT_APPLICABLE


def test_check_neg_illai_neutral(an):
    r, _ = ag.check_readings(B(1, "sg"), _verb(an, "நடக்கவில்லை"))
    assert r.ok and ag.NEUTRAL_NOTE in r.notes


def test_bundle_of_analyses(an):
    assert ag.bundle_of(an.analyze("எனக்கு")[0]) == B(1, "sg", case="dat")
    assert ag.bundle_of(_verb(an, "அவன்")[0]) == B(3, "sg", "masc")


def test_disjunction_undetermined(an):
    r = ag.check_disjunction([B(1, "sg"), B(2, "sg")], an.analyze("வந்தான்")[0])
    assert r.status == ag.UNDETERMINED


@pytest.mark.parametrize("lemma, case, status", [
    ("இராமன்", "acc", ag.OK),
    ("இராமன்", "nom", ag.MISMATCH),
    ("பந்து", "nom", ag.OK),
    ("பந்து", "acc", ag.OK),
])
def test_check_dom(entry, lemma, case, status):
    assert ag.check_dom(entry(lemma), case).status == status


def test_dom_definiteness_notes(entry):
    assert ag.DEFINITE_NOTE in ag.check_dom(entry("பந்து"), "acc").notes
    assert ag.INDEFINITE_NOTE in ag.check_dom(entry("பந்து"), "nom").notes


def test_equative():
    assert ag.check_equative(B(3, "sg", "masc"), B(3, "sg", "masc")).ok
    r = ag.check_equative(B(3, "sg", "masc"), B(3, "sg", "masc", case="dat"))
    assert r.status == ag.MISMATCH and r.mismatches[0].found == "dat"


def test_mismatch_record_shape():
    m = ag.Mismatch("gender", "masc", "fem")
    assert set(m.to_dict()) == {"slot", "expected", "found", "leniency_applied"}


def test_person_pairs_exhaustive():
    # lowest rational person always wins, whatever the irrational conjuncts
    for a, b in itertools.product(_BUNDLES, repeat=2):
        out = ag.resolve_coordination([a, b])
        rational = [c.person for c in (a, b) if c.rationality == "rational"]
        assert out.person == (min(rational) if rational else 3)
