from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from tamilmorph import clitics, lexicon
from tamilmorph.analyzer import Analyzer
from tamilmorph.clitics import CliticError


@pytest.mark.parametrize("token, stem, clitic", [
    ("அவனா", "அவன்", "q_aa"),
    ("தவறுதான்", "தவறு", "emph_taan"),
    ("கொழும்புக்கா", "கொழும்புக்கு", "q_aa"),
    ("போனானா", "போனான்", "q_aa"),
])
def test_strip(token, stem, clitic):
    assert (stem, clitic) in clitics.strip(token)


def test_no_clitic_only(an):
    assert clitics.strip("மரம்") == [("மரம்", None)]
    assert all(a.features.clitic is None for a in an.analyze("மரம்"))


@pytest.mark.parametrize("stem, clitic, surface", [
    ("போனான்", "q_aa", "போனானா"),
    ("கொழும்புக்கு", "q_aa", "கொழும்புக்கா"),
    ("தவறு", "emph_taan", "தவறுதான்"),
    ("நான்", "incl_um", "நானும்"),
])
def test_attach(stem, clitic, surface):
    assert clitics.attach(stem, clitic) == surface


def test_attach_errors():
    with pytest.raises(CliticError):
        clitics.attach("எனக்குச்", "q_aa")
    with pytest.raises(CliticError):
        clitics.attach("மரம்", "nope")


@pytest.mark.parametrize("token, lemma, tag", [
    ("அவனா", "அவன்", "n.sg.nom.q_aa"),
    ("தவறுதான்", "தவறு", "n.sg.nom.emph_taan"),
    ("கொழும்புக்கா", "கொழும்பு", "n.sg.dat.q_aa"),
    ("போனானா", "போ", "v.past.3sm.q_aa"),
])
def test_analyse_with_clitic(an, token, lemma, tag):
    assert (lemma, tag) in {(a.lemma, a.tag) for a in an.analyze(token)}


def test_ee_disabled_by_default(an, lex):
    assert all("emph_ee" not in a.tag for a in an.analyze("அவனே"))
    with_ee = Analyzer(lex, clitics.DEFAULT_ENABLED | {"emph_ee"})
    assert "n.sg.nom.emph_ee" in {a.tag for a in with_ee.analyze("அவனே")}


def test_um_ambiguity_surfaced(an):
    tags = {a.tag for a in an.analyze("செய்யும்")}
    assert "v.fut_um.3sn" in tags and "v.imp.2s.incl_um" in tags


_STEMS = ["அவன்", "மரம்", "கதிரை", "கொழும்புக்கு", "போனான்", "தவறு", "நான்", "வீட்டில்", "பூ", "எலி"]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(_STEMS), st.sampled_from(sorted(clitics.DEFAULT_ENABLED | {"emph_ee"})))
def test_round_trip(stem, clitic):
    enabled = clitics.DEFAULT_ENABLED | {"emph_ee"}
    assert (stem, clitic) in clitics.strip(clitics.attach(stem, clitic), enabled=enabled)
