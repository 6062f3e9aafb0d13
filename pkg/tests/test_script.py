from __future__ import annotations

import unicodedata

import pytest
from hypothesis import given, strategies as st

from tamilmorph import script
from tamilmorph.script import Kind, MalformedInput


@pytest.mark.parametrize("text, kind, base, vowel", [
    ("து", Kind.COMPOSITE, "த", "உ"),
    ("அ", Kind.VOWEL, None, "அ"),
    ("தொ", Kind.COMPOSITE, "த", "ஒ"),
    ("த்", Kind.CONSONANT, "த", None),
    ("ஃ", Kind.AYTHAM, None, None),
    ("ஜ", Kind.GRANTHA, "ஜ", "அ"),
    ("x", Kind.NON_TAMIL, None, None),
])
def test_single_letter(text, kind, base, vowel):
    (ch,) = script.segment(text)
    assert (ch.kind, ch.base, ch.vowel, ch.raw) == (kind, base, vowel, text)


def test_vowel_sign_encoding():
    # து and தொ are each one letter written with two code points
    assert len("து") == 2 and len(script.segment("து")) == 1
    assert len(unicodedata.normalize("NFC", "தொ")) == 2 and len(script.segment("தொ")) == 1


def test_conjunct_grantha():
    chars = script.segment("க்ஷ")
    assert [c.kind for c in chars] == [Kind.GRANTHA]


def test_word_segmentation():
    assert [c.raw for c in script.segment("மரங்களினால்")] == ["ம", "ர", "ங்", "க", "ளி", "னா", "ல்"]


@pytest.mark.parametrize("bad, offset", [("ு", 0), ("மு்", 2), ("அா", 1)])
def test_orphan_sign_reports_offset(bad, offset):
    with pytest.raises(MalformedInput) as exc:
        script.segment(bad)
    assert exc.value.offset == offset


@pytest.mark.parametrize("base, vowel, out", [("த்", "உ", "து"), ("த்", "அ", "த"), ("ப்", "ஊ", "பூ")])
def test_compose(base, vowel, out):
    assert script.compose(base, vowel).raw == out


@pytest.mark.parametrize("base, vowel", [("அ", "உ"), ("த்", "க்"), ("x", "அ")])
def test_compose_rejects(base, vowel):
    with pytest.raises(ValueError):
        script.compose(base, vowel)


def test_alphabet_counts():
    letters = script.alphabet()
    assert len(letters) == 247 == len(set(letters))
    grid = [script.compose(c, v).raw for c in script.CONSONANTS for v in script.VOWELS]
    assert len(set(grid)) == 216


def test_grid_is_bijective():
    for c in script.CONSONANTS:
        for v in script.VOWELS:
            ch = script.compose(c, v)
            (seg,) = script.segment(ch.raw)
            assert seg == ch
            assert script.compose(*script.decompose(ch)) == ch


def test_phonemes_round_trip_words():
    for w in ("மரங்களினால்", "வந்துகொண்டிருந்திருக்கிறான்", "ஃ", "ஆவினுக்கு"):
        assert script.from_phonemes(script.to_phonemes(w)) == w
    assert script.to_phonemes("கடா") == ("க்", "அ", "ட்", "ஆ")


def test_normalize_composes_split_vowel_sign():
    decomposed = "த" + "ெ" + "ா"  # ெ + ா is the decomposed ொ
    assert script.normalize(decomposed) == "தொ"


tamil_text = st.lists(st.sampled_from(script.alphabet() + ["ஜ", "ஷ", "ஸ", "ஹ", "ஸ்ரீ", " ", "a"]),
                      max_size=12).map("".join)


@given(tamil_text)
def test_segment_round_trip(text):
    chars = script.segment(text)
    assert script.join_letters(chars) == text
    assert script.segment(text) == chars


def _canonical(text: str) -> bool:
    # a pure consonant followed by an independent vowel letter is written as one composite
    chars = script.segment(text)
    return not any(a.raw.endswith(script.VIRAMA) and b.kind is script.Kind.VOWEL
                   for a, b in zip(chars, chars[1:]))


@given(tamil_text.filter(_canonical))
def test_phoneme_round_trip(text):
    assert script.from_phonemes(script.to_phonemes(text)) == text


@given(tamil_text)
def test_phonemes_are_a_fixpoint(text):
    ph = script.to_phonemes(text)
    assert script.to_phonemes(script.from_phonemes(ph)) == ph


def test_consonant_then_vowel_letter_composes():
    assert script.from_phonemes(script.to_phonemes("க்அ")) == "க"
