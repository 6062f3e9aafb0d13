from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from tamilmorph import sandhi, script
from tamilmorph.sandhi import AlreadyAugmented


@pytest.mark.parametrize("stem, suffix, cls, surface, rule", [
    ("கதிரை", "உடன்", 2, "கதிரையுடன்", "glide-y"),
    ("கதிரை", "கள்", 2, "கதிரைகள்", "plain-concat"),
    ("கதிரை", "க்கு", 2, "கதிரைக்கு", "plain-concat"),
    ("பூ", "கள்", 1, "பூக்கள்", "stop-k-plural"),
    ("புல்", "கள்", 12, "புற்கள்", "assim-l-r"),
    ("முள்", "கள்", 13, "முட்கள்", "assim-ll-tt"),
    ("மரம்", "கள்", 15, "மரங்கள்", "assim-m-ng"),
    ("மாணவன்", "கள்", 11, "மாணவர்கள்", "assim-n-r-plural"),
    ("பசு", "ஐ", 1, "பசுவை", "glide-v"),
    ("ஆ", "இன்", None, "ஆவின்", "glide-v"),
    ("கண்", "ஐ", 9, "கண்ணை", "double-final"),
    ("கொழும்பு", "இல்", 7, "கொழும்பில்", "u-elision"),
])
def test_join(stem, suffix, cls, surface, rule):
    res = sandhi.join(stem, suffix, cls)
    assert (res.surface, res.rule_id) == (surface, rule)
    assert sandhi.apply_rule(res.rule_id, stem, suffix) == surface


@pytest.mark.parametrize("word, aug, out", [
    ("வாங்க", "c", "வாங்கச்"), ("வாங்கி", "k", "வாங்கிக்"), ("எனக்கு", "p", "எனக்குப்"),
])
def test_external_augment(word, aug, out):
    assert sandhi.external_augment(word, aug) == out
    assert sandhi.strip_augment(out) == (word, aug)


def test_augment_twice_is_an_error():
    with pytest.raises(AlreadyAugmented):
        sandhi.external_augment("வாங்கச்", "k")
    with pytest.raises(ValueError):
        sandhi.external_augment("வாங்க", "x")


@pytest.mark.parametrize("first, second, out, rule", [
    ("வாங்க", "செய்தான்", "வாங்கச்செய்தான்", "stop-double"),
    ("வாங்கி", "கொடுத்தான்", "வாங்கிக்கொடுத்தான்", "stop-double"),
    ("வந்து", "இருந்தான்", "வந்திருந்தான்", "u-elision"),
])
def test_join_compound(first, second, out, rule):
    res = sandhi.join_compound(first, second)
    assert (res.surface, res.rule_id) == (out, rule)


def test_glide_choice_follows_vowel_frontness():
    for v in ("இ", "ஈ", "எ", "ஏ", "ஐ"):
        assert sandhi.join(script.compose("க்", v).raw, "ஆல்", 2).rule_id == "glide-y"
    for v in ("அ", "ஆ", "ஊ", "ஒ", "ஓ", "ஔ"):
        assert sandhi.join(script.compose("க்", v).raw, "ஆல்", 1).rule_id == "glide-v"


def test_rule_table_has_ids_for_every_forced_rule():
    assert set(sandhi._APPLY) == set(sandhi.RULES)
    assert "plain-concat" in sandhi.dump_rules()


stems = st.sampled_from(["கதிரை", "பூ", "புல்", "மரம்", "கண்", "காடு", "பசு", "எலி", "ஆறு",
                         "சுவர்", "மாணவன்", "முள்", "நாள்", "ஈ", "நெய்"])
suffixes = st.sampled_from(["கள்", "ஐ", "ஆல்", "உடன்", "உக்கு", "இல்", "இன்", "அது"])


@given(stems, suffixes)
def test_split_inverts_join(stem, suffix):
    from tamilmorph.lexicon import classify_noun
    cls = classify_noun(stem)[0]
    res = sandhi.join(stem, suffix, cls)
    splits = list(sandhi.split_candidates(res.surface, suffix, cls))
    assert (stem, res.rule_id) in splits


@given(stems, suffixes)
def test_join_is_deterministic(stem, suffix):
    assert sandhi.join(stem, suffix, 4) == sandhi.join(stem, suffix, 4)
