"""Morpheme-junction rules.

Rules operate on phoneme tuples (pure consonants and independent vowels);
surface strings are converted on the way in and out.  Every join reports the
id of the rule that fired so analyses can be replayed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import script
from .script import FRONT_VOWELS, SHORT_VOWELS, VIRAMA, from_phonemes, to_phonemes

AUGMENTS = {"k": "க்", "c": "ச்", "t": "த்", "p": "ப்"}
AUGMENT_NAMES = {v: k for k, v in AUGMENTS.items()}
HARD_STOPS = ("க்", "ச்", "த்", "ப்")

# finals doubled before a vowel in a short closed monosyllable (கண் -> கண்ண்-)
_DOUBLING_FINALS = frozenset({"ண்", "ன்", "ல்", "ள்", "ய்", "ழ்"})

PLAIN = "plain-concat"


@dataclass(frozen=True)
class SandhiRule:
    rule_id: str
    kind: str  # glide_insert | stop_insert | assimilate | double_final | elide | external_augment
    description: str


RULES: dict[str, SandhiRule] = {r.rule_id: r for r in [
    SandhiRule(PLAIN, "concat", "no change at the junction"),
    SandhiRule("glide-y", "glide_insert", "ய் between a front vowel and a vowel"),
    SandhiRule("glide-v", "glide_insert", "வ் between a back or central vowel and a vowel"),
    SandhiRule("u-elision", "elide", "stem-final உ dropped before a vowel"),
    SandhiRule("double-final", "double_final", "short monosyllable doubles its final before a vowel"),
    SandhiRule("stop-k-plural", "stop_insert", "க் inserted before கள் after classes 1 and 3"),
    SandhiRule("stop-k-dative", "stop_insert", "க் inserted before dative கு after a vowel"),
    SandhiRule("stop-double", "stop_insert", "hard initial doubled after a vowel-final non-finite form"),
    SandhiRule("assim-l-r", "assimilate", "ல் becomes ற் before க"),
    SandhiRule("assim-ll-tt", "assimilate", "ள் becomes ட் before க"),
    SandhiRule("assim-m-ng", "assimilate", "ம் becomes ங் before கள் in class 15"),
    SandhiRule("assim-n-r-plural", "assimilate", "ன் becomes ர் before கள் in class 11"),
    SandhiRule("assim-n-r", "assimilate", "ன் becomes ற் before dative கு"),
    SandhiRule("augment-k", "external_augment", "word-final க் augment"),
    SandhiRule("augment-c", "external_augment", "word-final ச் augment"),
    SandhiRule("augment-t", "external_augment", "word-final த் augment"),
    SandhiRule("augment-p", "external_augment", "word-final ப் augment"),
]}


class AlreadyAugmented(ValueError):
    pass


@dataclass(frozen=True)
class JoinResult:
    surface: str
    rule_id: str

    def __str__(self) -> str:
        return self.surface


def _keeps_final_u(ph: tuple[str, ...], text: str) -> bool:
    # two-letter words with a short open first syllable keep உ (பசு -> பசுவை)
    chars = script.segment(text)
    return (len(chars) == 2 and chars[0].kind is script.Kind.COMPOSITE
            and chars[0].vowel in SHORT_VOWELS)


def _short_monosyllable(text: str) -> bool:
    chars = script.segment(text)
    return (len(chars) == 2 and chars[0].vowel in SHORT_VOWELS
            and chars[1].kind is script.Kind.CONSONANT)


def join_ph(left: tuple[str, ...], right: tuple[str, ...], left_text: str,
            noun_class: int | None = None) -> tuple[tuple[str, ...], str]:
    if not left or not right:
        return left + right, PLAIN
    a, b = left[-1], right[0]
    a_vowel, b_vowel = script.is_vowel(a), script.is_vowel(b)
    if a_vowel and b_vowel:
        if a == "உ" and len(left) >= 2 and not _keeps_final_u(left, left_text):
            return left[:-1] + right, "u-elision"
        if a in FRONT_VOWELS:
            return left + ("ய்",) + right, "glide-y"
        return left + ("வ்",) + right, "glide-v"
    if not a_vowel and b_vowel:
        if a in _DOUBLING_FINALS and _short_monosyllable(left_text):
            return left + (a,) + right, "double-final"
        return left + right, PLAIN
    if a_vowel and not b_vowel:
        if right[:3] == ("க்", "அ", "ள்") and noun_class in (1, 3):
            return left + ("க்",) + right, "stop-k-plural"
        if right == ("க்", "உ"):
            return left + ("க்",) + right, "stop-k-dative"
        return left + right, PLAIN
    # consonant + consonant
    if b == "க்":
        if a == "ல்" and noun_class != 4:
            return left[:-1] + ("ற்",) + right, "assim-l-r"
        if a == "ள்" and noun_class in (13, 14):
            return left[:-1] + ("ட்",) + right, "assim-ll-tt"
        if a == "ம்" and noun_class == 15:
            return left[:-1] + ("ங்",) + right, "assim-m-ng"
        if a == "ன்" and noun_class == 11 and right[:3] == ("க்", "அ", "ள்"):
            return left[:-1] + ("ர்",) + right, "assim-n-r-plural"
        if a == "ன்" and right == ("க்", "உ"):
            return left[:-1] + ("ற்",) + right, "assim-n-r"
    return left + right, PLAIN


def join(stem: str, suffix: str, noun_class: int | None = None) -> JoinResult:
    """Attach ``suffix`` to ``stem`` applying at most one junction rule."""
    ph, rule = join_ph(to_phonemes(stem), to_phonemes(suffix), stem, noun_class)
    return JoinResult(from_phonemes(ph), rule)


def join_compound(first: str, second: str) -> JoinResult:
    """Join two verbal units written as one token.

    A hard initial of the second unit is doubled after an infinitive in அ or
    a participle in இ/ய்; a participle in உ elides before a vowel.
    """
    left, right = to_phonemes(first), to_phonemes(second)
    a, b = left[-1], right[0]
    if b in HARD_STOPS and a in ("அ", "இ", "ய்"):
        return JoinResult(from_phonemes(left + (b,) + right), "stop-double")
    if script.is_vowel(a) and script.is_vowel(b):
        if a == "உ":
            return JoinResult(from_phonemes(left[:-1] + right), "u-elision")
        glide = "ய்" if a in FRONT_VOWELS else "வ்"
        return JoinResult(from_phonemes(left + (glide,) + right),
                          "glide-y" if glide == "ய்" else "glide-v")
    return JoinResult(from_phonemes(left + right), PLAIN)


def external_augment(word: str, augment: str) -> str:
    """Append the word-final sandhi consonant ``k``, ``c``, ``t`` or ``p``."""
    if augment not in AUGMENTS:
        raise ValueError(f"unknown augment {augment!r}")
    if word_augment(word):
        raise AlreadyAugmented(f"{word} already ends in an augment")
    return word + AUGMENTS[augment]


def word_augment(word: str) -> str | None:
    """Name of the augment ``word`` ends in, if its final letter is a pure hard stop."""
    for name, cons in AUGMENTS.items():
        if word.endswith(cons):
            return name
    return None


def strip_augment(word: str) -> tuple[str, str] | None:
    name = word_augment(word)
    if name is None:
        return None
    return word[: -len(AUGMENTS[name])], name


def split_candidates(surface: str, suffix: str,
                     noun_class: int | None = None) -> Iterator[tuple[str, str]]:
    """Inverse of :func:`join`: stems ``s`` with ``join(s, suffix) == surface``.

    Candidates are proposed by undoing each rule and then verified forward,
    so every yielded split is exact.
    """
    sur, suf = to_phonemes(surface), to_phonemes(suffix)
    if not suf:
        return
    seen: set[str] = set()
    proposals: list[tuple[str, ...]] = []
    b = suf[0]
    # rules that leave the suffix intact at the right edge
    if len(sur) > len(suf) and sur[-len(suf):] == suf:
        left = sur[: -len(suf)]
        proposals.append(left)
        if left and left[-1] in ("ய்", "வ்"):
            proposals.append(left[:-1])
        if len(left) >= 2 and left[-1] == left[-2]:
            proposals.append(left[:-1])
        if script.is_vowel(b):
            proposals.append(left + ("உ",))
        if left and left[-1] == "க்" and (b == "க்"):
            proposals.append(left[:-1])
        if left and left[-1] in ("ற்", "ட்", "ங்", "ர்"):
            for orig in {"ற்": ("ல்", "ன்"), "ட்": ("ள்",), "ங்": ("ம்",), "ர்": ("ன்",)}[left[-1]]:
                proposals.append(left[:-1] + (orig,))
    for p in proposals:
        if not p:
            continue
        stem = from_phonemes(p)
        if stem in seen:
            continue
        seen.add(stem)
        res = join(stem, suffix, noun_class)
        if res.surface == surface:
            yield stem, res.rule_id


def dump_rules() -> str:
    return "".join(f"{r.rule_id}\t{r.kind}\t{r.description}\n" for r in RULES.values())


# -- forced application, used to replay a recorded trace ----------------------

def _insert(mid: tuple[str, ...]):
    return lambda l, r: l + mid + r


def _replace_last(new: tuple[str, ...]):
    return lambda l, r: l[:-1] + new + r


_APPLY = {
    PLAIN: lambda l, r: l + r,
    "glide-y": _insert(("ய்",)),
    "glide-v": _insert(("வ்",)),
    "u-elision": lambda l, r: l[:-1] + r,
    "double-final": lambda l, r: l + l[-1:] + r,
    "stop-k-plural": _insert(("க்",)),
    "stop-k-dative": _insert(("க்",)),
    "stop-double": lambda l, r: l + r[:1] + r,
    "assim-l-r": _replace_last(("ற்",)),
    "assim-ll-tt": _replace_last(("ட்",)),
    "assim-m-ng": _replace_last(("ங்",)),
    "assim-n-r-plural": _replace_last(("ர்",)),
    "assim-n-r": _replace_last(("ற்",)),
    "augment-k": lambda l, r: l + r,
    "augment-c": lambda l, r: l + r,
    "augment-t": lambda l, r: l + r,
    "augment-p": lambda l, r: l + r,
}


def apply_rule(rule_id: str, left: str, right: str) -> str:
    """Apply junction rule ``rule_id`` unconditionally at the left/right edge."""
    fn = _APPLY.get(rule_id)
    if fn is None:
        raise KeyError(rule_id)
    return from_phonemes(fn(to_phonemes(left), to_phonemes(right)))
