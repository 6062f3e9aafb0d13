"""Tamil letters on top of Unicode code points.

Composite letters (consonant + vowel sign) are two code points but one
letter; every rule in this package works on letters or on the flat
consonant/vowel phoneme strings derived from them, never on raw code points.
"""

from __future__ import annotations

import unicodedata
from functools import lru_cache
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

VIRAMA = "்"
AYTHAM = "ஃ"

VOWELS = ("அ", "ஆ", "இ", "ஈ", "உ", "ஊ", "எ", "ஏ", "ஐ", "ஒ", "ஓ", "ஔ")
CONSONANTS = ("க", "ங", "ச", "ஞ", "ட", "ண", "த", "ந", "ப", "ம",
              "ய", "ர", "ல", "வ", "ழ", "ள", "ற", "ன")
GRANTHA = ("ஜ", "ஶ", "ஷ", "ஸ", "ஹ")

# independent vowel -> dependent sign ("" for the inherent a)
VOWEL_SIGNS = {
    "அ": "", "ஆ": "ா", "இ": "ி", "ஈ": "ீ", "உ": "ு",
    "ஊ": "ூ", "எ": "ெ", "ஏ": "ே", "ஐ": "ை",
    "ஒ": "ொ", "ஓ": "ோ", "ஔ": "ௌ",
}
SIGN_TO_VOWEL = {s: v for v, s in VOWEL_SIGNS.items() if s}

SHORT_VOWELS = frozenset("அஇஉஎஒ")
LONG_VOWELS = frozenset("ஆஈஊஏஐஓஔ")
FRONT_VOWELS = frozenset("இஈஎஏஐ")
HARD_CONSONANTS = frozenset("கசடதபற")

_BASES = frozenset(CONSONANTS) | frozenset(GRANTHA)
_CONJUNCTS = ("க்ஷ", "ஸ்ர")


class MalformedInput(ValueError):
    """Raised for text that cannot be split into Tamil letters."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class Kind(str, Enum):
    VOWEL = "vowel"
    CONSONANT = "consonant"
    COMPOSITE = "composite"
    AYTHAM = "aytham"
    GRANTHA = "grantha"
    NON_TAMIL = "non_tamil"


@dataclass(frozen=True)
class TamilChar:
    kind: Kind
    base: str | None
    vowel: str | None
    raw: str

    @property
    def is_tamil(self) -> bool:
        return self.kind is not Kind.NON_TAMIL

    @property
    def consonant(self) -> str | None:
        """The pure (virama) form of the base consonant, e.g. ``த்``."""
        if self.base is None:
            return None
        return self.base + VIRAMA

    def __str__(self) -> str:
        return self.raw


def normalize(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def segment(text: str) -> list[TamilChar]:
    """Split ``text`` into logical letters; joining ``raw`` gives ``text`` back."""
    return list(_segment(text))


@lru_cache(maxsize=1 << 16)
def _segment(text: str) -> tuple[TamilChar, ...]:
    out: list[TamilChar] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in VOWELS:
            out.append(TamilChar(Kind.VOWEL, None, ch, ch))
            i += 1
        elif ch == AYTHAM:
            out.append(TamilChar(Kind.AYTHAM, None, None, ch))
            i += 1
        elif ch in _BASES:
            base, j, kind = ch, i + 1, Kind.GRANTHA if ch in GRANTHA else None
            for conj in _CONJUNCTS:
                if text.startswith(conj, i):
                    base, j, kind = conj, i + len(conj), Kind.GRANTHA
                    break
            nxt = text[j] if j < n else ""
            if nxt == VIRAMA:
                out.append(TamilChar(kind or Kind.CONSONANT, base, None, text[i:j + 1]))
                i = j + 1
            elif nxt in SIGN_TO_VOWEL:
                out.append(TamilChar(kind or Kind.COMPOSITE, base, SIGN_TO_VOWEL[nxt], text[i:j + 1]))
                i = j + 1
            else:
                out.append(TamilChar(kind or Kind.COMPOSITE, base, "அ", text[i:j]))
                i = j
        elif ch in SIGN_TO_VOWEL or ch == VIRAMA or ch == "ௗ":
            raise MalformedInput(f"dependent sign {ch!r} without a consonant", i)
        else:
            out.append(TamilChar(Kind.NON_TAMIL, None, None, ch))
            i += 1
    return tuple(out)


def compose(base: str, vowel: str) -> TamilChar:
    """Combine a consonant (``த்`` or ``த``) with an independent vowel."""
    b = base[:-1] if base.endswith(VIRAMA) else base
    if b not in _BASES and b not in _CONJUNCTS:
        raise ValueError(f"{base!r} is not a consonant")
    if vowel not in VOWEL_SIGNS:
        raise ValueError(f"{vowel!r} is not a vowel")
    kind = Kind.GRANTHA if (b in GRANTHA or b in _CONJUNCTS) else Kind.COMPOSITE
    return TamilChar(kind, b, vowel, b + VOWEL_SIGNS[vowel])


def decompose(ch: TamilChar) -> tuple[str, str]:
    if ch.base is None or ch.vowel is None:
        raise ValueError(f"{ch.raw!r} is not a composite letter")
    return ch.base + VIRAMA, ch.vowel


def join_letters(chars: Iterable[TamilChar]) -> str:
    return "".join(c.raw for c in chars)


def is_tamil_word(text: str) -> bool:
    try:
        chars = segment(text)
    except MalformedInput:
        return False
    return bool(chars) and all(c.is_tamil for c in chars)


# -- phoneme view -------------------------------------------------------------
#
# A phoneme string is a tuple of items, each a pure consonant ("க்") or an
# independent vowel ("அ").  Non-Tamil letters pass through as themselves.

Phonemes = tuple[str, ...]


def to_phonemes(text: str | Sequence[TamilChar]) -> Phonemes:
    if isinstance(text, str):
        return _phonemes_of(text)
    return _to_phonemes(text)


@lru_cache(maxsize=1 << 16)
def _phonemes_of(text: str) -> Phonemes:
    return _to_phonemes(_segment(text))


def _to_phonemes(chars: Sequence[TamilChar]) -> Phonemes:
    out: list[str] = []
    for c in chars:
        if c.kind in (Kind.COMPOSITE, Kind.GRANTHA) and c.vowel is not None:
            out.append(c.base + VIRAMA)
            out.append(c.vowel)
        elif c.kind in (Kind.CONSONANT, Kind.GRANTHA):
            out.append(c.base + VIRAMA)
        elif c.kind is Kind.VOWEL:
            out.append(c.vowel)
        else:
            out.append(c.raw)
    return tuple(out)


def from_phonemes(ph: Sequence[str]) -> str:
    return _from_phonemes(tuple(ph))


@lru_cache(maxsize=1 << 16)
def _from_phonemes(ph: Phonemes) -> str:
    out: list[str] = []
    i, n = 0, len(ph)
    while i < n:
        p = ph[i]
        if p.endswith(VIRAMA) and i + 1 < n and ph[i + 1] in VOWEL_SIGNS:
            out.append(p[:-1] + VOWEL_SIGNS[ph[i + 1]])
            i += 2
        else:
            out.append(p)
            i += 1
    return "".join(out)


def is_consonant(p: str) -> bool:
    return p.endswith(VIRAMA)


def is_vowel(p: str) -> bool:
    return p in VOWEL_SIGNS


def letters(text: str) -> int:
    """Number of logical letters."""
    return len(segment(text))


def alphabet() -> list[str]:
    """The 247 native letters: 12 vowels, 18 consonants, 216 composites, aytham."""
    out = list(VOWELS)
    out += [c + VIRAMA for c in CONSONANTS]
    out += [c + VOWEL_SIGNS[v] for c in CONSONANTS for v in VOWELS]
    out.append(AYTHAM)
    return out
