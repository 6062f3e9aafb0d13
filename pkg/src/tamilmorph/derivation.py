"""Adjectives and adverbs: noun-derived forms, reduplication, listed intensives
and demonstratives, plus the feature record used for uninflected words."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import clitics, nouns
from .lexicon import LexEntry
from .tags import CLITICS, TagError
from .trace import Builder

# fused intensive forms are listed, not derived: surface -> base adjective
INTENSIVES = {"சின்னஞ்சிறிய": "சிறிய"}
DEMONSTRATIVES = ("இந்த", "அந்த", "உந்த", "எந்த")
LOW_CONFIDENCE = frozenset({"adj_ulla"})

_ADJ = {"aana": "adj_aana", "ulla": "adj_ulla"}
_ADV = {"aaka": "adv_aaka", "aay": "adv_aay"}
_POS_TAG = {"adjective": "adj", "adverb": "adv", "particle": "part"}


class DerivationError(TagError):
    pass


def adjectivize(noun: LexEntry, kind: str = "aana") -> str:
    """Noun + ஆன or உள்ள (உயரம் -> உயரமான)."""
    if kind not in _ADJ:
        raise DerivationError(f"unknown adjectiviser {kind!r}")
    return nouns.inflect(noun, nouns.NounFeatures(derivation=_ADJ[kind]))


def adverbialize(noun: LexEntry, kind: str = "aaka") -> str:
    """Noun + ஆக or ஆய் (வேகம் -> வேகமாக)."""
    if kind not in _ADV:
        raise DerivationError(f"unknown adverbialiser {kind!r}")
    return nouns.inflect(noun, nouns.NounFeatures(derivation=_ADV[kind]))


def nominal_modifier(noun: LexEntry, augment: str) -> str:
    """Bare noun with a sandhi augment before the noun it modifies (அமைதிப்)."""
    return nouns.inflect(noun, nouns.NounFeatures(derivation="nmod", augment=augment))


def reduplicate(adj: str) -> str:
    """Adjective doubled to modify a plural noun, written as two words."""
    return f"{adj} {adj}"


@dataclass(frozen=True)
class PlainFeatures:
    """Features of a word that does not inflect (pure adjective, adverb, particle)."""

    pos: str
    intensive: bool = False
    redup: bool = False
    clitic: str | None = None

    def tag(self) -> str:
        parts = [_POS_TAG[self.pos]]
        if self.intensive:
            parts.append("intens")
        if self.redup:
            parts.append("redup")
        if self.clitic:
            parts.append(self.clitic)
        return ".".join(parts)


def intensive_of(lemma: str) -> str | None:
    for form, base in INTENSIVES.items():
        if base == lemma:
            return form
    return None


def validate(entry: LexEntry, f: PlainFeatures) -> None:
    if f.pos != entry.pos or entry.pos not in _POS_TAG:
        raise DerivationError(f"{entry.lemma} is a {entry.pos}, not {f.pos}")
    if f.intensive and intensive_of(entry.lemma) is None:
        raise DerivationError(f"{entry.lemma} has no listed intensive form")
    if f.redup and entry.pos != "adjective":
        raise DerivationError("only adjectives reduplicate")
    if f.clitic is not None and f.clitic not in CLITICS:
        raise DerivationError(f"unknown clitic {f.clitic!r}")
    if f.clitic and f.redup:
        raise DerivationError("a reduplicated pair takes no clitic")


def build(entry: LexEntry, f: PlainFeatures) -> Builder:
    validate(entry, f)
    if f.intensive:
        b = Builder(intensive_of(entry.lemma), "intens")
    else:
        b = Builder(entry.lemma, _POS_TAG[entry.pos])
    if f.redup:
        b.append(" " + b.surface, "redup")
    if f.clitic:
        clitics.attach_builder(b, f.clitic)
    return b


def enumerate_features(entry: LexEntry) -> Iterator[PlainFeatures]:
    yield PlainFeatures(entry.pos)
    if intensive_of(entry.lemma) is not None:
        yield PlainFeatures(entry.pos, intensive=True)
