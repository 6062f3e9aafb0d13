"""Lexicon loading, validation and noun class assignment."""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from . import script
from .script import LONG_VOWELS, SHORT_VOWELS

POS = ("noun", "verb", "adjective", "adverb", "particle")
VERB_CLASSES = ("1", "2", "3", "4", "5", "6.1", "6.2", "6.3",
                "7", "8", "9", "10", "11", "12", "irr")
IRREGULAR_VERBS = ("காண்", "வா", "சா", "தா", "வே", "போ", "ஆகு")
RATIONALITY = ("rational", "irrational")
GENDERS = ("masc", "fem", "neuter", "epicene")

# Human collectives whose shape says nothing about their missing plural.
CLASS5_ALLOWLIST = frozenset({"பலர்", "சிலர்", "எல்லோர்", "யாவர்"})


class LexiconError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class LexEntry:
    lemma: str
    pos: str
    noun_class: int | None = None
    verb_class: str | None = None
    rationality: str | None = None
    gender: str | None = None
    gloss: str = ""
    # fully inflected closed-class forms (pronouns): (base lemma, "sg.dat")
    fixed: tuple[str, str] | None = None
    line: int | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        if self.pos not in POS:
            raise LexiconError(f"unknown part of speech {self.pos!r}", self.line)
        if self.pos == "noun":
            if self.noun_class is None and self.fixed is None:
                raise LexiconError(f"noun {self.lemma} has no class", self.line)
            if self.rationality not in RATIONALITY:
                raise LexiconError(f"noun {self.lemma} needs rationality", self.line)
        if self.pos == "verb" and self.verb_class not in VERB_CLASSES:
            raise LexiconError(f"verb {self.lemma} has bad class {self.verb_class!r}", self.line)

    @property
    def letters(self) -> list[script.TamilChar]:
        return script.segment(self.lemma)

    @property
    def rational(self) -> bool:
        return self.rationality == "rational"

    @property
    def is_irregular(self) -> bool:
        return self.verb_class == "irr"

    @property
    def class_token(self) -> str:
        if self.fixed:
            return f"fixed:{self.fixed[0]}:{self.fixed[1]}"
        if self.pos == "noun":
            return str(self.noun_class)
        if self.pos == "verb":
            return str(self.verb_class)
        return ""

    def to_row(self) -> str:
        return "\t".join([self.lemma, self.pos, self.class_token,
                          self.rationality or "", self.gender or "", self.gloss])


def _long_first(chars: list[script.TamilChar]) -> bool:
    return chars[0].vowel in LONG_VOWELS


def classify_noun(lemma: str) -> tuple[int, ...]:
    """Candidate paradigm classes for a noun, decided from its final letters.

    Class 5 is returned only for the allowlist; ambiguous shapes return
    every candidate.
    """
    if not lemma:
        raise ValueError("empty lemma")
    if lemma in CLASS5_ALLOWLIST:
        return (5,)
    chars = script.segment(lemma)
    n = len(chars)
    last = chars[-1]
    final_cons = last.kind is script.Kind.CONSONANT or (
        last.kind is script.Kind.GRANTHA and last.vowel is None)
    if final_cons:
        c = last.base
        if c == "ம":
            return (15,)
        if c == "ண":
            return (9,)
        if c == "ன":
            return (10,) if n == 2 else (11,)
        if c == "ல":
            return (4,) if n == 2 and _long_first(chars) else (12,)
        if c == "ள":
            if n == 2 and _long_first(chars):
                return (4, 14)
            return (13,)
        if c == "ர":
            # கார் declines like கால்; the oblique அற்று belongs to சுவர்-type words
            return (4,) if n == 2 and _long_first(chars) else (16,)
        if c == "ய":
            return (2,)
        return (4,)
    v = last.vowel
    if n == 1:
        return (3,) if v in LONG_VOWELS else (2,)
    if v == "உ":
        if last.base == "ட":
            return (6,) if n == 2 and _long_first(chars) else (7,)
        if last.base == "ற":
            return (8,)
        if n == 2 and chars[0].vowel in SHORT_VOWELS and chars[0].kind is not script.Kind.VOWEL:
            return (1,)
        return (7,)
    if v in ("ஆ", "ஊ"):
        return (1,)
    return (2,)


def _parse_class(tok: str, pos: str, lemma: str, line: int):
    if pos == "noun":
        if tok == "auto":
            return classify_noun(lemma), None, None
        if tok.startswith("fixed:"):
            parts = tok.split(":")
            if len(parts) != 3 or not parts[1] or not parts[2]:
                raise LexiconError(f"bad fixed-form class {tok!r}", line)
            return (None,), None, (parts[1], parts[2])
        try:
            k = int(tok)
        except ValueError:
            raise LexiconError(f"unknown noun class {tok!r}", line) from None
        if not 1 <= k <= 16:
            raise LexiconError(f"noun class {k} out of range", line)
        return (k,), None, None
    if pos == "verb":
        if tok == "auto":
            raise LexiconError("verb classes are lexical; 'auto' not allowed", line)
        if tok not in VERB_CLASSES:
            raise LexiconError(f"unknown verb class {tok!r}", line)
        if tok == "irr" and lemma not in IRREGULAR_VERBS:
            raise LexiconError(f"{lemma} is not a known irregular verb", line)
        return (None,), tok, None
    if tok not in ("", "-"):
        raise LexiconError(f"class {tok!r} given for {pos}", line)
    return (None,), None, None


class Lexicon:
    """Immutable collection of entries indexed by lemma and (lemma, pos)."""

    def __init__(self, entries: Iterable[LexEntry] = ()):
        self._entries: list[LexEntry] = []
        self._by_lemma: dict[str, list[LexEntry]] = {}
        self._by_key: dict[tuple[str, str], list[LexEntry]] = {}
        seen: set[tuple] = set()
        for e in entries:
            key = (e.lemma, e.pos, e.class_token)
            if key in seen:
                raise LexiconError(f"duplicate entry {e.lemma} {e.pos} {e.class_token}", e.line)
            seen.add(key)
            self._entries.append(e)
            self._by_lemma.setdefault(e.lemma, []).append(e)
            self._by_key.setdefault((e.lemma, e.pos), []).append(e)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[LexEntry]:
        return iter(self._entries)

    def __contains__(self, lemma: str) -> bool:
        return lemma in self._by_lemma

    def lookup(self, lemma: str, pos: str | None = None) -> list[LexEntry]:
        if pos is None:
            return list(self._by_lemma.get(lemma, ()))
        return list(self._by_key.get((lemma, pos), ()))

    def by_pos(self, pos: str) -> list[LexEntry]:
        return [e for e in self._entries if e.pos == pos]

    def dumps(self) -> str:
        return "".join(e.to_row() + "\n" for e in self._entries)


def load(source: TextIO | str | Path) -> Lexicon:
    """Read a TSV lexicon: lemma, pos, class, rationality, gender, gloss."""
    if isinstance(source, Path):
        with source.open(encoding="utf-8") as fh:
            return load(fh)
    if isinstance(source, str):
        source = io.StringIO(source)
    entries: list[LexEntry] = []
    for lineno, raw in enumerate(source, 1):
        text = raw.rstrip("\n").rstrip("\r")
        if not text.strip() or text.lstrip().startswith("#"):
            continue
        if text != script.normalize(text):
            raise LexiconError("row is not NFC-normalised", lineno)
        cols = text.split("\t")
        if len(cols) < 2:
            raise LexiconError("expected at least lemma and pos columns", lineno)
        cols += [""] * (6 - len(cols))
        if len(cols) > 6:
            raise LexiconError(f"expected 6 columns, got {len(cols)}", lineno)
        lemma, pos, cls, rat, gender, gloss = (c.strip() for c in cols)
        if not script.is_tamil_word(lemma):
            raise LexiconError(f"lemma {lemma!r} is not Tamil", lineno)
        if pos not in POS:
            raise LexiconError(f"unknown part of speech {pos!r}", lineno)
        if gender and gender not in GENDERS:
            raise LexiconError(f"unknown gender {gender!r}", lineno)
        if rat and rat not in RATIONALITY:
            raise LexiconError(f"unknown rationality {rat!r}", lineno)
        noun_classes, vclass, fixed = _parse_class(cls, pos, lemma, lineno)
        for k in noun_classes:
            entries.append(LexEntry(lemma, pos, k, vclass, rat or None,
                                    gender or None, gloss, fixed, lineno))
    return Lexicon(entries)


def default_lexicon_path() -> Path:
    return Path(__file__).parent / "data" / "lexicon.tsv"


def load_default() -> Lexicon:
    return load(default_lexicon_path())
