"""Noun inflection: number, oblique stem, euphonic increments, case, augment."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator

from . import clitics, sandhi, script
from .lexicon import LexEntry
from .tags import (CASE_SUFFIXES, CASES, EUPH_SEQUENCES, EUPHONICS,
                   NOUN_DERIVATIONS, TagError)
from .trace import Builder, morph_rule

OBLIQUES = ("am", "attu", "arru", "dbl")
_EUPH_CASES = frozenset({"acc", "ins", "dat", "loc"})
_AUG_CASES = frozenset({"acc", "dat"})

OBL_ATTU = morph_rule("obl-attu", "final ம் replaced by the oblique த்த்",
                      lambda l, r: l[:-1] + ("த்", "த்"))
OBL_ARRU = morph_rule("obl-arru", "final ர் replaced by the oblique ற்ற்",
                      lambda l, r: l[:-1] + ("ற்", "ற்"))
OBL_DBL = morph_rule("obl-double", "final உ dropped and the last consonant doubled",
                     lambda l, r: l[:-1] + l[-2:-1])
_OBL_MORPH = {"attu": ("அத்து", OBL_ATTU), "arru": ("அற்று", OBL_ARRU)}


class NounFeatureError(TagError):
    pass


@dataclass(frozen=True)
class NounFeatures:
    number: str = "sg"
    case: str = "nom"
    allomorph: str | None = None
    oblique: str | None = None
    euphonics: tuple[str, ...] = ()
    augment: str | None = None
    clitic: str | None = None
    honorific: bool = False
    derivation: str | None = None

    def tag(self) -> str:
        parts = ["n", self.number]
        if self.honorific:
            parts.append("hon")
        if self.oblique:
            parts.append(f"obl_{self.oblique}")
        parts += [f"euph_{e}" for e in self.euphonics]
        if not (self.derivation and self.case == "nom"):
            parts.append(self.case + (f"_{self.allomorph}" if self.allomorph else ""))
        if self.derivation:
            parts.append(self.derivation)
        if self.augment:
            parts.append(f"aug_{self.augment}")
        if self.clitic:
            parts.append(self.clitic)
        return ".".join(parts)


def required_oblique(entry: LexEntry, number: str, case: str) -> str | None:
    if number != "sg" or case in ("nom", "voc") or entry.fixed:
        return None
    return {15: "attu", 16: "arru", 6: "dbl", 8: "dbl"}.get(entry.noun_class)


def oblique_stem(entry: LexEntry) -> str:
    """Stem used before singular case suffixes (identity when the class has none)."""
    kind = {15: "attu", 16: "arru", 6: "dbl", 8: "dbl"}.get(entry.noun_class)
    return _apply_oblique(entry.lemma, kind) if kind else entry.lemma


def _apply_oblique(lemma: str, kind: str) -> str:
    if kind == "attu":
        return lemma[:-2] + "த்த்"
    if kind == "arru":
        return lemma[:-2] + "ற்ற்"
    # dbl: காடு -> காட்ட், ஆறு -> ஆற்ற்
    base = lemma[:-1]  # drop the vowel sign ு
    return base + "்" + base[-1] + "்"


def validate(entry: LexEntry, f: NounFeatures) -> None:
    if entry.pos != "noun":
        raise NounFeatureError(f"{entry.lemma} is not a noun")
    if f.number not in ("sg", "pl"):
        raise NounFeatureError(f"unknown number {f.number!r}")
    if f.case not in CASES:
        raise NounFeatureError(f"unknown case {f.case!r}")
    if f.allomorph not in CASE_SUFFIXES[f.case]:
        raise NounFeatureError(f"{f.case} has no allomorph {f.allomorph!r}")
    if f.oblique not in (None, *OBLIQUES):
        raise NounFeatureError(f"unknown oblique {f.oblique!r}")
    if f.euphonics not in EUPH_SEQUENCES:
        raise NounFeatureError(f"euphonic sequence {f.euphonics} not allowed (at most two, in order)")
    if f.euphonics and f.case not in _EUPH_CASES:
        raise NounFeatureError("euphonic increments only before acc, ins, dat or loc")
    if f.euphonics == ("in", "u") and not (f.case == "dat" and f.allomorph == "ku"):
        raise NounFeatureError("the double increment in+u only precedes dative கு")
    if f.allomorph == "ku" and not f.euphonics:
        raise NounFeatureError("dative கு only follows a euphonic increment")
    if f.allomorph == "kku" and (f.euphonics or entry.noun_class not in (2, 3)):
        raise NounFeatureError("dative க்கு only attaches directly to class 2 and 3 stems")
    if f.allomorph == "akku" and not entry.fixed:
        raise NounFeatureError("dative அக்கு occurs only in listed pronoun forms")
    if f.allomorph == "itam" and not entry.rational:
        raise NounFeatureError("இடம் marks rational nouns only")
    if f.augment is not None:
        if f.augment not in sandhi.AUGMENTS:
            raise NounFeatureError(f"unknown augment {f.augment!r}")
        if f.case not in _AUG_CASES and f.derivation != "nmod":
            raise NounFeatureError("augment only with accusative or dative (or a nominal modifier)")
        if f.clitic:
            raise NounFeatureError("augment and clitic cannot co-occur")
        if f.derivation and f.derivation != "nmod":
            raise NounFeatureError("augment cannot follow a derivational suffix")
    if f.derivation is not None:
        if f.derivation not in NOUN_DERIVATIONS:
            raise NounFeatureError(f"unknown derivation {f.derivation!r}")
        ok_case = f.case == "nom" or (f.derivation == "adv_aaka" and f.case == "dat" and f.allomorph is None)
        if not ok_case or f.euphonics:
            raise NounFeatureError(f"{f.derivation} attaches to the bare noun (ஆக also to the dative)")
        if f.derivation == "nmod" and (f.augment is None or f.number != "sg" or f.clitic):
            raise NounFeatureError("a nominal modifier is a bare singular noun with an augment")
    if f.clitic is not None and f.clitic not in clitics.CLITIC_FORMS:
        raise NounFeatureError(f"unknown clitic {f.clitic!r}")
    if f.honorific and (f.number != "pl" or not entry.rational):
        raise NounFeatureError("honorific plural only for rational nouns in the plural")
    if entry.fixed:
        num, case = entry.fixed[1].split(".")
        if (f.number, f.case) != (num, case) or f.allomorph or f.euphonics or f.derivation or f.honorific:
            raise NounFeatureError(f"{entry.lemma} is a fixed {entry.fixed[1]} form")
        return
    if f.number == "pl" and entry.noun_class == 5:
        raise NounFeatureError(f"class 5 noun {entry.lemma} has no plural")
    need = required_oblique(entry, f.number, f.case)
    if f.oblique not in (None, need):
        raise NounFeatureError(f"{entry.lemma} takes oblique {need}, not {f.oblique}")


def complete(entry: LexEntry, f: NounFeatures) -> NounFeatures:
    """Fill in the oblique the class requires."""
    if entry.pos != "noun":
        return f
    return replace(f, oblique=required_oblique(entry, f.number, f.case))


def build(entry: LexEntry, f: NounFeatures) -> Builder:
    validate(entry, f)
    f = complete(entry, f)
    if entry.fixed:
        b = Builder(entry.lemma, f"{entry.fixed[0]}.{entry.fixed[1]}")
    else:
        cls = entry.noun_class
        b = Builder(entry.lemma, "root")
        if f.number == "pl":
            b.join("கள்", "pl", cls)
        elif f.oblique == "dbl":
            b.rewrite(script.to_phonemes(entry.lemma)[-2], "obl_dbl", OBL_DBL)
        elif f.oblique:
            morph, rule = _OBL_MORPH[f.oblique]
            b.rewrite(morph, f"obl_{f.oblique}", rule)
        for e in f.euphonics:
            b.join(EUPHONICS[e], f"euph_{e}", cls)
        suffix = CASE_SUFFIXES[f.case][f.allomorph]
        if suffix:
            b.join(suffix, f.case, cls)
        if f.derivation and f.derivation != "nmod":
            b.join(NOUN_DERIVATIONS[f.derivation], f.derivation, cls)
    if f.augment:
        b.append(sandhi.AUGMENTS[f.augment], f"aug_{f.augment}", f"augment-{f.augment}")
    if f.clitic:
        clitics.attach_builder(b, f.clitic)
    return b


def inflect(entry: LexEntry, f: NounFeatures) -> str:
    """Surface form of ``entry`` under ``f``."""
    return build(entry, f).surface


def enumerate_features(entry: LexEntry, *, derivations: bool = True) -> Iterator[NounFeatures]:
    """Every valid clitic-free feature bundle for ``entry``."""
    if entry.fixed:
        num, case = entry.fixed[1].split(".")
        for aug in (None, *(sandhi.AUGMENTS if case in _AUG_CASES else ())):
            yield NounFeatures(num, case, augment=aug)
        return
    numbers = ["sg"] if entry.noun_class == 5 else ["sg", "pl"]
    for number in numbers:
        for hon in ((False, True) if number == "pl" and entry.rational else (False,)):
            for case in CASES:
                for allo in CASE_SUFFIXES[case]:
                    for euph in EUPH_SEQUENCES:
                        for aug in (None, *(sandhi.AUGMENTS if case in _AUG_CASES else ())):
                            f = NounFeatures(number, case, allo, None, euph, aug, honorific=hon)
                            if _ok(entry, f):
                                yield complete(entry, f)
                if derivations:
                    for d in NOUN_DERIVATIONS:
                        augs = sandhi.AUGMENTS if d == "nmod" else (None,)
                        for aug in augs:
                            f = NounFeatures(number, case, None, None, (), aug,
                                             honorific=hon, derivation=d)
                            if _ok(entry, f):
                                yield complete(entry, f)


def _ok(entry: LexEntry, f: NounFeatures) -> bool:
    try:
        validate(entry, f)
    except NounFeatureError:
        return False
    return True


def decline(entry: LexEntry) -> list[tuple[NounFeatures, str]]:
    """Canonical paradigm: each case with its default marker in both numbers,
    plus the four augmented variants of the accusative and dative."""
    out: list[tuple[NounFeatures, str]] = []
    numbers = ["sg"] if (entry.noun_class == 5 or entry.fixed) else ["sg", "pl"]
    for number in numbers:
        for case in CASES:
            f = complete(entry, NounFeatures(number, case))
            if not _ok(entry, f):
                continue
            out.append((f, inflect(entry, f)))
            if case in _AUG_CASES:
                for aug in sandhi.AUGMENTS:
                    fa = replace(f, augment=aug)
                    out.append((fa, inflect(entry, fa)))
    return out
