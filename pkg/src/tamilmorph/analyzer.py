"""Analysis by generation: a lazily built full-form index over the lexicon,
clitic stripping, and recursive splitting of auxiliary chains.  Every
analysis returned has been regenerated and matches the token exactly."""

from __future__ import annotations

import weakref
from dataclasses import replace
from typing import Any, Iterable, Iterator

from . import clitics, derivation, nouns, sandhi, script, verbs
from .derivation import PlainFeatures
from .lexicon import LexEntry, Lexicon
from .nouns import NounFeatures
from .tags import CASE_SUFFIXES, CASES, CLITICS, NOUN_DERIVATIONS, PNGS, TagError
from .trace import Analysis, Builder, from_builder
from .verbs import AuxLink, VerbFeatures

FUT_UM_NOTE = "ambiguous with the inclusive clitic உம்"
JOINED_NOTE = "written joined to"
HABITUAL_NOTE = "habitual negative with the following இல்லை"
LOW_CONFIDENCE_NOTE = "derivation with உள்ள is not attested as productive"


# -- dispatch --------------------------------------------------------------------

def build(entry: LexEntry, features: Any) -> Builder:
    if isinstance(features, NounFeatures):
        return nouns.build(entry, features)
    if isinstance(features, VerbFeatures):
        return verbs.build(entry, features)
    if isinstance(features, PlainFeatures):
        return derivation.build(entry, features)
    raise TagError(f"unsupported feature record {type(features).__name__}")


def enumerate_features(entry: LexEntry) -> Iterator[Any]:
    if entry.pos == "noun":
        return nouns.enumerate_features(entry)
    if entry.pos == "verb":
        return verbs.enumerate_features(entry)
    return derivation.enumerate_features(entry)


# -- tag strings -------------------------------------------------------------------

def parse_tag(tag: str) -> Any:
    """Feature record for a tag string (the inverse of ``features.tag()``)."""
    head = tag.split(".", 1)[0]
    if head == "n":
        return _parse_noun(tag.split("."))
    if head == "v":
        return _parse_verb(tag)
    inv = {v: k for k, v in derivation._POS_TAG.items()}
    if head in inv:
        parts = tag.split(".")[1:]
        f = PlainFeatures(inv[head])
        for p in parts:
            if p == "intens":
                f = replace(f, intensive=True)
            elif p == "redup":
                f = replace(f, redup=True)
            elif p in CLITICS and f.clitic is None:
                f = replace(f, clitic=p)
            else:
                raise TagError(f"unexpected {p!r} in tag {tag}")
        return f
    raise TagError(f"tag {tag!r} must start with n, v, adj, adv or part")


def _parse_noun(parts: list[str]) -> NounFeatures:
    tag = ".".join(parts)
    if len(parts) < 2 or parts[1] not in ("sg", "pl"):
        raise TagError(f"noun tag {tag} needs sg or pl")
    kw: dict[str, Any] = {"number": parts[1]}
    rest = parts[2:]
    euph: list[str] = []
    case_seen = False
    for p in rest:
        if p == "hon":
            kw["honorific"] = True
        elif p.startswith("obl_"):
            kw["oblique"] = p[4:]
        elif p.startswith("euph_"):
            euph.append(p[5:])
        elif p in NOUN_DERIVATIONS:
            kw["derivation"] = p
        elif p.startswith("aug_"):
            kw["augment"] = p[4:]
        elif p in CLITICS:
            kw["clitic"] = p
        elif not case_seen and p.split("_", 1)[0] in CASES:
            case, _, allo = p.partition("_")
            if allo and allo not in CASE_SUFFIXES[case]:
                raise TagError(f"{case} has no allomorph {allo!r}")
            kw["case"], kw["allomorph"] = case, allo or None
            case_seen = True
        else:
            raise TagError(f"unexpected {p!r} in noun tag {tag}")
    return NounFeatures(euphonics=tuple(euph), **kw)


_LINK_SPECS = {("vpart",): "vpart", ("inf",): "inf", ("neg_aa", "vpart"): "negvpart"}


def _parse_link(parts: list[str], tag: str) -> tuple[str, str | None]:
    aug = None
    if parts and parts[-1].startswith("aug_"):
        aug = parts.pop()[4:]
    link = _LINK_SPECS.get(tuple(parts))
    if link is None:
        raise TagError(f"bad auxiliary link {'.'.join(parts)!r} in {tag}")
    return link, aug


def _parse_verb(tag: str) -> VerbFeatures:
    chunks = tag.split("+")
    first = chunks[0].split(".")[1:]
    caus = bool(first) and first[0] == "caus"
    if caus:
        first = first[1:]
    if len(chunks) == 1:
        return replace(_parse_final(first, tag), causative=caus)
    link, aug = _parse_link(first, tag)
    links: list[tuple[str, str, str | None]] = []  # (aux lemma, link before it, augment)
    for chunk in chunks[1:-1]:
        lemma, *spec = chunk.split(".")
        links.append((lemma, link, aug))
        link, aug = _parse_link(spec, tag)
    lemma, *final = chunks[-1].split(".")
    links.append((lemma, link, aug))
    f = _parse_final(final, tag)
    chain = tuple(AuxLink(lem, lnk, a) for lem, lnk, a in links)
    return replace(f, causative=caus, aux_chain=chain)


def _parse_final(parts: list[str], tag: str) -> VerbFeatures:
    p = list(parts)
    kw: dict[str, Any] = {}
    if p and p[-1] in CLITICS:
        kw["clitic"] = p.pop()
    if p and p[-1].startswith("aug_"):
        kw["augment"] = p.pop()[4:]
    if p and p[0] == "pass":
        kw["passive"] = True
        p.pop(0)
    if not p:
        raise TagError(f"verb tag {tag} has no form")

    def take() -> str:
        if not p:
            raise TagError(f"verb tag {tag} ends early")
        return p.pop(0)

    head = take()
    if head == "neg_aa":
        kw["polarity"] = "neg_aa"
        nxt = take()
        if nxt in PNGS:
            kw.update(form="finite", png=nxt)
        else:
            kw["form"] = nxt
            if nxt == "imp":
                kw["png"] = take()
    elif head == "neg_maattu":
        kw.update(polarity="neg_maattu", png=take())
    elif head == "neg_illai":
        kw["polarity"] = "neg_illai"
    elif head == "fut_um":
        kw.update(form="fut_um", png=take())
    elif head in ("past", "pres", "fut"):
        kw["tense"] = head
        nxt = take()
        if nxt == "kinr":
            kw["kinr"] = True
            nxt = take()
        if nxt == "euph_an":
            kw["variant"] = "euph"
            nxt = take()
        if nxt in ("rel", "vn"):
            kw["form"] = nxt
            if nxt == "rel" and p and p[0].startswith("pron_"):
                kw.update(form="pn", pron=take()[5:], number=take(), case=take())
        else:
            png, alt, _ = nxt.partition("_alt")
            if png not in PNGS:
                raise TagError(f"unknown person ending {nxt!r} in {tag}")
            kw.update(form="finite", png=png)
            if alt:
                kw["variant"] = "short"
    elif head == "imp":
        kw.update(form="imp", png=take())
    elif head == "comp":
        kw["form"] = "comp"
        if p and p[0] == "rel":
            p.pop(0)
            kw["form"] = "comp_rel"
    elif head in verbs.FORMS:
        kw["form"] = head
    else:
        raise TagError(f"unknown verb form {head!r} in {tag}")
    if p:
        raise TagError(f"unexpected {'.'.join(p)!r} in verb tag {tag}")
    return VerbFeatures(**kw)


_TAG_POS = {"n": "noun", "v": "verb", "adj": "adjective", "adv": "adverb", "part": "particle"}


def generate(lexicon: Lexicon, lemma: str, tag: str) -> list[str]:
    """Every surface form of ``lemma`` under ``tag`` (one per matching entry)."""
    features = parse_tag(tag)
    pos = _TAG_POS[tag.split(".", 1)[0]]
    entries = [e for e in lexicon.lookup(lemma, pos) if not e.fixed]
    if pos == "noun" and isinstance(features, NounFeatures):
        cell = f"{features.number}.{features.case}"
        entries += [e for e in lexicon.by_pos("noun") if e.fixed and e.fixed == (lemma, cell)]
    if not entries:
        raise LookupError(f"no {pos} {lemma} in the lexicon")
    out: list[str] = []
    error: TagError | None = None
    for e in entries:
        try:
            s = build(e, features).surface
        except TagError as exc:
            error = exc
            continue
        if s not in out:
            out.append(s)
    if not out:
        assert error is not None
        raise error
    return out


# -- analysis ----------------------------------------------------------------------

def _prefix(entry: LexEntry) -> tuple[str, ...]:
    ph = script.to_phonemes(entry.lemma)
    if entry.pos not in ("noun", "verb") or entry.is_irregular:
        return ph[:1]
    return ph[:max(1, len(ph) - 1)]


def _link_of(f: VerbFeatures) -> str | None:
    if f.augment or f.clitic:
        return None
    if f.form == "vpart" and f.polarity == "pos":
        return "vpart"
    if f.form == "inf" and f.polarity == "pos":
        return "inf"
    if f.form == "vpart" and f.polarity == "neg_aa":
        return "negvpart"
    return None


class Analyzer:
    """Analyses tokens against one lexicon; form tables are built on demand."""

    def __init__(self, lexicon: Lexicon, enabled_clitics: frozenset[str] = clitics.DEFAULT_ENABLED):
        self.lexicon = lexicon
        self.enabled_clitics = frozenset(enabled_clitics)
        # every form of an entry starts with its lemma minus the final
        # phoneme (irregular and uninflected words: the first phoneme only)
        self._by_prefix: dict[tuple[str, ...], list[LexEntry]] = {}
        for e in lexicon:
            self._by_prefix.setdefault(_prefix(e), []).append(e)
        self._forms: dict[LexEntry, dict[str, list[Any]]] = {}
        self._aux: dict[str, list[tuple[str, str, Any]]] | None = None
        self._chains: dict[str, list[tuple[LexEntry, VerbFeatures]]] = {}

    # form tables
    def forms(self, entry: LexEntry) -> dict[str, list[Any]]:
        """Surface -> clitic-free feature bundles for one entry, built once."""
        table = self._forms.get(entry)
        if table is None:
            table = {}
            for f in enumerate_features(entry):
                table.setdefault(build(entry, f).surface, []).append(f)
            self._forms[entry] = table
        return table

    def lookup(self, surface: str) -> list[tuple[LexEntry, Any]]:
        """Clitic-free single-word readings of ``surface``."""
        ph = script.to_phonemes(surface)
        out: list[tuple[LexEntry, Any]] = []
        for k in range(1, len(ph) + 1):
            for e in self._by_prefix.get(ph[:k], ()):
                out += [(e, f) for f in self.forms(e).get(surface, ())]
        return out

    def _aux_forms(self) -> dict[str, list[tuple[str, str, Any]]]:
        if self._aux is None:
            table: dict[str, list[tuple[str, str, Any]]] = {}
            units = [(lem, link) for lem, links in verbs.AUX_LINKS.items() for link in links]
            units.append((verbs.PASSIVE_AUX, "inf"))
            for lemma, link in units:
                e = verbs.aux_entry(lemma, link)
                for f in verbs.enumerate_features(e):
                    if not f.causative:
                        table.setdefault(verbs.conjugate(e, f), []).append((lemma, link, f))
            self._aux = table
        return self._aux

    def chains(self, stem: str) -> list[tuple[LexEntry, VerbFeatures]]:
        """Readings of ``stem`` as a verb followed by auxiliaries or passive படு."""
        if stem in self._chains:
            return self._chains[stem]
        self._chains[stem] = []  # guards re-entry
        out: list[tuple[LexEntry, VerbFeatures]] = []
        aux = self._aux_forms()
        ph = script.to_phonemes(stem)
        for k in range(2, len(ph) - 1):
            right = script.from_phonemes(ph[k:])
            cands = aux.get(right)
            if not cands:
                continue
            for left in self._undo_compound(ph[:k], ph[k:], stem):
                readings = [(e, f) for e, f in self.lookup(left) if isinstance(f, VerbFeatures)]
                readings += self.chains(left)
                for e, lf in readings:
                    link = _link_of(lf)
                    if link is None or lf.passive:
                        continue
                    for aux_lemma, aux_link, rf in cands:
                        if aux_link != link:
                            continue
                        new = self._combine(e, lf, link, aux_lemma, rf)
                        if new is not None and new not in out and build(*new).surface == stem:
                            out.append(new)
        self._chains[stem] = out
        return out

    @staticmethod
    def _combine(e: LexEntry, lf: VerbFeatures, link: str, aux_lemma: str,
                 rf: VerbFeatures) -> tuple[LexEntry, VerbFeatures] | None:
        if aux_lemma == verbs.PASSIVE_AUX:
            if link != "inf":
                return None
            new = replace(rf, causative=lf.causative, aux_chain=lf.aux_chain, passive=True)
        else:
            new = replace(rf, causative=lf.causative,
                          aux_chain=lf.aux_chain + (AuxLink(aux_lemma, link),))
        try:
            verbs.validate(e, new)
            return e, verbs.complete(e, new)
        except TagError:
            return None

    @staticmethod
    def _undo_compound(left: tuple[str, ...], right: tuple[str, ...], whole: str) -> list[str]:
        cands = [left]
        if right and left and right[0] in sandhi.HARD_STOPS and left[-1] == right[0]:
            cands.append(left[:-1])
        if script.is_vowel(right[0]):
            cands.append(left + ("உ",))
            if left and left[-1] in ("ய்", "வ்"):
                cands.append(left[:-1])
        out = []
        for c in cands:
            if not c:
                continue
            s = script.from_phonemes(c)
            if sandhi.join_compound(s, script.from_phonemes(right)).surface == whole and s not in out:
                out.append(s)
        return out

    def analyze(self, token: str) -> list[Analysis]:
        token = script.normalize(token)
        if not token or not script.is_tamil_word(token):
            return []
        found: dict[tuple, Analysis] = {}
        for stem, clitic in clitics.strip(token, enabled=self.enabled_clitics):
            readings = self.lookup(stem)
            readings += self.chains(stem)
            for e, f in readings:
                if clitic is not None:
                    if getattr(f, "augment", None):
                        continue
                    f = replace(f, clitic=clitic)
                try:
                    b = build(e, f)
                except TagError:
                    continue
                if b.surface != token:
                    continue
                a = from_builder(token, e, f, b, _notes(f))
                found.setdefault((a.lemma, a.tag, e.class_token, e.pos), a)
        if not found:
            return self._split_joined(token)
        return sorted(found.values(), key=lambda a: (a.tag, a.lemma, a.entry.class_token))

    def _split_joined(self, token: str) -> list[Analysis]:
        """Readings of a word written joined to the next one after a sandhi
        augment (தடியைக்கொண்டு = தடியைக் + கொண்டு). Each reading covers the
        left part only and names the right part in a note."""
        ph = script.to_phonemes(token)
        out: list[Analysis] = []
        for k in range(1, len(ph) - 2):
            if ph[k] not in sandhi.HARD_STOPS or ph[k + 1] != ph[k]:
                continue
            left, right = script.from_phonemes(ph[:k + 1]), script.from_phonemes(ph[k + 1:])
            if not self.analyze(right):
                continue
            note = f"{JOINED_NOTE} {right}"
            out += [replace(a, notes=a.notes + (note,)) for a in self.analyze(left)
                    if getattr(a.features, "augment", None)]
        return out

    def analyze_tokens(self, tokens: list[str]) -> list[tuple[str, list[Analysis]]]:
        """Per-token analyses, plus joined readings for two-word spellings of
        one verb form, reduplicated adjectives and the habitual negative."""
        out: list[tuple[str, list[Analysis]]] = []
        for i, tok in enumerate(tokens):
            res = self.analyze(tok)
            nxt = tokens[i + 1] if i + 1 < len(tokens) else None
            if nxt == "இல்லை":
                res = [replace(a, notes=a.notes + (HABITUAL_NOTE,))
                       if isinstance(a.features, VerbFeatures) and a.features.form == "vn" else a
                       for a in res]
            out.append((tok, res))
            if nxt is None:
                continue
            if any(isinstance(a.features, VerbFeatures) and a.features.augment
                   and a.features.form in ("inf", "vpart") for a in res):
                joined = self.analyze(tok + nxt)
                if joined:
                    out.append((f"{tok} {nxt}", [replace(a, token=f"{tok} {nxt}") for a in joined]))
            if nxt == tok:
                pair = []
                for a in res:
                    if isinstance(a.features, PlainFeatures) and a.entry.pos == "adjective":
                        f = replace(a.features, redup=True)
                        pair.append(from_builder(f"{tok} {tok}", a.entry, f, build(a.entry, f)))
                if pair:
                    out.append((f"{tok} {tok}", pair))
        return out

    def analyze_pos(self, token: str, pos: str) -> list[Analysis]:
        return [a for a in self.analyze(token) if a.entry.pos == pos]

    def paradigm(self, lemma: str) -> list[tuple[LexEntry, Any, str]]:
        rows: list[tuple[LexEntry, Any, str]] = []
        for e in self.lexicon.lookup(lemma):
            if e.pos == "noun":
                rows += [(e, f, s) for f, s in nouns.decline(e)]
            elif e.pos == "verb":
                rows += [(e, f, verbs.conjugate(e, f)) for f in verbs.paradigm_features(e)]
            else:
                rows += [(e, f, build(e, f).surface) for f in derivation.enumerate_features(e)]
        return rows


def _notes(f: Any) -> tuple[str, ...]:
    notes: list[str] = []
    if isinstance(f, VerbFeatures) and f.form == "fut_um":
        notes.append(FUT_UM_NOTE)
    if isinstance(f, NounFeatures) and f.derivation in derivation.LOW_CONFIDENCE:
        notes.append(LOW_CONFIDENCE_NOTE)
    return tuple(notes)


_CACHE: "weakref.WeakKeyDictionary[Lexicon, dict[frozenset, Analyzer]]" = weakref.WeakKeyDictionary()


def analyzer_for(lexicon: Lexicon, enabled_clitics: Iterable[str] = clitics.DEFAULT_ENABLED) -> Analyzer:
    per = _CACHE.setdefault(lexicon, {})
    key = frozenset(enabled_clitics)
    if key not in per:
        per[key] = Analyzer(lexicon, key)
    return per[key]


def analyze(token: str, lexicon: Lexicon, **kw: Any) -> list[Analysis]:
    return analyzer_for(lexicon, **kw).analyze(token)


def analyze_noun(token: str, lexicon: Lexicon) -> list[Analysis]:
    return analyzer_for(lexicon).analyze_pos(token, "noun")


def analyze_verb(token: str, lexicon: Lexicon) -> list[Analysis]:
    return analyzer_for(lexicon).analyze_pos(token, "verb")
