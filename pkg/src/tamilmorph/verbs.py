"""Verb inflection: tense stems per class, terminals, non-finite forms,
negation, causative and passive voice, and auxiliary chains."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator

from . import clitics, sandhi, script
from .lexicon import LexEntry
from .tags import CLITICS, PNGS, TagError
from .trace import Builder, morph_rule

# -- stem rules (edge-local so a recorded trace can be replayed) -------------

_ASSIM = {"ல்": "ற்", "ள்": "ட்"}

IRR = morph_rule("irregular-stem", "stem taken whole from the irregular table", lambda l, r: r)
PAST_NASAL = morph_rule("past-nasal", "ந் inserted before the past த்", lambda l, r: l + ("ந்",) + r)
PAST_L_N = morph_rule("past-l-n", "final ல் becomes ன் before the past ற்", lambda l, r: l[:-1] + ("ன்",) + r)
PAST_LL_N = morph_rule("past-ll-n", "final ள் becomes ண் before the past ட்", lambda l, r: l[:-1] + ("ண்",) + r)
PAST_LL_T = morph_rule("past-ll-t", "final ள் becomes ட் before the past ட்", lambda l, r: l[:-1] + ("ட்",) + r)
PAST_U_DROP = morph_rule("past-u-drop", "final உ dropped before the past marker", lambda l, r: l[:-1] + r)
STEM_ASSIM = morph_rule("stem-assim", "final ல்/ள் becomes ற்/ட் before a stop",
                        lambda l, r: l[:-1] + (_ASSIM.get(l[-1], l[-1]),) + r)
NEG_AA = morph_rule("neg-aa", "infinitive அ replaced by the negative ஆ", lambda l, r: l[:-1] + r)

PLAIN = sandhi.PLAIN
U_ELISION = "u-elision"

IRREGULAR: dict[str, dict[str, str]] = {
    "வா": dict(past="வந்த்", pres="வரு", fut="வருவ்", fut_pn="வருப்", um="வரும்", inf="வர", vpart="வந்து"),
    "தா": dict(past="தந்த்", pres="தரு", fut="தருவ்", fut_pn="தருப்", um="தரும்", inf="தர", vpart="தந்து"),
    "சா": dict(past="செத்த்", pres="சா", fut="சாவ்", fut_pn="சாப்", um="சாகும்", inf="சாக", vpart="செத்து"),
    "வே": dict(past="வெந்த்", pres="வே", fut="வேவ்", fut_pn="வேப்", um="வேகும்", inf="வேக", vpart="வெந்து"),
    "காண்": dict(past="கண்ட்", pres="காண்", fut="காண்ப்", fut_pn="காண்ப்", um="காணும்", inf="காண", vpart="கண்டு"),
    "போ": dict(past="போன்", pres="போ", fut="போவ்", fut_pn="போப்", um="போகும்", inf="போக", vpart="போய்"),
    "ஆகு": dict(past="ஆன்", pres="ஆ", fut="ஆவ்", fut_pn="ஆப்", um="ஆகும்", inf="ஆக", vpart="ஆகி"),
}

# class -> (past rule, past marker)
_PAST = {
    "1": (PLAIN, "த்"), "2": (PAST_LL_N, "ட்"), "3": (PAST_L_N, "ற்"), "4": (PAST_NASAL, "த்"),
    "5": (U_ELISION, "இன்"), "6.1": (PAST_U_DROP, "ட்"), "6.2": (PAST_U_DROP, "க்"),
    "6.3": (PAST_U_DROP, "ற்"), "7": (PLAIN, "ட்"), "8": (PLAIN, "ற்"), "9": (PAST_LL_N, "ட்"),
    "10": (PAST_L_N, "ற்"), "11": (PLAIN, "த்த்"), "12": (PAST_NASAL, "த்"),
}
_STRONG = frozenset({"11", "12"})
_V_FUTURE = frozenset({"1", "2", "3", "4", "5", "6.1", "6.2", "6.3"})
_U_FINAL = frozenset({"5", "6.1", "6.2", "6.3"})

TERMINALS = {"1s": "ஏன்", "1p": "ஓம்", "2s": "ஆய்", "2p": "ஈர்கள்", "3sm": "ஆன்", "3sf": "ஆள்",
             "3sn": "அது", "3pe": "ஆர்கள்", "3pn": "அன", "3sh": "ஆர்", "3ph": "ஆர்கள்"}
SHORT_TERMINALS = {"2p": "ஈர்", "3sm": "அன்", "3pe": "அர்"}
EUPH_TERMINALS = {"3sm": "அன்", "3sf": "அள்"}
MAATTU_TERMINALS = {"1s": "ஏன்", "1p": "ஓம்", "2s": "ஆய்", "2p": "ஈர்கள்", "3sm": "ஆன்",
                    "3sf": "ஆள்", "3sn": "ஆது", "3pe": "ஆர்கள்", "3pn": "ஆ", "3sh": "ஆர்",
                    "3ph": "ஆர்கள்"}
NEG_AA_FORMS = {("rel", None): "த", ("finite", "3sn"): "து", ("vpart", None): "மல்",
                ("cond", None): "விட்டால்", ("imp", "2s"): "தே", ("imp", "2p"): "தீர்கள்"}
PRONOMINALS = {"avan": "வன்", "aval": "வள்", "avar": "வர்", "avaar": "வார்"}
PN_CASES = {"nom": "", "acc": "ஐ", "ins": "ஆல்", "dat": "உக்கு", "soc": "உடன்"}

FORMS = ("finite", "fut_um", "inf", "vpart", "cond", "rel", "vn", "pn", "imp",
         "hort", "perm", "prohib", "comp", "comp_rel")
LINKS = ("vpart", "inf", "negvpart")

# Auxiliary verbs, the main-verb form each accepts, and the class each
# conjugates in when used that way.
AUX_LINKS: dict[str, dict[str, str]] = {
    "இரு": {"vpart": "12", "negvpart": "12"},
    "கொண்டிரு": {"vpart": "12"},
    "விடு": {"vpart": "6.1", "inf": "6.1"},
    "முடி": {"vpart": "11", "inf": "4"},
    "போ": {"vpart": "irr"},
    "போடு": {"vpart": "6.1"},
    "தள்ளு": {"vpart": "5"},
    "தீர்": {"vpart": "11"},
    "தொலை": {"vpart": "11"},
    "இடு": {"inf": "6.1", "vpart": "6.1"},
    "கொடு": {"inf": "11", "vpart": "11"},
    "பார்": {"inf": "11", "vpart": "11"},
    "வா": {"inf": "irr", "vpart": "irr"},
    "வேண்டு": {"inf": "5"},
    "கூடு": {"inf": "5"},
    "பண்ணு": {"inf": "5"},
    "செய்": {"inf": "1"},
    "வை": {"inf": "11"},
    "பெறு": {"inf": "6.3"},
}
AUX_TYPES = {
    "இரு": "aspectual", "கொண்டிரு": "aspectual", "விடு": "aspectual", "முடி": "aspectual",
    "போ": "attitude", "போடு": "attitude", "தள்ளு": "attitude", "தீர்": "attitude", "தொலை": "attitude",
    "இடு": "light", "கொடு": "light", "பார்": "light", "வா": "light",
    "வேண்டு": "modal", "கூடு": "modal",
    "பண்ணு": "causative", "செய்": "causative", "வை": "causative",
    "பெறு": "passiviser",
}
_AUX_STRUCTURE = {
    "aspectual": "main-verb+VP+aspectual-verb",
    "attitude": "main-verb+VP+attitude-verb",
    "light": "main-verb+INF+light-verb",
    "modal": "main-verb+INF+modal-verb",
    "causative": "main-verb+INF+causative-verb",
    "passiviser": "main-verb+INF+passiviser",
}
PASSIVE_AUX = "படு"
MAX_CHAIN = 4


class VerbFeatureError(TagError):
    pass


def aux_entry(lemma: str, link: str) -> LexEntry:
    """Internal entry used to conjugate ``lemma`` as an auxiliary after ``link``."""
    if lemma == PASSIVE_AUX:
        return LexEntry(PASSIVE_AUX, "verb", verb_class="6.1", gloss="passive")
    cls = AUX_LINKS[lemma][link]
    return LexEntry(lemma, "verb", verb_class=cls, gloss="auxiliary")


@dataclass(frozen=True)
class AuxLink:
    lemma: str
    link: str  # form of the preceding unit
    augment: str | None = None  # filled in: the doubled stop at the junction


@dataclass(frozen=True)
class VerbFeatures:
    form: str = "finite"
    tense: str | None = None
    png: str | None = None
    kinr: bool = False
    variant: str | None = None  # "short" | "euph"
    polarity: str = "pos"
    causative: bool = False
    passive: bool = False
    aux_chain: tuple[AuxLink, ...] = ()
    pron: str | None = None
    number: str | None = None
    case: str | None = None
    augment: str | None = None
    clitic: str | None = None

    def _final(self) -> str:
        p: list[str] = []
        if self.passive:
            p.append("pass")
        if self.polarity == "neg_aa":
            p.append("neg_aa")
            p.append(self.form if self.form != "finite" else "")
            if self.png:
                p.append(self.png)
        elif self.polarity == "neg_maattu":
            p += ["neg_maattu", self.png]
        elif self.polarity == "neg_illai":
            p.append("neg_illai")
        elif self.form == "finite":
            p.append(self.tense)
            if self.kinr:
                p.append("kinr")
            if self.variant == "euph":
                p.append("euph_an")
            p.append(self.png + ("_alt" if self.variant == "short" else ""))
        elif self.form == "fut_um":
            p += ["fut_um", self.png]
        elif self.form in ("rel", "vn", "pn"):
            p.append(self.tense)
            if self.kinr:
                p.append("kinr")
            p.append("rel" if self.form == "pn" else self.form)
            if self.form == "pn":
                p += [f"pron_{self.pron}", self.number, self.case]
        elif self.form == "imp":
            p += ["imp", self.png]
        elif self.form == "comp_rel":
            p += ["comp", "rel"]
        else:
            p.append(self.form)
        if self.augment:
            p.append(f"aug_{self.augment}")
        if self.clitic:
            p.append(self.clitic)
        return ".".join(x for x in p if x)

    def tag(self) -> str:
        head = "v.caus" if self.causative else "v"
        if not self.aux_chain:
            return f"{head}.{self._final()}"
        parts = [head + "." + _link_tag(self.aux_chain[0])]
        for i, link in enumerate(self.aux_chain):
            if i + 1 < len(self.aux_chain):
                parts.append(f"{link.lemma}.{_link_tag(self.aux_chain[i + 1])}")
            else:
                parts.append(f"{link.lemma}.{self._final()}")
        return "+".join(parts)


def _link_tag(link: AuxLink) -> str:
    name = {"vpart": "vpart", "inf": "inf", "negvpart": "neg_aa.vpart"}[link.link]
    return name + (f".aug_{link.augment}" if link.augment else "")


def causative_morph(lemma: str) -> str:
    """வி after final உ, பி after a consonant, ப்பி after any other vowel."""
    last = script.to_phonemes(lemma)[-1]
    if last == "உ":
        return "வி"
    if script.is_consonant(last):
        return "பி"
    return "ப்பி"


# -- stem construction --------------------------------------------------------

@dataclass
class _Unit:
    lemma: str
    cls: str
    base: Builder
    irregular: dict[str, str] | None = None

    def b(self) -> Builder:
        return self.base.copy()


def _unit(entry: LexEntry, causative: bool) -> _Unit:
    base = Builder(entry.lemma, "root")
    if causative:
        if entry.is_irregular:
            raise VerbFeatureError(f"no morphological causative for irregular {entry.lemma}")
        base.append(causative_morph(entry.lemma), "caus")
        return _Unit(entry.lemma, "11", base)
    if entry.is_irregular:
        return _Unit(entry.lemma, "irr", base, IRREGULAR[entry.lemma])
    return _Unit(entry.lemma, entry.verb_class, base)


def past_stem(u: _Unit) -> Builder:
    b = u.b()
    if u.irregular:
        return b.rewrite(u.irregular["past"], "past", IRR)
    rule, marker = _PAST[u.cls]
    if u.cls == "10" and b.surface.endswith("ள்"):
        rule, marker = PAST_LL_T, "ட்"
    return b.rewrite(marker, "past", rule)


def pres_stem(u: _Unit, kinr: bool) -> Builder:
    marker = "கின்ற்" if kinr else "கிற்"
    b = u.b()
    if u.irregular:
        return b.rewrite(u.irregular["pres"] + marker, "pres", IRR)
    if u.cls in _STRONG:
        return b.rewrite("க்" + marker, "pres", PLAIN)
    if u.cls == "10":
        return b.rewrite(marker, "pres", STEM_ASSIM)
    return b.rewrite(marker, "pres", PLAIN)


def fut_stem(u: _Unit, participial: bool = False) -> Builder:
    b = u.b()
    if u.irregular:
        return b.rewrite(u.irregular["fut_pn" if participial else "fut"], "fut", IRR)
    if u.cls in _STRONG:
        return b.rewrite("ப்ப்", "fut", PLAIN)
    if u.cls == "10":
        return b.rewrite("ப்", "fut", STEM_ASSIM)
    if u.cls in _V_FUTURE:
        return b.rewrite("ப்" if participial else "வ்", "fut", PLAIN)
    return b.rewrite("ப்", "fut", PLAIN)


def fut_um(u: _Unit) -> Builder:
    b = u.b()
    if u.irregular:
        return b.rewrite(u.irregular["um"], "fut_um", IRR)
    if u.cls in _STRONG:
        return b.rewrite("க்கும்", "fut_um", PLAIN)
    if u.cls == "10":
        return b.rewrite("கும்", "fut_um", STEM_ASSIM)
    if u.cls in _U_FINAL:
        return b.rewrite("உம்", "fut_um", U_ELISION)
    return b.join("உம்", "fut_um")


def infinitive(u: _Unit) -> Builder:
    b = u.b()
    if u.irregular:
        return b.rewrite(u.irregular["inf"], "inf", IRR)
    if u.cls in _STRONG:
        return b.rewrite("க்க", "inf", PLAIN)
    if u.cls == "10":
        return b.rewrite("க", "inf", STEM_ASSIM)
    if u.cls in _U_FINAL:
        return b.rewrite("அ", "inf", U_ELISION)
    return b.join("அ", "inf")


def verbal_participle(u: _Unit) -> Builder:
    if u.irregular:
        return u.b().rewrite(u.irregular["vpart"], "vpart", IRR)
    if u.cls == "5":
        return u.b().rewrite("இ", "vpart", U_ELISION)
    return past_stem(u).rewrite("உ", "vpart", PLAIN)


def past_relative(u: _Unit) -> Builder:
    if u.cls == "5":
        return u.b().rewrite("இய", "rel", U_ELISION)
    return past_stem(u).rewrite("அ", "rel", PLAIN)


def relative_stem(u: _Unit, tense: str, kinr: bool) -> Builder:
    """Stem in அ that takes the pronominal suffixes (நடந்த-, நடக்கிற-, நடப்ப-)."""
    if tense == "past":
        return past_relative(u)
    if tense == "pres":
        return pres_stem(u, kinr).rewrite("அ", "rel", PLAIN)
    return fut_stem(u, participial=True).rewrite("அ", "rel", PLAIN)


# -- validation -----------------------------------------------------------------

_NO_TENSE_FORMS = frozenset({"inf", "vpart", "cond", "imp", "hort", "perm", "prohib", "comp", "comp_rel"})
_AUG_FORMS = frozenset({"inf", "vpart"})


def _err(msg: str) -> VerbFeatureError:
    return VerbFeatureError(msg)


def _check_final(lemma: str, f: VerbFeatures) -> None:
    if f.form not in FORMS:
        raise _err(f"unknown verb form {f.form!r}")
    if f.png is not None and f.png not in PNGS:
        raise _err(f"unknown person-number-gender {f.png!r}")
    if f.clitic is not None and f.clitic not in CLITICS:
        raise _err(f"unknown clitic {f.clitic!r}")
    if f.augment is not None:
        if f.augment not in sandhi.AUGMENTS:
            raise _err(f"unknown augment {f.augment!r}")
        if f.clitic:
            raise _err("augment and clitic cannot co-occur")
        pn_ok = f.form == "pn" and f.case in ("acc", "dat")
        if not (pn_ok or (f.form in _AUG_FORMS and f.polarity == "pos")):
            raise _err("augment only after an infinitive, a participle in இ/ய், or an accusative/dative")
    if f.form != "pn" and (f.pron or f.number or f.case):
        raise _err("pronominal, number and case belong to participial nouns")
    if f.kinr and f.tense != "pres":
        raise _err("the கின்ற் allomorph is present tense only")
    if f.variant is not None and f.form != "finite":
        raise _err("terminal variants apply to finite forms")
    if f.polarity == "neg_aa":
        if (f.form, f.png) not in NEG_AA_FORMS:
            raise _err(f"no ஆ-negative {f.form} {f.png or ''}".strip())
        if f.tense or f.variant:
            raise _err("the ஆ-negative is tenseless")
        return
    if f.polarity == "neg_maattu":
        if f.form != "finite" or f.png not in MAATTU_TERMINALS:
            raise _err("the மாட்டு negative is a finite form with a person ending")
        if f.tense not in (None, "fut"):
            raise _err("the மாட்டு negative has future meaning only")
        if f.variant:
            raise _err("no terminal variants with மாட்டு")
        return
    if f.polarity == "neg_illai":
        if f.form != "finite" or f.png or f.tense or f.variant:
            raise _err("the fused இல்லை negative takes no tense or person")
        return
    if f.polarity != "pos":
        raise _err(f"unknown polarity {f.polarity!r}")
    if f.form == "finite":
        if f.tense not in ("past", "pres", "fut") or f.png is None:
            raise _err("a finite verb needs a tense and a person ending")
        if f.tense == "fut" and f.png in ("3sn", "3pn"):
            raise _err("future neuter is the உம் form (fut_um)")
        if f.variant == "short" and not (f.png in SHORT_TERMINALS
                                         and (f.png == "2p" or f.tense in ("pres", "fut"))):
            raise _err(f"no short ending for {f.tense} {f.png}")
        if f.variant == "euph" and not (f.png in EUPH_TERMINALS and f.tense in ("past", "pres")):
            raise _err(f"no euphonic அன் before {f.tense} {f.png}")
        if f.variant not in (None, "short", "euph"):
            raise _err(f"unknown terminal variant {f.variant!r}")
    elif f.form == "fut_um":
        if f.png not in ("3sn", "3pn") or f.tense not in (None, "fut"):
            raise _err("the உம் future is third person neuter only")
    elif f.form in ("rel", "vn", "pn"):
        if f.tense not in ("past", "pres", "fut"):
            raise _err(f"{f.form} needs a tense")
        if f.png:
            raise _err(f"{f.form} takes no person ending")
        if f.form == "pn":
            if f.pron not in PRONOMINALS:
                raise _err(f"unknown pronominal {f.pron!r}")
            if f.number not in ("sg", "pl") or (f.number == "pl" and f.pron not in ("avar", "avaar")):
                raise _err(f"pronominal {f.pron} has no number {f.number!r}")
            if f.case not in PN_CASES or (f.pron == "avaar" and f.case != "nom"):
                raise _err(f"participial noun in {f.pron} does not take case {f.case!r}")
    elif f.form == "imp":
        if f.png != "2s" or f.tense:
            raise _err("the positive imperative is the bare stem (2s)")
    elif f.tense or f.png:
        raise _err(f"{f.form} takes no tense or person ending")
    if f.form in ("comp", "comp_rel") and lemma != "என்":
        raise _err("the complementiser is a form of என் only")


def validate(entry: LexEntry, f: VerbFeatures) -> None:
    if entry.pos != "verb":
        raise _err(f"{entry.lemma} is not a verb")
    if f.causative and entry.is_irregular:
        raise _err(f"no morphological causative for irregular {entry.lemma}")
    if len(f.aux_chain) > MAX_CHAIN:
        raise _err(f"auxiliary chain longer than {MAX_CHAIN}")
    for link in f.aux_chain:
        if link.link not in LINKS:
            raise _err(f"unknown link form {link.link!r}")
        allowed = AUX_LINKS.get(link.lemma)
        if allowed is None:
            raise _err(f"{link.lemma} is not an auxiliary verb")
        if link.link not in allowed:
            struct = _AUX_STRUCTURE[AUX_TYPES[link.lemma]]
            if link.lemma == "இரு":
                struct += " (or main-verb+NEG.VP+இரு)"
            raise _err(f"{AUX_TYPES[link.lemma]} auxiliary {link.lemma} requires {struct}, not {link.link}")
    if (f.aux_chain or f.passive or f.causative) and f.form in ("comp", "comp_rel"):
        raise _err("the complementiser takes no voice or auxiliaries")
    last = f.aux_chain[-1].lemma if f.aux_chain else entry.lemma
    _check_final(PASSIVE_AUX if f.passive else last, f)


def _ok(entry: LexEntry, f: VerbFeatures) -> bool:
    try:
        validate(entry, f)
    except VerbFeatureError:
        return False
    return True


# -- building -------------------------------------------------------------------

def _finite(u: _Unit, f: VerbFeatures) -> Builder:
    if f.tense == "past" and f.png == "3sn":
        return past_relative(u).rewrite("து", f.png, PLAIN)
    stem = {"past": lambda: past_stem(u), "pres": lambda: pres_stem(u, f.kinr),
            "fut": lambda: fut_stem(u)}[f.tense]()
    if f.tense == "past" and f.png == "3pn" and stem.surface.endswith("ன்"):
        return stem.rewrite("அ", f.png, PLAIN)
    if f.variant == "euph":
        stem.rewrite("அன்", "euph_an", PLAIN)
        return stem.rewrite(EUPH_TERMINALS[f.png], f.png, PLAIN)
    table = SHORT_TERMINALS if f.variant == "short" else TERMINALS
    return stem.rewrite(table[f.png], f.png, PLAIN)


def _simple(u: _Unit, f: VerbFeatures) -> Builder:
    """One verbal unit in the final form ``f`` (chain and voice already peeled off)."""
    if f.polarity == "neg_aa":
        b = infinitive(u).rewrite("ஆ", "neg", NEG_AA)
        b.append(NEG_AA_FORMS[(f.form, f.png)], f"neg_{f.form}")
    elif f.polarity == "neg_maattu":
        b = infinitive(u).append("மாட்ட்", "neg_maattu")
        b.rewrite(MAATTU_TERMINALS[f.png], f.png, PLAIN)
    elif f.polarity == "neg_illai":
        b = infinitive(u).join("இல்லை", "neg_illai")
    elif f.form == "finite":
        b = _finite(u, f)
    elif f.form == "fut_um":
        b = fut_um(u)
    elif f.form == "inf":
        b = infinitive(u)
    elif f.form in ("vpart", "comp"):
        b = verbal_participle(u)
    elif f.form == "cond":
        b = past_stem(u).rewrite("ஆல்", "cond", PLAIN)
    elif f.form in ("rel", "comp_rel"):
        if f.form == "comp_rel" or f.tense == "past":
            b = past_relative(u)
        elif f.tense == "pres":
            b = pres_stem(u, f.kinr).rewrite("அ", "rel", PLAIN)
        else:
            b = fut_um(u)
    elif f.form == "vn":
        if f.tense == "past":
            b = past_relative(u).rewrite("து", "vn", PLAIN)
        elif f.tense == "pres":
            b = pres_stem(u, f.kinr).rewrite("அது", "vn", PLAIN)
        else:
            b = fut_stem(u).rewrite("அது", "vn", PLAIN)
    elif f.form == "pn":
        b = relative_stem(u, f.tense, f.kinr)
        b.rewrite(PRONOMINALS[f.pron], f"pron_{f.pron}", PLAIN)
        if f.number == "pl":
            b.join("கள்", "pl")
        if PN_CASES[f.case]:
            b.join(PN_CASES[f.case], f.case)
    elif f.form == "imp":
        b = u.b()
    else:
        b = infinitive(u).append({"hort": "ட்டும்", "perm": "லாம்", "prohib": "லாகாது"}[f.form], f.form)
    if f.augment:
        if f.form == "vpart" and not b.surface.endswith(("ி", "ய்")):
            raise _err(f"participle {b.surface} does not take an augment")
        b.append(sandhi.AUGMENTS[f.augment], f"aug_{f.augment}", f"augment-{f.augment}")
    if f.clitic:
        clitics.attach_builder(b, f.clitic)
    return b


_LINK_FEATURES = {
    "vpart": VerbFeatures(form="vpart"),
    "inf": VerbFeatures(form="inf"),
    "negvpart": VerbFeatures(form="vpart", polarity="neg_aa"),
}


def _units(entry: LexEntry, f: VerbFeatures) -> list[tuple[_Unit, VerbFeatures]]:
    """Each verbal unit with the form it appears in."""
    final = replace(f, aux_chain=(), passive=False, causative=False)
    entries = [(entry, f.causative)]
    links = [link.link for link in f.aux_chain]
    for link in f.aux_chain:
        entries.append((aux_entry(link.lemma, link.link), False))
    if f.passive:
        entries.append((aux_entry(PASSIVE_AUX, "inf"), False))
        links.append("inf")
    out = []
    for i, (e, caus) in enumerate(entries):
        form = _LINK_FEATURES[links[i]] if i < len(links) else final
        out.append((_unit(e, caus), form))
    return out


def _junction_augment(left: str, right: str) -> str | None:
    res = sandhi.join_compound(left, right)
    if res.rule_id != "stop-double":
        return None
    return sandhi.AUGMENT_NAMES[script.to_phonemes(right)[0]]


def complete(entry: LexEntry, f: VerbFeatures) -> VerbFeatures:
    """Fill in the stop doubled at each auxiliary junction."""
    if not f.aux_chain or entry.pos != "verb":
        return f
    parts = [_simple(u, uf).surface for u, uf in _units(entry, f)]
    chain = tuple(replace(link, augment=_junction_augment(parts[i], parts[i + 1]))
                  for i, link in enumerate(f.aux_chain))
    return replace(f, aux_chain=chain)


def build(entry: LexEntry, f: VerbFeatures) -> Builder:
    validate(entry, f)
    done = complete(entry, f)
    if done != f and any(a.augment for a in f.aux_chain):
        raise _err("auxiliary junction augments do not match the forms joined")
    units = _units(entry, f)
    b = _simple(*units[0])
    for u, uf in units[1:]:
        b.compound(_simple(u, uf))
    return b


def conjugate(entry: LexEntry, f: VerbFeatures) -> str:
    """Surface form of verb ``entry`` under ``f``."""
    return build(entry, f).surface


def negate(entry: LexEntry, f: VerbFeatures, kind: str = "neg_illai") -> str:
    """Negative counterpart of ``f``.  With ``neg_illai`` a verbal noun gives
    the habitual negative, written as two words; any other form gives the
    fused infinitive + இல்லை."""
    if kind == "neg_illai":
        if f.form == "vn":
            return conjugate(entry, f) + " இல்லை"
        return conjugate(entry, VerbFeatures(polarity="neg_illai", causative=f.causative))
    return conjugate(entry, replace(f, polarity=kind, tense=None, kinr=False, variant=None))


def causativize(entry: LexEntry) -> LexEntry:
    """The derived causative stem as its own (class 11) verb entry."""
    if entry.is_irregular:
        raise _err(f"no morphological causative for irregular {entry.lemma}")
    return LexEntry(entry.lemma + causative_morph(entry.lemma), "verb", verb_class="11",
                    gloss=f"cause to {entry.gloss}".strip())


def passivize(entry: LexEntry, f: VerbFeatures) -> str:
    return conjugate(entry, replace(f, passive=True))


# -- enumeration ------------------------------------------------------------------

def _finite_features(causative: bool) -> Iterator[VerbFeatures]:
    for tense in ("past", "pres", "fut"):
        for kinr in ((False, True) if tense == "pres" else (False,)):
            for png in PNGS:
                for variant in (None, "short", "euph"):
                    yield VerbFeatures("finite", tense, png, kinr, variant, causative=causative)


def _participial_features(causative: bool, augments: bool = True) -> Iterator[VerbFeatures]:
    for tense in ("past", "pres", "fut"):
        for kinr in ((False, True) if tense == "pres" else (False,)):
            for pron in PRONOMINALS:
                for number in ("sg", "pl"):
                    for case in PN_CASES:
                        augs = sandhi.AUGMENTS if augments and case in ("acc", "dat") else {}
                        for aug in (None, *augs):
                            yield VerbFeatures("pn", tense, None, kinr, pron=pron, number=number,
                                               case=case, augment=aug, causative=causative)


def enumerate_features(entry: LexEntry) -> Iterator[VerbFeatures]:
    """Every valid clitic-free single-verb bundle (no auxiliaries or passive)."""
    for caus in ((False,) if entry.is_irregular else (False, True)):
        cands: list[VerbFeatures] = list(_finite_features(caus))
        cands += [VerbFeatures("fut_um", png=p, causative=caus) for p in ("3sn", "3pn")]
        vpart_aug = verbal_participle(_unit(entry, caus)).surface.endswith(("ி", "ய்"))
        for form in ("inf", "vpart"):
            for aug in (None, *sandhi.AUGMENTS):
                if aug and form == "vpart" and not vpart_aug:
                    continue
                cands.append(VerbFeatures(form, augment=aug, causative=caus))
        cands += [VerbFeatures(form, causative=caus) for form in ("cond", "hort", "perm", "prohib")]
        cands.append(VerbFeatures("imp", png="2s", causative=caus))
        for tense in ("past", "pres", "fut"):
            for kinr in ((False, True) if tense == "pres" else (False,)):
                cands.append(VerbFeatures("rel", tense, kinr=kinr, causative=caus))
                cands.append(VerbFeatures("vn", tense, kinr=kinr, causative=caus))
        cands += list(_participial_features(caus))
        cands += [VerbFeatures(form, png=png, polarity="neg_aa", causative=caus)
                  for form, png in NEG_AA_FORMS]
        cands += [VerbFeatures(png=p, polarity="neg_maattu", causative=caus) for p in MAATTU_TERMINALS]
        cands.append(VerbFeatures(polarity="neg_illai", causative=caus))
        if entry.lemma == "என்" and not caus:
            cands += [VerbFeatures("comp"), VerbFeatures("comp_rel")]
        for f in cands:
            if _ok(entry, f):
                yield f


def paradigm_features(entry: LexEntry) -> list[VerbFeatures]:
    """The inventory listed for a model verb: plain and causative finite
    forms, participles, participial nouns, infinitive-based and negative forms."""
    out: list[VerbFeatures] = [VerbFeatures("imp", png="2s")]
    out += [VerbFeatures("inf", augment=a) for a in (None, *sandhi.AUGMENTS)]
    out += [VerbFeatures(form) for form in ("hort", "perm", "prohib")]
    out += [VerbFeatures("fut_um", png="3sn", aux_chain=(AuxLink(aux, "inf"),))
            for aux in ("முடி", "வேண்டு")]
    out.append(VerbFeatures(polarity="neg_illai"))
    out += [VerbFeatures(form, png=png, polarity="neg_aa") for form, png in NEG_AA_FORMS]
    out += [VerbFeatures("vpart"), VerbFeatures("vpart", clitic="incl_um"), VerbFeatures("cond"),
            VerbFeatures("vn", "fut")]
    for caus in ((False,) if entry.is_irregular else (False, True)):
        out += [f for f in _finite_features(caus) if _ok(entry, f)]
        out.append(VerbFeatures("fut_um", png="3sn", causative=caus))
        out += [VerbFeatures("rel", t, kinr=k, causative=caus)
                for t, k in (("past", False), ("pres", False), ("pres", True))]
        out += [f for f in _participial_features(caus) if _ok(entry, f)]
    return [complete(entry, f) for f in out if _ok(entry, f)]
