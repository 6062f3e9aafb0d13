"""Subject-verb agreement: expected terminal, coordination, leniency, object marking."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .lexicon import LexEntry
from .nouns import NounFeatures
from .tags import TagError
from .trace import Analysis
from .verbs import VerbFeatures

PERSONS = (1, 2, 3)
NUMBERS = ("sg", "pl")
GENDERS = ("masc", "fem", "neuter", "epicene")

# the five traditional gender values as (gender, number, rationality)
GENDER_VALUES = {
    "aanpaal": ("masc", "sg", "rational"),
    "penpaal": ("fem", "sg", "rational"),
    "palarpaal": ("epicene", "pl", "rational"),
    "onranpaal": ("neuter", "sg", "irrational"),
    "palavinpaal": ("neuter", "pl", "irrational"),
}

# person and number of the personal pronouns (all forms share the base lemma)
PRONOUNS = {"நான்": (1, "sg"), "நாம்": (1, "pl"), "நாங்கள்": (1, "pl"),
            "நீ": (2, "sg"), "நீங்கள்": (2, "pl")}

# person/number/gender/rationality carried by each terminal key
PNG_VALUES = {
    "1s": (1, "sg", None, "rational"), "1p": (1, "pl", None, "rational"),
    "2s": (2, "sg", None, "rational"), "2p": (2, "pl", None, "rational"),
    "3sm": (3, "sg", "masc", "rational"), "3sf": (3, "sg", "fem", "rational"),
    "3pe": (3, "pl", "epicene", "rational"), "3sh": (3, "pl", "epicene", "rational"),
    "3ph": (3, "pl", "epicene", "rational"),
    "3sn": (3, "sg", "neuter", "irrational"), "3pn": (3, "pl", "neuter", "irrational"),
}
_SLOTS = ("person", "number", "gender", "rationality")
HONORIFIC_KEYS = ("3ph", "3sh", "3pe")  # 3pe and 3ph share the surface ஆர்கள்

OK, MISMATCH, NOT_APPLICABLE, UNDETERMINED = "ok", "mismatch", "not_applicable", "undetermined"
DEFAULT_AGREEMENT_NOTE = "dative subject: default neuter agreement"
NEUTRAL_NOTE = "negative with இல்லை does not mark agreement"
DEFINITE_NOTE = "accusative marks the irrational object as definite"
INDEFINITE_NOTE = "unmarked irrational object read as indefinite"


class AgreementError(TagError):
    pass


@dataclass(frozen=True)
class AgrBundle:
    person: int
    number: str
    gender: str | None = None  # unmarked for 1st and 2nd person
    rationality: str = "rational"
    honorific: bool = False
    case: str = "nom"

    def __post_init__(self):
        if self.person not in PERSONS:
            raise AgreementError(f"person must be 1, 2 or 3, not {self.person!r}")
        if self.number not in NUMBERS:
            raise AgreementError(f"unknown number {self.number!r}")
        if self.gender is not None and self.gender not in GENDERS:
            raise AgreementError(f"unknown gender {self.gender!r}")
        if self.rationality not in ("rational", "irrational"):
            raise AgreementError(f"unknown rationality {self.rationality!r}")
        if self.gender == "epicene" and (self.person, self.number, self.rationality) != (3, "pl", "rational"):
            raise AgreementError("epicene gender is third person plural rational")
        if self.rationality == "irrational" and (self.person != 3 or self.gender not in (None, "neuter")):
            raise AgreementError("irrational subjects are third person neuter")
        if self.person == 3 and self.rationality == "rational" and self.number == "sg" \
                and self.gender not in ("masc", "fem"):
            raise AgreementError("a singular rational third person is masculine or feminine")

    @classmethod
    def from_gender_value(cls, value: str, **kw) -> "AgrBundle":
        gender, number, rationality = GENDER_VALUES[value]
        return cls(3, number, gender, rationality, **kw)


@dataclass(frozen=True)
class Expected:
    """Acceptable terminal keys; ``fut_um`` when the future in உம் also agrees."""
    pngs: tuple[str, ...]
    fut_um: bool = False
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Mismatch:
    slot: str
    expected: str
    found: str
    leniency_applied: bool = False

    def to_dict(self) -> dict:
        return {"slot": self.slot, "expected": self.expected, "found": self.found,
                "leniency_applied": self.leniency_applied}


@dataclass(frozen=True)
class AgreementResult:
    status: str
    mismatches: tuple[Mismatch, ...] = ()
    leniency_applied: bool = False
    notes: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.status == OK

    def to_dict(self) -> dict:
        return {"status": self.status, "leniency_applied": self.leniency_applied,
                "mismatches": [m.to_dict() for m in self.mismatches], "notes": list(self.notes)}


def png_of(subject: AgrBundle) -> str:
    """Terminal key for a nominative, non-honorific subject."""
    if subject.person in (1, 2):
        return f"{subject.person}{'s' if subject.number == 'sg' else 'p'}"
    if subject.rationality == "irrational":
        return "3sn" if subject.number == "sg" else "3pn"
    if subject.number == "pl":
        return "3pe"
    return "3sm" if subject.gender == "masc" else "3sf"


def expected_terminal(subject: AgrBundle) -> Expected:
    if subject.case == "dat":
        return Expected(("3sn",), fut_um=True, notes=(DEFAULT_AGREEMENT_NOTE,))
    if subject.honorific and subject.person == 3:
        return Expected(HONORIFIC_KEYS)
    if subject.honorific and subject.person == 2:
        return Expected(("2p",))
    png = png_of(subject)
    return Expected((png,), fut_um=png in ("3sn", "3pn"))


def resolve_coordination(subjects: Iterable[AgrBundle]) -> AgrBundle:
    """Agreement bundle of conjoined subjects: the lowest person among the
    rational conjuncts wins, the result is plural, and irrational conjuncts
    never raise the person."""
    subjects = list(subjects)
    if not subjects:
        raise AgreementError("coordination needs at least one conjunct")
    if len(subjects) == 1:
        return subjects[0]
    rational = [s.person for s in subjects if s.rationality == "rational"]
    if not rational:
        return AgrBundle(3, "pl", "neuter", "irrational")
    person = min(rational)
    return AgrBundle(person, "pl", "epicene" if person == 3 else None, "rational")


def bundle_of(analysis: Analysis) -> AgrBundle:
    """Agreement bundle of an analysed noun or pronoun."""
    f, e = analysis.features, analysis.entry
    if not isinstance(f, NounFeatures):
        raise AgreementError(f"{analysis.token} is not a noun")
    case = f.case
    if analysis.lemma in PRONOUNS:
        person, number = PRONOUNS[analysis.lemma]
        return AgrBundle(person, number, None, "rational", case=case)
    if e.rationality == "irrational":
        return AgrBundle(3, f.number, "neuter", "irrational", case=case)
    if f.honorific:
        return AgrBundle(3, "pl", "epicene", "rational", honorific=True, case=case)
    if f.number == "pl" or e.gender == "epicene" or e.gender is None:
        # a singular epicene noun (அவர்) is the polite singular
        hon = f.number == "sg"
        return AgrBundle(3, "pl", "epicene", "rational", honorific=hon, case=case)
    return AgrBundle(3, "sg", e.gender, "rational", case=case)


def _verb_png(f: VerbFeatures) -> str | None:
    if f.form == "fut_um":
        return f.png
    if f.form != "finite" or f.polarity == "neg_illai":
        return None
    return f.png


def check(subject: AgrBundle, verb: Analysis, *, lenient_plural: bool = False) -> AgreementResult:
    """Compare the verb's terminal with the one the subject predicts."""
    f = verb.features
    if not isinstance(f, VerbFeatures):
        return AgreementResult(NOT_APPLICABLE, notes=(f"{verb.token} is not a verb",))
    if f.form == "finite" and f.polarity == "neg_illai":
        return AgreementResult(OK, notes=(NEUTRAL_NOTE,))
    png = _verb_png(f)
    if png is None:
        return AgreementResult(NOT_APPLICABLE, notes=(f"{verb.tag} is not a finite verb",))
    exp = expected_terminal(subject)
    if png in exp.pngs and (f.form != "fut_um" or exp.fut_um):
        return AgreementResult(OK, notes=exp.notes)
    lenient = (png == "3sn" and subject.rationality == "irrational" and subject.number == "pl"
               and subject.case != "dat")
    if lenient and lenient_plural:
        return AgreementResult(OK, leniency_applied=True,
                               notes=("neuter singular accepted for a plural irrational subject",))
    want = PNG_VALUES[exp.pngs[0]]
    got = PNG_VALUES[png]
    mismatches = tuple(Mismatch(slot, str(w), str(g), False)
                       for slot, w, g in zip(_SLOTS, want, got) if w != g and w is not None
                       and g is not None)
    if not mismatches:
        mismatches = (Mismatch("png", exp.pngs[0], png),)
    return AgreementResult(MISMATCH, mismatches, notes=exp.notes)


def check_disjunction(subjects: Iterable[AgrBundle], verb: Analysis) -> AgreementResult:
    """Agreement with subjects joined by ஓ or அல்லது is not described; report it as such."""
    return AgreementResult(UNDETERMINED, notes=("agreement with disjoined subjects is not determined",))


def check_dom(obj: LexEntry, case: str) -> AgreementResult:
    """Differential object marking: rational objects need the accusative."""
    if obj.pos != "noun":
        raise AgreementError(f"{obj.lemma} is not a noun")
    if obj.rationality == "rational":
        if case == "acc":
            return AgreementResult(OK)
        return AgreementResult(MISMATCH, (Mismatch("case", "acc", case),),
                               notes=("a rational object takes the accusative",))
    return AgreementResult(OK, notes=(DEFINITE_NOTE if case == "acc" else INDEFINITE_NOTE,))


def check_equative(first: AgrBundle, second: AgrBundle) -> AgreementResult:
    """Verbless equative clause: both noun phrases must be nominative."""
    bad = tuple(Mismatch("case", "nom", b.case) for b in (first, second) if b.case != "nom")
    return AgreementResult(MISMATCH if bad else OK, bad)


_RANK = {OK: 0, MISMATCH: 1, UNDETERMINED: 2, NOT_APPLICABLE: 3}


def check_readings(subject: AgrBundle, readings: Iterable[Analysis], *,
                   lenient_plural: bool = False) -> tuple[AgreementResult, Analysis | None]:
    """Best result over the readings of one verb token (agreeing finite
    readings first, then mismatching ones); NOT_APPLICABLE if none is finite."""
    best: tuple[AgreementResult, Analysis | None] = (AgreementResult(NOT_APPLICABLE), None)
    for a in readings:
        r = check(subject, a, lenient_plural=lenient_plural)
        key = (_RANK[r.status], r.leniency_applied)
        if best[1] is None or key < (_RANK[best[0].status], best[0].leniency_applied):
            best = (r, a)
    return best
