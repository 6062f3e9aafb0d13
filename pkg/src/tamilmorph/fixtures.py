"""Golden fixtures shipped with the package and the checks run against them."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import nouns, verbs
from .analyzer import Analyzer, analyzer_for
from .lexicon import Lexicon
from .nouns import NounFeatures
from .verbs import VerbFeatures

DATA = Path(__file__).parent / "data"
APPENDIX_LEMMA = "நட"
APPENDIX_REFERENCE_COUNT = 582  # form count quoted for the verb நட
APPENDIX_MIN_RECALL = 0.90
TABLE1_LEMMA = "மரம்"


class FixtureMissing(LookupError):
    pass


def rows(name: str) -> list[list[str]]:
    """Non-comment rows of a tab-separated fixture."""
    path = DATA / name
    if not path.exists():
        raise FixtureMissing(f"fixture {name} not found in {DATA}")
    out = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.strip() and not line.startswith("#"):
            out.append(line.split("\t"))
    return out


def appendix_forms() -> list[str]:
    return [r[0] for r in rows("appendix_nata.txt")]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: int
    total: int
    failures: tuple[str, ...] = ()
    threshold: float = 1.0  # share of rows that must pass

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed >= self.threshold * self.total


def _entry(lexicon: Lexicon, lemma: str, pos: str, cls: str | None = None):
    for e in lexicon.lookup(lemma):
        if e.pos != pos:
            continue
        if cls is None or str(e.noun_class if pos == "noun" else e.verb_class) == cls:
            return e
    raise FixtureMissing(f"fixture lemma {lemma} ({pos} {cls or ''}) missing from the lexicon")


def check_table1(lexicon: Lexicon) -> CheckResult:
    e = _entry(lexicon, TABLE1_LEMMA, "noun")
    forms = {s for _, s in nouns.decline(e)}
    fails = [f"{case}: {form}" for case, form in rows("table1_cases.tsv") if form not in forms]
    n = len(rows("table1_cases.tsv"))
    return CheckResult("table1_cases", n - len(fails), n, tuple(fails))


def table2_forms(lexicon: Lexicon, cls: str, lemma: str) -> list[str]:
    e = _entry(lexicon, lemma, "noun", cls)
    out = []
    for number, case in (("pl", "nom"), ("sg", "acc"), ("sg", "ins"), ("sg", "soc"), ("sg", "dat")):
        f = nouns.complete(e, NounFeatures(number, case))
        out.append(nouns.inflect(e, f) if nouns._ok(e, f) else "-")
    return out


def check_table2(lexicon: Lexicon) -> CheckResult:
    fails = []
    data = rows("table2_classes.tsv")
    for cls, lemma, *want in data:
        got = table2_forms(lexicon, cls, lemma)
        if got != want:
            fails.append(f"{cls} {lemma}: {' '.join(got)} != {' '.join(want)}")
    return CheckResult("table2_classes", len(data) - len(fails), len(data), tuple(fails))


_TABLE4 = (VerbFeatures(tense="past", png="3sm"), VerbFeatures(tense="pres", png="3sm"),
           VerbFeatures(tense="pres", kinr=True, png="3sm"), VerbFeatures(tense="fut", png="3sm"),
           VerbFeatures(form="fut_um", png="3sn"))


def check_table4(lexicon: Lexicon) -> CheckResult:
    fails = []
    data = rows("table4_verbs.tsv")
    for cls, lemma, *want in data:
        e = _entry(lexicon, lemma, "verb", cls)
        got = [verbs.conjugate(e, f) for f in _TABLE4]
        if got != want:
            fails.append(f"{cls} {lemma}: {' '.join(got)} != {' '.join(want)}")
    return CheckResult("table4_verbs", len(data) - len(fails), len(data), tuple(fails))


def check_examples(lexicon: Lexicon, analyzer: Analyzer | None = None) -> CheckResult:
    a = analyzer or analyzer_for(lexicon)
    fails = []
    data = rows("paper_examples.tsv")
    known = {e.fixed[0] if e.fixed else e.lemma for e in lexicon}
    absent = sorted({lemma for _, _, lemma, _ in data} - known)
    if absent:
        raise FixtureMissing(f"fixture lemmas missing from the lexicon: {' '.join(absent)}")
    for ex, token, lemma, tag in data:
        found = {(r.lemma, r.tag) for r in a.analyze(token)}
        if (lemma, tag) not in found:
            fails.append(f"({ex}) {token}: want {lemma} {tag}, got {sorted(found) or '?'}")
    return CheckResult("paper_examples", len(data) - len(fails), len(data), tuple(fails))


@dataclass(frozen=True)
class ParadigmComparison:
    generated: tuple[str, ...]
    reference: tuple[str, ...]

    @property
    def unique(self) -> set[str]:
        return set(self.generated)

    @property
    def missing(self) -> list[str]:
        return [f for f in self.reference if f not in self.unique]

    @property
    def extra(self) -> list[str]:
        ref = set(self.reference)
        return sorted(self.unique - ref)

    @property
    def recall(self) -> float:
        return 1 - len(self.missing) / len(self.reference)

    @property
    def precision(self) -> float:
        return len(self.unique & set(self.reference)) / len(self.unique)

    @property
    def delta(self) -> int:
        """Unique generated forms minus the quoted reference count."""
        return len(self.unique) - APPENDIX_REFERENCE_COUNT


def compare_appendix(lexicon: Lexicon) -> ParadigmComparison:
    e = _entry(lexicon, APPENDIX_LEMMA, "verb")
    generated = tuple(verbs.conjugate(e, f) for f in verbs.paradigm_features(e))
    return ParadigmComparison(generated, tuple(appendix_forms()))


def check_appendix(lexicon: Lexicon) -> CheckResult:
    cmp = compare_appendix(lexicon)
    n = len(cmp.reference)
    return CheckResult("appendix_nata", n - len(cmp.missing), n, tuple(cmp.missing),
                       APPENDIX_MIN_RECALL)


CHECKS = (check_table1, check_table2, check_table4, check_examples, check_appendix)
_NAMES = dict(zip(CHECKS, ("table1_cases", "table2_classes", "table4_verbs",
                           "paper_examples", "appendix_nata")))


def selftest(lexicon: Lexicon) -> list[CheckResult]:
    out = []
    for check in CHECKS:
        name = _NAMES[check]
        try:
            out.append(check(lexicon))
        except FixtureMissing as exc:
            out.append(CheckResult(name, 0, 0, (str(exc),)))
    return out
