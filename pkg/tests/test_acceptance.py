"""Acceptance criteria.  Each test prints one PASS/FAIL line with its measurement.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline, or
``python tests/test_acceptance.py`` for the report alone.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from dataclasses import dataclass

import pytest

from tamilmorph import agreement, fixtures, lexicon, nouns, script, verbs
from tamilmorph.agreement import AgrBundle
from tamilmorph.analyzer import analyzer_for, build
from tamilmorph.verbs import VerbFeatures

ROUND_TRIP_SAMPLES = 10_000
TABLE1_FORMS = ("மரம்", "மரத்தை", "மரத்தால்", "மரத்துடன்", "மரத்துக்கு", "மரத்திலிருந்து",
                "மரத்தின்", "மரத்தில்", "மரமே")


@dataclass
class Outcome:
    number: int
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  criterion {self.number}: {self.name}: " \
               f"{self.detail} ({self.seconds:.2f} s)"


def _timed(fn):
    t = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t


# -- criteria ------------------------------------------------------------------------

def table1(lex):
    an = analyzer_for(lex)

    def run():
        surfaces = {s for _, _, s in an.paradigm(fixtures.TABLE1_LEMMA)}
        missing = [f for f in TABLE1_FORMS if f not in surfaces]
        return not missing, f"{len(TABLE1_FORMS) - len(missing)}/{len(TABLE1_FORMS)} forms" + \
            (f", missing {' '.join(missing)}" if missing else "")
    ok, detail, sec = _timed(run)
    return Outcome(1, "case table for மரம்", ok and sec < 1, detail, sec)


def table2(lex):
    def run():
        r = fixtures.check_table2(lex)
        return r.ok, f"{r.passed}/{r.total} class rows" + (f", {r.failures}" if r.failures else "")
    ok, detail, sec = _timed(run)
    return Outcome(2, "noun class rows", ok and sec < 1, detail, sec)


def examples(lex):
    def run():
        r = fixtures.check_examples(lex)
        share = r.passed / r.total
        return share >= 0.95, f"{r.passed}/{r.total} example tokens ({share:.1%})"
    ok, detail, sec = _timed(run)
    return Outcome(3, "example corpus", ok and sec < 5, detail, sec)


def appendix(lex):
    def run():
        c = fixtures.compare_appendix(lex)
        ok = c.recall >= 0.90 and c.precision >= 0.99
        return ok, (f"recall {c.recall:.3f} (need 0.90), precision {c.precision:.3f} (need 0.99), "
                    f"{len(c.unique)} distinct forms vs reference {fixtures.APPENDIX_REFERENCE_COUNT}, "
                    f"delta {c.delta:+d}")
    ok, detail, sec = _timed(run)
    return Outcome(4, "paradigm of நட", ok and sec < 10, detail, sec)


def round_trip(lex, samples: int = ROUND_TRIP_SAMPLES, seed: int = 0):
    an = analyzer_for(lex)

    def run():
        pairs = [(e, f) for e in lex if e.pos in ("noun", "verb")
                 for f in (nouns if e.pos == "noun" else verbs).enumerate_features(e)]
        lemmas = {e.lemma for e, _ in pairs}
        noun_classes = {e.noun_class for e, _ in pairs if e.pos == "noun" and e.noun_class}
        verb_classes = {e.verb_class for e, _ in pairs if e.pos == "verb" and e.verb_class != "irr"}
        irregular = {e.lemma for e, _ in pairs if e.pos == "verb" and e.is_irregular}
        coverage = (len(lemmas) >= 200 and noun_classes == set(range(1, 17))
                    and len(verb_classes) == 14 and len(irregular) >= 5)
        failures = []
        for e, f in random.Random(seed).choices(pairs, k=samples):
            surface = build(e, f).surface
            if not any(a.entry == e and a.features == f for a in an.analyze(surface)):
                failures.append(f"{e.lemma} {f.tag()} {surface}")
        detail = (f"{samples - len(failures)}/{samples} pairs from {len(lemmas)} lemmas, "
                  f"{len(noun_classes)} noun classes, {len(verb_classes)} verb classes, "
                  f"{len(irregular)} irregular verbs")
        if failures:
            detail += f"; first failures: {failures[:3]}"
        return coverage and not failures, detail
    ok, detail, sec = _timed(run)
    return Outcome(5, "analyse(generate(x)) contains x", ok, detail, sec)


# coordination oracle, written as the rule list rather than a minimum
_RULES = (
    (lambda cs: any(p == 1 and r == "rat" for p, _, r in cs), (1, "pl", "rat")),
    (lambda cs: any(p == 2 and r == "rat" for p, _, r in cs), (2, "pl", "rat")),
    (lambda cs: any(p == 3 and r == "rat" for p, _, r in cs), (3, "pl", "rat")),
    (lambda cs: all(r == "irrat" for _, _, r in cs), (3, "pl", "irrat")),
)
_TERMINAL = {(1, "rat"): "1p", (2, "rat"): "2p", (3, "rat"): "3pe", (3, "irrat"): "3pn"}


def _oracle(conjuncts):
    for test, result in _RULES:
        if test(conjuncts):
            return result
    raise AssertionError("no rule applies")


def _bundle(person, number, rat):
    if rat == "irrat":
        return AgrBundle(person, number, "neuter", "irrational")
    if person == 3:
        return AgrBundle(3, number, "masc" if number == "sg" else "epicene")
    return AgrBundle(person, number)


def coordination(_lex=None):
    def run():
        # irrational entities are third person only
        atoms = [(p, n, r) for p, n, r in itertools.product((1, 2, 3), ("sg", "pl"), ("rat", "irrat"))
                 if not (r == "irrat" and p != 3)]
        checked, wrong = 0, []
        for size in (2, 3):
            for combo in itertools.product(atoms, repeat=size):
                want = _oracle(combo)
                got = agreement.resolve_coordination([_bundle(*c) for c in combo])
                got_t = (got.person, got.number, "rat" if got.rationality == "rational" else "irrat")
                terminal = agreement.expected_terminal(got).pngs
                checked += 1
                if got_t != want or terminal != (_TERMINAL[want[0], want[2]],):
                    wrong.append(f"{combo}: {got_t} {terminal}")
        return not wrong, f"{checked - len(wrong)}/{checked} conjunct lists" + \
            (f"; {wrong[:3]}" if wrong else "")
    ok, detail, sec = _timed(run)
    return Outcome(6, "coordination precedence", ok, detail, sec)


def script_layer(_lex=None):
    def run():
        letters = script.alphabet()
        round_trip = all(script.join_letters(script.segment(x)) == x and len(script.segment(x)) == 1
                         for x in letters)
        grid = [script.compose(c, v) for c in script.CONSONANTS for v in script.VOWELS]
        grid_ok = len({g.raw for g in grid}) == 216 and all(
            script.compose(*script.decompose(g)) == g for g in grid)
        two = [g.raw for g in grid if len(g.raw) == 2]
        detail = (f"{len(letters)} letters round-trip {'ok' if round_trip else 'broken'}, "
                  f"216-letter grid {'ok' if grid_ok else 'broken'}, "
                  f"{len(two)}/216 composites are two code points")
        if len(two) != 216:
            one = [g.raw for g in grid if len(g.raw) != 2]
            detail += f" (not: {' '.join(one)})"
        return round_trip and grid_ok and len(two) == 216 and len(letters) == 247, detail
    ok, detail, sec = _timed(run)
    return Outcome(7, "script layer", ok, detail, sec)


def causative_passive(lex):
    def verb(lemma):
        return next(e for e in lex.lookup(lemma, "verb"))

    def run():
        got = [
            verbs.conjugate(verbs.causativize(verb("வாங்கு")), VerbFeatures(tense="past", png="3sm")),
            verbs.conjugate(verb("வாங்கு"), VerbFeatures(tense="past", png="3sn", passive=True)),
            verbs.conjugate(verb("முன்னெடு"), VerbFeatures(tense="past", png="3pn", passive=True)),
        ]
        want = ["வாங்குவித்தான்", "வாங்கப்பட்டது", "முன்னெடுக்கப்பட்டன"]
        n = sum(g == w for g, w in zip(got, want))
        return n == 3, f"{n}/3 exact: {' '.join(got)}"
    ok, detail, sec = _timed(run)
    return Outcome(8, "causative and passive", ok, detail, sec)


CRITERIA = (table1, table2, examples, appendix, round_trip, coordination, script_layer,
            causative_passive)


# -- pytest entry points ------------------------------------------------------------------

def _check(outcome: Outcome, capsys) -> None:
    with capsys.disabled():
        print("\n" + outcome.line())
    assert outcome.ok, outcome.line()


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion, lex, capsys):
    _check(criterion(lex), capsys)


def main() -> int:
    lex = lexicon.load_default()
    outcomes = [c(lex) for c in CRITERIA]
    for o in outcomes:
        print(o.line())
    return 0 if all(o.ok for o in outcomes) else 1


if __name__ == "__main__":
    sys.exit(main())
