"""Command-line front end: analyse, generate, list paradigms, classify, check agreement, self-test."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import agreement, clitics, fixtures, lexicon
from .analyzer import Analyzer, generate
from .lexicon import Lexicon, LexiconError
from .tags import TagError

EXIT_OK, EXIT_UNKNOWN, EXIT_INPUT, EXIT_SELFTEST = 0, 1, 2, 3
MODES = ("analyze", "generate", "paradigm", "classify", "agree", "selftest")


class InputError(Exception):
    pass


def decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"invalid UTF-8 at byte offset {exc.start}") from None


def _check_args(args: Sequence[str]) -> list[str]:
    # undecodable argv bytes arrive as lone surrogates
    for a in args:
        try:
            a.encode("utf-8")
        except UnicodeEncodeError:
            raw = a.encode("utf-8", "surrogateescape")
            try:
                raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise InputError(f"invalid UTF-8 in argument {a!r} at byte offset {exc.start}") from None
    return list(args)


def _emit(out: TextIO, fmt: str, record: dict, columns: Sequence[str]) -> None:
    if fmt == "json-lines":
        out.write(json.dumps(record, ensure_ascii=False) + "\n")
    else:
        out.write("\t".join("" if record.get(c) is None else str(record[c]) for c in columns) + "\n")


# -- modes ---------------------------------------------------------------------------

def cmd_analyze(an: Analyzer, tokens: Sequence[str], out: TextIO, fmt: str) -> int:
    code = EXIT_OK
    for tok in tokens:
        results = an.analyze(tok)
        if not results:
            code = EXIT_UNKNOWN
            _emit(out, fmt, {"token": tok, "lemma": None, "tag": "?"}, ("token", "tag"))
            continue
        for a in results:
            _emit(out, fmt, a.to_dict(), ("token", "lemma", "tag"))
    return code


def cmd_generate(lex: Lexicon, pairs: Sequence[tuple[str, str]], out: TextIO, fmt: str,
                 err: TextIO) -> int:
    code = EXIT_OK
    for lemma, tag in pairs:
        try:
            forms = generate(lex, lemma, tag)
        except (TagError, LookupError) as exc:
            err.write(f"{lemma}\t{tag}: {exc}\n")
            code = EXIT_INPUT
            continue
        for s in forms:
            _emit(out, fmt, {"lemma": lemma, "tag": tag, "surface": s}, ("lemma", "tag", "surface"))
    return code


def cmd_paradigm(an: Analyzer, lemmas: Sequence[str], out: TextIO, fmt: str) -> int:
    code = EXIT_OK
    for lemma in lemmas:
        rows = an.paradigm(lemma)
        if not rows:
            code = EXIT_UNKNOWN
            _emit(out, fmt, {"lemma": lemma, "tag": "?"}, ("lemma", "tag"))
            continue
        for e, f, s in rows:
            _emit(out, fmt, {"lemma": lemma, "tag": f.tag(), "surface": s}, ("lemma", "tag", "surface"))
        unique = {s for _, _, s in rows}
        summary = {"lemma": lemma, "forms": len(rows), "unique": len(unique)}
        if lemma == fixtures.APPENDIX_LEMMA and any(e.pos == "verb" for e, _, _ in rows):
            cmp = fixtures.compare_appendix(an.lexicon)
            summary.update(reference=fixtures.APPENDIX_REFERENCE_COUNT, delta=cmp.delta,
                           appendix_rows=len(cmp.reference), missing=cmp.missing, extra=cmp.extra)
        if fmt == "json-lines":
            out.write(json.dumps({"summary": summary}, ensure_ascii=False) + "\n")
        else:
            out.write(f"# {lemma}: {summary['forms']} forms, {summary['unique']} distinct\n")
            if "reference" in summary:
                out.write(f"# reference count {summary['reference']}, delta {summary['delta']:+d}\n")
                out.write(f"# appendix rows not generated ({len(cmp.missing)}): {' '.join(cmp.missing)}\n")
                out.write(f"# generated forms not in the appendix ({len(cmp.extra)}): {' '.join(cmp.extra)}\n")
    return code


def cmd_classify(lex: Lexicon, lemmas: Sequence[str], out: TextIO, fmt: str) -> int:
    code = EXIT_OK
    for lemma in lemmas:
        listed = sorted({e.noun_class for e in lex.lookup(lemma, "noun") if e.noun_class})
        try:
            classes = listed or list(lexicon.classify_noun(lemma))
        except ValueError:
            code = EXIT_UNKNOWN
            classes = []
        _emit(out, fmt, {"lemma": lemma, "classes": classes, "listed": bool(listed),
                         "class": ",".join(map(str, classes)) or "?"}, ("lemma", "class"))
    return code


def parse_subject(spec: str, an: Analyzer) -> agreement.AgrBundle:
    """A subject given as features (3.sg.masc, 1.sg.dat, 3.pl.neuter.irrational,
    3.sg.masc.hon, aanpaal) or as a noun token to analyse."""
    if spec in agreement.GENDER_VALUES:
        return agreement.AgrBundle.from_gender_value(spec)
    parts = spec.split(".")
    if parts[0] in ("1", "2", "3"):
        kw: dict = {"person": int(parts[0])}
        for p in parts[1:]:
            if p in agreement.NUMBERS:
                kw["number"] = p
            elif p in agreement.GENDERS:
                kw["gender"] = p
            elif p in ("rational", "irrational"):
                kw["rationality"] = p
            elif p == "hon":
                kw["honorific"] = True
            elif p in ("nom", "acc", "dat", "ins", "soc", "gen", "loc", "abl"):
                kw["case"] = p
            else:
                raise InputError(f"unknown subject feature {p!r} in {spec}")
        if kw.get("rationality") == "irrational":
            kw.setdefault("gender", "neuter")
        if kw.get("gender") == "neuter":
            kw.setdefault("rationality", "irrational")
        if "number" not in kw:
            raise InputError(f"subject {spec} needs a number (sg or pl)")
        try:
            return agreement.AgrBundle(**kw)
        except TagError as exc:
            raise InputError(f"subject {spec}: {exc}") from None
    for a in an.analyze(spec):
        try:
            return agreement.bundle_of(a)
        except TagError:
            continue
    raise InputError(f"subject {spec} is neither a feature list nor a known noun")


def cmd_agree(an: Analyzer, args: Sequence[str], out: TextIO, fmt: str, *,
              lenient: bool, disjunction: bool) -> int:
    if len(args) < 2:
        raise InputError("agree needs one or more subjects followed by a verb token")
    *subjects, verb = args
    bundles = [parse_subject(s, an) for s in subjects]
    readings = an.analyze(verb)
    if not readings:
        _emit(out, fmt, {"verb": verb, "status": "?"}, ("verb", "status"))
        return EXIT_UNKNOWN
    if disjunction and len(bundles) > 1:
        result, chosen = agreement.check_disjunction(bundles, readings[0]), readings[0]
    else:
        subject = agreement.resolve_coordination(bundles)
        result, chosen = agreement.check_readings(subject, readings, lenient_plural=lenient)
    record = {"verb": verb, "tag": chosen.tag if chosen else None, **result.to_dict()}
    if fmt == "json-lines":
        out.write(json.dumps(record, ensure_ascii=False) + "\n")
    else:
        detail = "; ".join(f"{m.slot}: expected {m.expected}, found {m.found}" for m in result.mismatches)
        flags = "leniency applied" if result.leniency_applied else ""
        out.write("\t".join(x for x in (verb, record["tag"] or "", result.status, detail, flags,
                                        "; ".join(result.notes)) ) + "\n")
    return EXIT_OK


def cmd_selftest(lex: Lexicon, out: TextIO, fmt: str) -> int:
    results = fixtures.selftest(lex)
    for r in results:
        rec = {"fixture": r.name, "status": "pass" if r.ok else "fail", "passed": r.passed,
               "total": r.total, "failures": list(r.failures)}
        if fmt == "json-lines":
            out.write(json.dumps(rec, ensure_ascii=False) + "\n")
        else:
            out.write(f"{rec['status'].upper()}\t{r.name}\t{r.passed}/{r.total}\n")
            for f in r.failures[:20]:
                out.write(f"\t{f}\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_SELFTEST


# -- entry point -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tamilmorph", description=__doc__)
    p.add_argument("--lexicon", required=True, type=Path, help="TSV lexicon file")
    p.add_argument("--mode", choices=MODES, default="analyze")
    p.add_argument("--format", choices=("tsv", "json-lines"), default="tsv")
    p.add_argument("--lenient-plural", action="store_true",
                   help="accept neuter singular verbs with plural irrational subjects")
    p.add_argument("--enable-ee-clitic", action="store_true", help="recognise the emphatic clitic ஏ")
    p.add_argument("--disjunction", action="store_true",
                   help="agree mode: subjects are joined by ஓ or அல்லது")
    p.add_argument("args", nargs="*",
                   help="tokens (analyze), LEMMA TAG (generate), lemmas (paradigm, classify), "
                        "SUBJECT... VERB (agree); analyze and generate read stdin when empty")
    return p


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
         stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    out, err = stdout or sys.stdout, stderr or sys.stderr
    ns = build_parser().parse_args(argv)
    try:
        args = _check_args(ns.args)
        lex = lexicon.load(ns.lexicon)
        enabled = clitics.DEFAULT_ENABLED | ({"emph_ee"} if ns.enable_ee_clitic else set())
        an = Analyzer(lex, frozenset(enabled))
        if ns.mode in ("analyze", "generate") and not args:
            text = stdin.read() if stdin is not None else decode(sys.stdin.buffer.read())
            if ns.mode == "analyze":
                args = text.split()
            else:
                pairs = [tuple(line.split("\t")[:2]) for line in text.splitlines() if line.strip()]
                if any(len(pr) != 2 for pr in pairs):
                    raise InputError("generate input lines must be LEMMA<TAB>TAG")
                return cmd_generate(lex, pairs, out, ns.format, err)
        if ns.mode == "analyze":
            return cmd_analyze(an, args, out, ns.format)
        if ns.mode == "generate":
            if len(args) % 2:
                raise InputError("generate takes LEMMA TAG pairs")
            return cmd_generate(lex, list(zip(args[::2], args[1::2])), out, ns.format, err)
        if ns.mode == "paradigm":
            return cmd_paradigm(an, args, out, ns.format)
        if ns.mode == "classify":
            return cmd_classify(lex, args, out, ns.format)
        if ns.mode == "agree":
            return cmd_agree(an, args, out, ns.format, lenient=ns.lenient_plural,
                             disjunction=ns.disjunction)
        return cmd_selftest(lex, out, ns.format)
    except (InputError, LexiconError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
