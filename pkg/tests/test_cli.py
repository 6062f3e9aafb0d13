from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from tamilmorph import cli, fixtures
from tamilmorph.lexicon import default_lexicon_path

LEX = str(default_lexicon_path())


def run(*args, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(["--lexicon", LEX, *args], io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def test_analyze_args():
    code, out, _ = run("மரங்களினால்")
    assert code == 0
    assert "மரங்களினால்\tமரம்\tn.pl.euph_in.ins" in out.splitlines()


def test_analyze_stdin_and_unknown():
    code, out, _ = run(stdin="வாங்கிக்கொடுத்தான்\nxyz\n")
    lines = out.splitlines()
    assert "வாங்கிக்கொடுத்தான்\tவாங்கு\tv.vpart.aug_k+கொடு.past.3sm" in lines
    assert "xyz\t?" in lines
    assert code == cli.EXIT_UNKNOWN


def test_analyze_order_is_by_tag():
    _, out, _ = run("அவனா")
    tags = [line.split("\t")[2] for line in out.splitlines()]
    assert tags == sorted(tags) and len(tags) > 1


def test_output_stable():
    assert run("செய்யும்", "மரம்") == run("செய்யும்", "மரம்")


def test_json_lines():
    _, out, _ = run("--format", "json-lines", "நடந்தான்")
    rec = json.loads(out.splitlines()[0])
    assert rec["lemma"] == "நட" and rec["tag"] == "v.past.3sm"


def test_invalid_utf8_reports_offset():
    p = subprocess.run([sys.executable, "-m", "tamilmorph.cli", "--lexicon", LEX],
                       input="மரம் ".encode() + b"\xff\xfe", capture_output=True)
    assert p.returncode == cli.EXIT_INPUT
    assert b"byte offset 13" in p.stderr


def test_decode():
    with pytest.raises(cli.InputError, match="byte offset 1"):
        cli.decode(b"a\xc3")


@pytest.mark.parametrize("lemma, tag, surface", [
    ("மரம்", "n.pl.euph_in.ins", "மரங்களினால்"),
    ("நட", "v.past.3sm", "நடந்தான்"),
    ("மரம்", "n.sg.nom", "மரம்"),
])
def test_generate(lemma, tag, surface):
    code, out, _ = run("--mode", "generate", lemma, tag)
    assert code == 0 and out.splitlines() == [f"{lemma}\t{tag}\t{surface}"]


def test_generate_stdin():
    code, out, _ = run("--mode", "generate", stdin="நட\tv.past.3sm\n")
    assert code == 0 and out.strip().endswith("நடந்தான்")


def test_generate_invalid_tag_names_problem():
    code, _, err = run("--mode", "generate", "நட", "v.past.3sm.neg_maattu.1s")
    assert code == cli.EXIT_INPUT and err.strip()
    code, _, err = run("--mode", "generate", "நட", "v.past")
    assert code == cli.EXIT_INPUT and "நட" in err


def test_generate_inverts_analyze(an):
    for _, token, lemma, tag in fixtures.rows("paper_examples.tsv"):
        # a noun written joined to the next word analyses as its own span
        spans = {a.token for a in an.analyze(token) if (a.lemma, a.tag) == (lemma, tag)}
        _, out, _ = run("--mode", "generate", lemma, tag)
        assert spans <= {line.split("\t")[2] for line in out.splitlines()}, token


def test_classify():
    code, out, _ = run("--mode", "classify", "சுவர்")
    assert code == 0 and out.strip() == "சுவர்\t16"


def test_paradigm_reports_reference_delta():
    code, out, _ = run("--mode", "paradigm", "நட")
    assert code == 0
    assert any(line.startswith("# reference count 582, delta") for line in out.splitlines())
    assert "நடந்தான்" in out


def test_agree():
    _, out, _ = run("--mode", "agree", "3.pl.irrational", "வந்தது")
    assert "\tmismatch\t" in out
    _, out, _ = run("--mode", "agree", "--lenient-plural", "3.pl.irrational", "வந்தது")
    assert "\tok\t" in out and "leniency applied" in out
    _, out, _ = run("--mode", "agree", "--format", "json-lines", "1.sg", "2.sg", "வந்தோம்")
    assert json.loads(out)["status"] == "ok"
    _, out, _ = run("--mode", "agree", "--disjunction", "1.sg", "2.sg", "வந்தோம்")
    assert "undetermined" in out


def test_agree_bad_subject():
    code, _, err = run("--mode", "agree", "5.sg", "வந்தான்")
    assert code == cli.EXIT_INPUT and "5.sg" in err


def test_ee_flag():
    _, out, _ = run("அவனே")
    assert "emph_ee" not in out
    _, out, _ = run("--enable-ee-clitic", "அவனே")
    assert "emph_ee" in out


def test_selftest_passes():
    code, out, _ = run("--mode", "selftest")
    assert code == 0 and all(line.startswith("PASS") for line in out.splitlines() if not line.startswith("\t"))


def test_selftest_empty_lexicon(tmp_path):
    empty = tmp_path / "empty.tsv"
    empty.write_text("", encoding="utf-8")
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(["--lexicon", str(empty), "--mode", "selftest"], None, out, err)
    assert code == cli.EXIT_SELFTEST
    assert "missing from the lexicon" in out.getvalue()


def test_missing_lexicon_file(tmp_path):
    code, _, err = run_with(tmp_path / "nope.tsv")
    assert code == cli.EXIT_INPUT and "error" in err


def run_with(path):
    out, err = io.StringIO(), io.StringIO()
    return cli.main(["--lexicon", str(path), "மரம்"], io.StringIO(), out, err), out.getvalue(), err.getvalue()
