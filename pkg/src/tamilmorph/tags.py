"""Tag vocabulary shared by the analysers, the generator and the CLI."""

from __future__ import annotations


class TagError(ValueError):
    """A tag string or feature bundle violates a stated invariant."""


CASES = ("nom", "acc", "ins", "soc", "dat", "abl", "gen", "loc", "voc")

# case -> {allomorph name: suffix}; None names the default
CASE_SUFFIXES: dict[str, dict[str | None, str]] = {
    "nom": {None: ""},
    "acc": {None: "ஐ"},
    "ins": {None: "ஆல்"},
    "soc": {None: "உடன்", "ootu": "ஓடு"},
    "dat": {None: "உக்கு", "kku": "க்கு", "ku": "கு", "akku": "அக்கு"},
    "abl": {None: "இலிருந்து", "itam": "இடமிருந்து"},
    "gen": {None: "இன்", "atu": "அது", "utaiya": "உடைய"},
    "loc": {None: "இல்", "itam": "இடம்"},
    "voc": {None: "ஏ", "aa": "ஆ", "ii": "ஈ"},
}

EUPHONICS = {"in": "இன்", "an": "அன்", "u": "உ"}
EUPH_SEQUENCES = ((), ("in",), ("an",), ("in", "u"))

NOUN_DERIVATIONS = {
    "adj_aana": "ஆன",
    "adj_ulla": "உள்ள",
    "adv_aaka": "ஆக",
    "adv_aay": "ஆய்",
    "nmod": "",
}

CLITICS = {
    "q_aa": "ஆ",
    "emph_taan": "தான்",
    "incl_um": "உம்",
    "disj_oo": "ஓ",
    "emph_ee": "ஏ",
}

PNGS = ("1s", "1p", "2s", "2p", "3sm", "3sf", "3sn", "3pe", "3pn", "3sh", "3ph")
