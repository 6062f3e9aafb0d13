from __future__ import annotations

import pytest

from tamilmorph import lexicon
from tamilmorph.analyzer import analyzer_for


@pytest.fixture(scope="session")
def lex():
    return lexicon.load_default()


@pytest.fixture(scope="session")
def an(lex):
    return analyzer_for(lex)


@pytest.fixture(scope="session")
def entry(lex):
    def get(lemma: str, pos: str = "noun", cls=None):
        for e in lex.lookup(lemma, pos):
            if cls is None or cls in (e.noun_class, e.verb_class):
                return e
        raise LookupError(lemma)
    return get
