"""Word-final clitics: interrogative ஆ, emphatic தான், inclusive உம், disjunctive ஓ, emphatic ஏ."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, TYPE_CHECKING

from . import sandhi
from .tags import CLITICS as CLITIC_FORMS

if TYPE_CHECKING:  # pragma: no cover
    from .trace import Builder

# ஏ is provisional and off unless explicitly enabled
DEFAULT_ENABLED = frozenset(CLITIC_FORMS) - {"emph_ee"}


class CliticError(ValueError):
    pass


@dataclass(frozen=True)
class Clitic:
    name: str

    @property
    def form(self) -> str:
        return CLITIC_FORMS[self.name]


def _check(stem: str, clitic: str) -> str:
    if clitic not in CLITIC_FORMS:
        raise CliticError(f"unknown clitic {clitic!r}")
    if sandhi.word_augment(stem):
        raise CliticError(f"{stem} ends in an augment; a clitic cannot follow it")
    return CLITIC_FORMS[clitic]


def attach(stem: str, clitic: str) -> str:
    """``stem`` with ``clitic`` attached (final உ fuses, other vowels glide)."""
    return sandhi.join(stem, _check(stem, clitic)).surface


def attach_builder(b: "Builder", clitic: str) -> None:
    b.join(_check(b.surface, clitic), clitic)


def strip(token: str, is_word: Callable[[str], bool] | None = None,
          enabled: frozenset[str] = DEFAULT_ENABLED) -> list[tuple[str, str | None]]:
    """The no-clitic reading plus every clitic split that inverts :func:`attach`.

    With ``is_word`` given, a split is kept only if its stem passes it.
    """
    out: list[tuple[str, str | None]] = [(token, None)]
    for name in sorted(enabled):
        form = CLITIC_FORMS[name]
        for stem, _rule in sandhi.split_candidates(token, form):
            try:
                if attach(stem, name) != token:
                    continue
            except CliticError:
                continue
            if is_word is None or is_word(stem):
                if (stem, name) not in out:
                    out.append((stem, name))
    return out
