"""Analysis records and the rule trace shared by generation and analysis."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Protocol, Sequence

from . import sandhi, script
from .lexicon import LexEntry

# morphological (non-junction) rules recorded alongside sandhi rule ids;
# each maps (left phonemes, morph phonemes) to the new phonemes
Phon = tuple[str, ...]
MORPH_RULES: dict[str, tuple[str, Callable[[Phon, Phon], Phon]]] = {}


def morph_rule(rule_id: str, description: str,
               fn: Callable[[Phon, Phon], Phon] | None = None) -> str:
    MORPH_RULES.setdefault(rule_id, (description, fn or (lambda l, r: l + r)))
    return rule_id


def known_rule(rule_id: str) -> bool:
    return rule_id in sandhi.RULES or rule_id in MORPH_RULES


def apply_rule(rule_id: str, left: str, right: str) -> str:
    if rule_id in MORPH_RULES:
        fn = MORPH_RULES[rule_id][1]
        return script.from_phonemes(fn(script.to_phonemes(left), script.to_phonemes(right)))
    try:
        return sandhi.apply_rule(rule_id, left, right)
    except KeyError:
        raise InternalConsistencyError(f"unknown rule id {rule_id}") from None


class InternalConsistencyError(RuntimeError):
    pass


class Features(Protocol):
    def tag(self) -> str: ...


@dataclass(frozen=True)
class Morph:
    surface: str
    tag: str


def fold(morphs: Sequence[Morph], rules: Sequence[str]) -> str:
    """Rebuild a surface form by applying each junction rule in order."""
    if len(rules) != len(morphs) - 1:
        raise InternalConsistencyError(f"{len(morphs)} morphs but {len(rules)} junction rules")
    cur = morphs[0].surface
    for m, r in zip(morphs[1:], rules):
        cur = apply_rule(r, cur, m.surface)
    return cur


class Builder:
    """Accumulates a surface form as underlying morphs plus one rule per junction."""

    def __init__(self, text: str, tag: str):
        self.morphs: list[Morph] = [Morph(text, tag)]
        self.rules: list[str] = []
        self.surface = text

    def copy(self) -> "Builder":
        b = Builder.__new__(Builder)
        b.morphs, b.rules, b.surface = list(self.morphs), list(self.rules), self.surface
        return b

    def join(self, suffix: str, tag: str, noun_class: int | None = None) -> "Builder":
        res = sandhi.join(self.surface, suffix, noun_class)
        return self._push(Morph(suffix, tag), res.rule_id, res.surface)

    def rewrite(self, morph: str, tag: str, rule_id: str) -> "Builder":
        """Attach ``morph`` with a named stem-level rule (oblique, tense stem, ...)."""
        if not known_rule(rule_id):
            raise InternalConsistencyError(f"unregistered rule {rule_id}")
        return self._push(Morph(morph, tag), rule_id, apply_rule(rule_id, self.surface, morph))

    def append(self, text: str, tag: str, rule_id: str = sandhi.PLAIN) -> "Builder":
        return self._push(Morph(text, tag), rule_id, self.surface + text)

    def compound(self, other: "Builder") -> "Builder":
        res = sandhi.join_compound(self.surface, other.surface)
        self.morphs.extend(other.morphs)
        self.rules.append(res.rule_id)
        self.rules.extend(other.rules)
        self.surface = res.surface
        return self

    def _push(self, m: Morph, rule_id: str, surface: str) -> "Builder":
        self.morphs.append(m)
        self.rules.append(rule_id)
        self.surface = surface
        return self


@dataclass(frozen=True)
class Analysis:
    token: str
    entry: LexEntry
    features: Any
    segmentation: tuple[Morph, ...]
    rules_fired: tuple[str, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def lemma(self) -> str:
        return self.entry.fixed[0] if self.entry.fixed else self.entry.lemma

    @property
    def tag(self) -> str:
        return self.features.tag()

    def to_dict(self) -> dict:
        return {
            "token": self.token,
            "lemma": self.lemma,
            "pos": self.entry.pos,
            "tag": self.tag,
            "segmentation": [[m.surface, m.tag] for m in self.segmentation],
            "rules": list(self.rules_fired),
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def from_builder(token: str, entry: LexEntry, features: Any, b: Builder,
                 notes: tuple[str, ...] = ()) -> Analysis:
    return Analysis(token, entry, features, tuple(b.morphs), tuple(b.rules), notes)


def replay(analysis: Analysis) -> str:
    """Regenerate the analysed token and check it against the stored trace."""
    from .analyzer import build  # deferred: analyzer imports this module

    stale = [r for r in analysis.rules_fired if not known_rule(r)]
    if stale:
        raise InternalConsistencyError(f"unknown rule ids {stale}")
    b = build(analysis.entry, analysis.features)
    if tuple(b.rules) != analysis.rules_fired:
        raise InternalConsistencyError(
            f"rule trace differs: stored {analysis.rules_fired}, replayed {tuple(b.rules)}")
    folded = fold(analysis.segmentation, analysis.rules_fired)
    if folded != b.surface or folded != analysis.token:
        raise InternalConsistencyError(
            f"trace folds to {folded}, generator gives {b.surface}, token is {analysis.token}")
    return folded
