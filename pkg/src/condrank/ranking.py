"""Conditional-counting scores and the Ccbs / Ccbs' ranking-based semantics.

An argument's score is the number of most plausible worlds of System Z over
the translated knowledge base in which the argument's atom is true. Ccbs ranks
by score alone; Ccbs' additionally pushes every self-attacker below all other
arguments.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from itertools import groupby

from .af import ArgumentationFramework, self_attackers
from .logic import check_world_limit
from .systemz import ZPartition, z_partition, zero_world_counts
from .translation import Translation, theta


class Semantics(enum.Enum):
    CCBS = "ccbs"
    CCBS_PRIME = "ccbs-prime"

    @classmethod
    def parse(cls, value: "str | Semantics") -> "Semantics":
        if isinstance(value, cls):
            return value
        key = str(value).lower().replace("_", "-")
        if key in ("ccbs'", "ccbsprime"):
            key = "ccbs-prime"
        return cls(key)


class Comparison(enum.Enum):
    STRICTLY_MORE = ">"
    STRICTLY_LESS = "<"
    EQUALLY_ACCEPTABLE = "="


@dataclass(frozen=True)
class CcsScores:
    scores: dict[str, int]
    zero_world_count: int
    partition: ZPartition | None = field(default=None, compare=False, repr=False)

    def __getitem__(self, a: str) -> int:
        return self.scores[a]


@dataclass(frozen=True)
class ArgumentRanking:
    """Total preorder as equivalence classes, most acceptable first."""

    classes: tuple[tuple[str, ...], ...]
    semantics: Semantics
    scores: CcsScores | None = None

    def __post_init__(self):
        pos = {}
        for i, cls_ in enumerate(self.classes):
            if not cls_:
                raise ValueError("ranking classes must be nonempty")
            for a in cls_:
                if a in pos:
                    raise ValueError(f"argument {a!r} occurs in two classes")
                pos[a] = i
        object.__setattr__(self, "_pos", pos)

    def position(self, a: str) -> int:
        try:
            return self._pos[a]
        except KeyError:
            raise KeyError(f"argument {a!r} is not ranked") from None

    @property
    def arguments(self) -> list[str]:
        return [a for c in self.classes for a in c]

    def __str__(self) -> str:
        return " > ".join(" = ".join(c) for c in self.classes)

    def to_dict(self) -> dict:
        return {
            "semantics": self.semantics.value,
            "zero_world_count": self.scores.zero_world_count if self.scores else None,
            "scores": dict(self.scores.scores) if self.scores else {},
            "ranking": [list(c) for c in self.classes],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def ccs(af: ArgumentationFramework, translation: Translation = theta,
        world_limit: int | None = None, backend: str | None = None) -> CcsScores:
    """Per-argument true counts over ``kappa^-1(0)`` of System Z on the translated KB."""
    check_world_limit(len(af), world_limit)
    kb = translation(af)
    part = z_partition(kb, world_limit, backend)
    total, counts = zero_world_counts(part)
    return CcsScores({a: counts[a] for a in af.arguments}, total, part)


def _group(args: list[str], scores: CcsScores) -> list[tuple[str, ...]]:
    # sorted() is stable, so canonical order survives inside each class
    ordered = sorted(args, key=lambda a: -scores[a])
    return [tuple(g) for _, g in groupby(ordered, key=lambda a: scores[a])]


def ccbs(af: ArgumentationFramework, scores: CcsScores | None = None, **kwargs) -> ArgumentRanking:
    scores = ccs(af, **kwargs) if scores is None else scores
    return ArgumentRanking(tuple(_group(list(af.arguments), scores)), Semantics.CCBS, scores)


def ccbs_prime(af: ArgumentationFramework, scores: CcsScores | None = None, **kwargs) -> ArgumentRanking:
    scores = ccs(af, **kwargs) if scores is None else scores
    selfish = set(self_attackers(af))
    upper = [a for a in af.arguments if a not in selfish]
    lower = [a for a in af.arguments if a in selfish]
    return ArgumentRanking(tuple(_group(upper, scores) + _group(lower, scores)), Semantics.CCBS_PRIME, scores)


def rank(af: ArgumentationFramework, semantics: "Semantics | str" = Semantics.CCBS, **kwargs) -> ArgumentRanking:
    semantics = Semantics.parse(semantics)
    return (ccbs if semantics is Semantics.CCBS else ccbs_prime)(af, **kwargs)


def compare(r: ArgumentRanking, a: str, b: str) -> Comparison:
    pa, pb = r.position(a), r.position(b)
    if pa < pb:
        return Comparison.STRICTLY_MORE
    if pa > pb:
        return Comparison.STRICTLY_LESS
    return Comparison.EQUALLY_ACCEPTABLE
