"""Translations from argumentation frameworks to conditional knowledge bases."""

from __future__ import annotations

from typing import Callable

from .af import ArgumentationFramework, attackers
from .logic import Atom, Not, conjunction
from .systemz import Conditional, ConditionalKB

Translation = Callable[[ArgumentationFramework], ConditionalKB]


def theta(af: ArgumentationFramework) -> ConditionalKB:
    """One conditional per argument: ``(a | !b1 & .. & !bk)`` over a's attackers.

    An unattacked argument gets ``(a | top)``. Attackers appear in canonical order.
    """
    conds = tuple(
        Conditional(Atom(a), conjunction([Not(Atom(b)) for b in attackers(af, a)]))
        for a in af.arguments
    )
    return ConditionalKB(conds, af.arguments)


TRANSLATIONS: dict[str, Translation] = {"theta": theta}


def get_translation(name: str) -> Translation:
    try:
        return TRANSLATIONS[name]
    except KeyError:
        raise ValueError(f"unknown translation {name!r}; known: {sorted(TRANSLATIONS)}") from None
