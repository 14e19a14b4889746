"""Checks for Abstraction, Independence, Void Precedence and Self-Contradiction.

Each check inspects one framework (or pair) and returns a ``PostulateReport``;
``run_suite`` drives them over seeded random frameworks and merges the reports
per postulate.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from .af import (
    ArgumentationFramework,
    apply_isomorphism,
    connected_components,
    disjoint_union,
    random_af,
    self_attackers,
    unattacked,
)
from .logic import check_world_limit
from .ranking import ArgumentRanking, Comparison, Semantics, compare, rank


class Postulate(enum.Enum):
    ABSTRACTION = "abstraction"
    INDEPENDENCE = "independence"
    VOID_PRECEDENCE = "void-precedence"
    SELF_CONTRADICTION = "self-contradiction"

    @classmethod
    def parse(cls, value: "str | Postulate") -> "Postulate":
        if isinstance(value, cls):
            return value
        return cls(str(value).lower().replace("_", "-"))


@dataclass
class Violation:
    framework: ArgumentationFramework
    pair: tuple[str, str]
    details: str

    def to_dict(self) -> dict:
        return {
            "framework": {
                "arguments": list(self.framework.arguments),
                "attacks": [list(e) for e in self.framework.sorted_attacks()],
            },
            "pair": list(self.pair),
            "details": self.details,
        }


@dataclass
class PostulateReport:
    postulate: Postulate
    semantics: Semantics
    instances_checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def merge(self, other: "PostulateReport") -> None:
        if (other.postulate, other.semantics) != (self.postulate, self.semantics):
            raise ValueError("can only merge reports of the same postulate and semantics")
        self.instances_checked += other.instances_checked
        self.violations.extend(other.violations)

    def to_dict(self) -> dict:
        return {
            "postulate": self.postulate.value,
            "semantics": self.semantics.value,
            "instances_checked": self.instances_checked,
            "violation_count": len(self.violations),
            "violations": [v.to_dict() for v in self.violations],
        }


def _ranking(af, semantics, ranking, world_limit):
    return ranking if ranking is not None else rank(af, semantics, world_limit=world_limit)


def check_abstraction(af: ArgumentationFramework, semantics="ccbs", permutation_seed: int | None = 0,
                      world_limit: int | None = None, ranking: ArgumentRanking | None = None) -> PostulateReport:
    """Rank ``af`` and a renamed copy; three-way comparisons must be preserved.

    ``permutation_seed=None`` uses the identity. The copy also lists its
    arguments in shuffled order, so atom bit positions change too.
    """
    semantics = Semantics.parse(semantics)
    report = PostulateReport(Postulate.ABSTRACTION, semantics, 1)
    names = list(af.arguments)
    if permutation_seed is None:
        mapping = {a: a for a in names}
        order = names
    else:
        rng = random.Random(permutation_seed)
        images = names[:]
        rng.shuffle(images)
        mapping = dict(zip(names, images))
        order = images[:]
        rng.shuffle(order)
    renamed = apply_isomorphism(af, mapping)
    renamed = ArgumentationFramework(tuple(order), renamed.attacks)

    r1 = _ranking(af, semantics, ranking, world_limit)
    r2 = rank(renamed, semantics, world_limit=world_limit)
    for x, y in combinations(names, 2):
        before, after = compare(r1, x, y), compare(r2, mapping[x], mapping[y])
        if before is not after:
            report.violations.append(Violation(
                af, (x, y),
                f"{x} {before.value} {y} but {mapping[x]} {after.value} {mapping[y]} after renaming",
            ))
    return report


def check_independence(af1: ArgumentationFramework, af2: ArgumentationFramework, semantics="ccbs",
                       world_limit: int | None = None) -> PostulateReport:
    """Rank the disjoint union and each of its connected components separately;
    comparisons inside a component must agree."""
    semantics = Semantics.parse(semantics)
    union = disjoint_union(af1, af2)
    check_world_limit(len(union), world_limit)
    report = PostulateReport(Postulate.INDEPENDENCE, semantics, 1)
    whole = rank(union, semantics, world_limit=world_limit)
    for comp in connected_components(union):
        part = rank(comp, semantics, world_limit=world_limit)
        for x, y in combinations(comp.arguments, 2):
            local, glob = compare(part, x, y), compare(whole, x, y)
            if local is not glob:
                report.violations.append(Violation(
                    union, (x, y), f"{x} {local.value} {y} in its component but {glob.value} in the union",
                ))
    return report


def _strict_pairs(af, semantics, pairs, ranking, world_limit, postulate, reason):
    semantics = Semantics.parse(semantics)
    report = PostulateReport(postulate, semantics, 1)
    pairs = list(pairs)
    if not pairs:
        return report
    r = _ranking(af, semantics, ranking, world_limit)
    for a, b in pairs:
        got = compare(r, a, b)
        if got is not Comparison.STRICTLY_MORE:
            report.violations.append(Violation(af, (a, b), f"{reason}, yet {a} {got.value} {b}"))
    return report


def check_void_precedence(af: ArgumentationFramework, semantics="ccbs", world_limit: int | None = None,
                          ranking: ArgumentRanking | None = None) -> PostulateReport:
    """Every unattacked argument must be strictly above every attacked one."""
    free = unattacked(af)
    attacked = [b for b in af.arguments if b not in set(free)]
    return _strict_pairs(af, semantics, product(free, attacked), ranking, world_limit,
                         Postulate.VOID_PRECEDENCE, "first is unattacked and second attacked")


def check_self_contradiction(af: ArgumentationFramework, semantics="ccbs", world_limit: int | None = None,
                             ranking: ArgumentRanking | None = None) -> PostulateReport:
    """Every non-self-attacker must be strictly above every self-attacker."""
    selfish = self_attackers(af)
    others = [a for a in af.arguments if a not in set(selfish)]
    return _strict_pairs(af, semantics, product(others, selfish), ranking, world_limit,
                         Postulate.SELF_CONTRADICTION, "second attacks itself and first does not")


@dataclass
class SuiteConfig:
    count: int = 100
    max_n: int = 7
    attack_probability: float = 0.3
    allow_self_attacks: bool = True
    seed: int = 0
    semantics: Semantics = Semantics.CCBS
    postulates: Sequence[Postulate] = tuple(Postulate)
    world_limit: int | None = None

    def __post_init__(self):
        self.semantics = Semantics.parse(self.semantics)
        self.postulates = tuple(dict.fromkeys(Postulate.parse(p) for p in self.postulates))
        if self.count < 0:
            raise ValueError("count must be non-negative")
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if not 0.0 <= self.attack_probability <= 1.0:
            raise ValueError("attack_probability must lie in [0, 1]")
        check_world_limit(self.max_n, self.world_limit)


def run_suite(config: SuiteConfig) -> list[PostulateReport]:
    """Check the configured postulates on ``config.count`` random frameworks.

    Instance ``i`` draws its size and sub-seed from one ``random.Random(seed)``
    stream, so the whole run is reproducible. Independence instances are
    disjoint unions of two random frameworks whose sizes sum to at most max_n.
    """
    rng = random.Random(config.seed)
    sem, limit = config.semantics, config.world_limit
    reports = {p: PostulateReport(p, sem) for p in config.postulates}

    def gen(n, prefix="a"):
        return random_af(n, config.attack_probability, config.allow_self_attacks, rng.getrandbits(64), prefix)

    for _ in range(config.count):
        af = gen(rng.randint(1, config.max_n))
        perm_seed = rng.getrandbits(64)
        if config.max_n >= 2:
            n1 = rng.randint(1, config.max_n - 1)
            n2 = rng.randint(1, config.max_n - n1)
        else:
            n1, n2 = 1, 0
        left, right = gen(n1, "a"), gen(n2, "b")

        r = None
        if any(p in reports for p in (Postulate.ABSTRACTION, Postulate.VOID_PRECEDENCE,
                                       Postulate.SELF_CONTRADICTION)):
            r = rank(af, sem, world_limit=limit)
        for p, report in reports.items():
            if p is Postulate.ABSTRACTION:
                report.merge(check_abstraction(af, sem, perm_seed, limit, ranking=r))
            elif p is Postulate.INDEPENDENCE:
                report.merge(check_independence(left, right, sem, limit))
            elif p is Postulate.VOID_PRECEDENCE:
                report.merge(check_void_precedence(af, sem, limit, ranking=r))
            else:
                report.merge(check_self_contradiction(af, sem, limit, ranking=r))
    return list(reports.values())

