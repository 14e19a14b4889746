"""Conditionals, tolerance, Z-partitions and the System Z ranking function."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .kernels import CompiledKB
from .logic import (
    Formula,
    PossibleWorld,
    atoms_of,
    check_world_limit,
    eval_array,
    evaluate,
    format_formula,
    parse_conditional_parts,
)

# Ranks are ints; the infinite rank is math.inf so that ``n < INFINITY`` holds
# for every natural n and ``INFINITY < INFINITY`` does not.
INFINITY = math.inf


class Indicator(enum.Enum):
    VERIFIED = 1
    FALSIFIED = 0
    NOT_APPLICABLE = "u"

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Conditional:
    """Default rule ``(consequent | antecedent)``: if antecedent then usually consequent."""

    consequent: Formula
    antecedent: Formula

    def __str__(self) -> str:
        return f"({format_formula(self.consequent, 2)} | {format_formula(self.antecedent)})"

    @classmethod
    def parse(cls, text: str) -> "Conditional":
        return cls(*parse_conditional_parts(text))

    def atoms(self) -> set[str]:
        return atoms_of(self.consequent) | atoms_of(self.antecedent)


@dataclass(frozen=True)
class ConditionalKB:
    conditionals: tuple[Conditional, ...]
    atoms: tuple[str, ...]

    def __post_init__(self):
        conds = tuple(dict.fromkeys(self.conditionals))
        atoms = tuple(self.atoms)
        unknown = set().union(*(c.atoms() for c in conds)) - set(atoms) if conds else set()
        if unknown:
            raise ValueError(f"conditionals mention atoms outside the signature: {sorted(unknown)}")
        object.__setattr__(self, "conditionals", conds)
        object.__setattr__(self, "atoms", atoms)

    def __len__(self) -> int:
        return len(self.conditionals)

    def __iter__(self) -> Iterator[Conditional]:
        return iter(self.conditionals)

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.conditionals)

    def compile(self, backend: str | None = None) -> CompiledKB:
        return CompiledKB([(c.consequent, c.antecedent) for c in self.conditionals], self.atoms, backend)


def _world(bits: int, atoms: Sequence[str]) -> PossibleWorld:
    return PossibleWorld(bits, tuple(atoms))


def indicator(c: Conditional, w: PossibleWorld) -> Indicator:
    if not evaluate(w, c.antecedent):
        return Indicator.NOT_APPLICABLE
    return Indicator.VERIFIED if evaluate(w, c.consequent) else Indicator.FALSIFIED


def tolerates(kb: ConditionalKB, c: Conditional, world_limit: int | None = None,
              backend: str | None = None) -> PossibleWorld | None:
    """First world verifying ``c`` while falsifying nothing in ``kb``, if any."""
    check_world_limit(len(kb.atoms), world_limit)
    conds = list(kb.conditionals)
    if c in conds:
        target = conds.index(c)
        mask = (1 << len(conds)) - 1
    else:
        target = len(conds)
        mask = (1 << len(conds)) - 1
        conds.append(c)
    ckb = ConditionalKB(tuple(conds), kb.atoms).compile(backend)
    bits = ckb.first_witness(target, mask)
    return None if bits < 0 else _world(bits, kb.atoms)


@dataclass(frozen=True)
class ZPartition:
    """Strata ``(D0, .., Dn)`` plus the never-tolerated residue ``infinite_stratum``."""

    kb: ConditionalKB
    strata: tuple[tuple[Conditional, ...], ...]
    infinite_stratum: tuple[Conditional, ...]
    world_limit: int | None = field(default=None, compare=False)
    backend: str | None = field(default=None, compare=False)

    @cached_property
    def _z(self) -> dict[Conditional, float]:
        z: dict[Conditional, float] = {c: i for i, layer in enumerate(self.strata) for c in layer}
        z.update((c, INFINITY) for c in self.infinite_stratum)
        return z

    @cached_property
    def compiled(self) -> CompiledKB:
        return self.kb.compile(self.backend)

    @cached_property
    def z_vector(self) -> list[int]:
        """Stratum index per KB conditional, -1 for the infinite stratum."""
        return [-1 if self._z[c] == INFINITY else int(self._z[c]) for c in self.kb.conditionals]

    def z_rank(self, c: Conditional) -> float:
        return z_rank(self, c)

    def __str__(self) -> str:
        lines = []
        for i, layer in enumerate(self.strata):
            lines.append(f"stratum {i}: " + ", ".join(str(c) for c in layer))
        lines.append("infinite: " + ", ".join(str(c) for c in self.infinite_stratum))
        return "\n".join(lines)


def _members(kb: ConditionalKB, mask: int) -> tuple[Conditional, ...]:
    return tuple(c for j, c in enumerate(kb.conditionals) if mask >> j & 1)


def z_partition(kb: ConditionalKB, world_limit: int | None = None, backend: str | None = None) -> ZPartition:
    """Peel off tolerated layers until nothing is left or nothing more is tolerated."""
    check_world_limit(len(kb.atoms), world_limit)
    ckb = kb.compile(backend)
    remaining = ckb.full_mask
    strata = []
    while remaining:
        layer = ckb.level_scan(remaining)
        if layer == 0:
            break
        strata.append(_members(kb, layer))
        remaining &= ~layer
    part = ZPartition(kb, tuple(strata), _members(kb, remaining), world_limit, backend)
    part.__dict__["compiled"] = ckb
    return part


def z_rank(p: ZPartition, c: Conditional) -> float:
    try:
        return p._z[c]
    except KeyError:
        raise KeyError(f"{c} is not part of the partitioned knowledge base") from None


def kappa_z(p: ZPartition, w: PossibleWorld) -> float:
    """One plus the highest stratum among falsified conditionals; 0 if none is falsified."""
    rank = 0
    for c in p.kb.conditionals:
        if indicator(c, w) is Indicator.FALSIFIED:
            rank = max(rank, z_rank(p, c) + 1)
    return rank


def _as_rank(r: int) -> float:
    return INFINITY if r < 0 else int(r)


def iter_ranked_worlds(p: ZPartition) -> Iterator[tuple[PossibleWorld, float]]:
    """Every world with its kappa^Z value, in enumeration order, streamed in blocks."""
    check_world_limit(len(p.kb.atoms), p.world_limit)
    for lo, ranks in p.compiled.iter_rank_blocks(p.z_vector):
        for k, r in enumerate(ranks.tolist()):
            yield _world(lo + k, p.kb.atoms), _as_rank(r)


def min_worlds(p: ZPartition) -> list[PossibleWorld]:
    """``kappa^-1(0)`` in enumeration order."""
    check_world_limit(len(p.kb.atoms), p.world_limit)
    out = []
    for lo, ranks in p.compiled.iter_rank_blocks(p.z_vector):
        out.extend(_world(lo + int(k), p.kb.atoms) for k in (ranks == 0).nonzero()[0])
    return out


def zero_world_counts(p: ZPartition) -> tuple[int, dict[str, int]]:
    """``|kappa^-1(0)|`` and, per atom, the number of rank-0 worlds where it is true.

    A world has rank 0 exactly when it falsifies no conditional, so this needs
    no ranks at all.
    """
    check_world_limit(len(p.kb.atoms), p.world_limit)
    total, counts = p.compiled.zero_scan()
    return total, {a: int(n) for a, n in zip(p.kb.atoms, counts.tolist())}


def kappa_of_formula(p: ZPartition, f: Formula) -> float:
    """``min{kappa(w) | w |= f}``; INFINITY without models."""
    check_world_limit(len(p.kb.atoms), p.world_limit)
    unknown = atoms_of(f) - set(p.kb.atoms)
    if unknown:
        raise KeyError(f"unknown atoms {sorted(unknown)}")
    index = {a: i for i, a in enumerate(p.kb.atoms)}
    best = INFINITY
    for lo, ranks in p.compiled.iter_rank_blocks(p.z_vector):
        worlds = np.arange(lo, lo + len(ranks), dtype=np.uint64)
        sel = ranks[eval_array(f, worlds, index) & (ranks >= 0)]
        if sel.size:
            best = min(best, int(sel.min()))
            if best == 0:
                break
    return best


def accepts(p: ZPartition, c: Conditional) -> bool:
    """``kappa(psi & phi) < kappa(psi & !phi)``."""
    return kappa_of_formula(p, c.antecedent & c.consequent) < kappa_of_formula(p, c.antecedent & ~c.consequent)


def entails_z(kb: ConditionalKB, f: Formula, world_limit: int | None = None,
              backend: str | None = None) -> bool:
    """True iff ``f`` holds in every rank-0 world of kappa^Z (vacuous if there are none)."""
    p = z_partition(kb, world_limit, backend)
    return kappa_of_formula(p, ~f) > 0
