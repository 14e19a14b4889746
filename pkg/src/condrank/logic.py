"""Propositional formulas over argument atoms and bit-indexed possible worlds.

A world over atoms ``(x0, .., x{n-1})`` is an integer whose bit ``i`` holds the
truth value of ``xi``. Worlds are enumerated as ``0 .. 2**n - 1``, i.e. with
the first atom as the least significant bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_WORLD_LIMIT = 24
# world masks are held in uint64
MAX_WORLD_LIMIT = 62


class WorldLimitExceeded(RuntimeError):
    """The atom count is too large for exhaustive world enumeration."""

    def __init__(self, atom_count: int, limit: int):
        self.atom_count = atom_count
        self.limit = limit
        super().__init__(
            f"{atom_count} atoms exceed the world limit of {limit} "
            f"({2 ** atom_count} worlds); raise --world-limit to force enumeration"
        )


def check_world_limit(atom_count: int, limit: int | None = None) -> None:
    limit = DEFAULT_WORLD_LIMIT if limit is None else limit
    if limit < 1:
        raise ValueError("world limit must be at least 1")
    if atom_count > min(limit, MAX_WORLD_LIMIT):
        raise WorldLimitExceeded(atom_count, min(limit, MAX_WORLD_LIMIT))


# -- formulas ---------------------------------------------------------------

class Formula:
    """Base class of the formula tree. Instances are immutable and hashable."""

    __slots__ = ()

    def __invert__(self) -> "Formula":
        return Not(self)

    def __and__(self, other: "Formula") -> "Formula":
        return And((self, other))

    def __or__(self, other: "Formula") -> "Formula":
        return Or((self, other))

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    operands: tuple[Formula, ...]

    def __init__(self, operands: Iterable[Formula] = ()):
        object.__setattr__(self, "operands", tuple(operands))


@dataclass(frozen=True)
class Or(Formula):
    operands: tuple[Formula, ...]

    def __init__(self, operands: Iterable[Formula] = ()):
        object.__setattr__(self, "operands", tuple(operands))


@dataclass(frozen=True)
class _Constant(Formula):
    value: bool


TOP = _Constant(True)
BOTTOM = _Constant(False)


def conjunction(fs: Sequence[Formula]) -> Formula:
    """Conjunction of ``fs`` collapsing the 0- and 1-ary cases (``()`` is TOP)."""
    if not fs:
        return TOP
    if len(fs) == 1:
        return fs[0]
    return And(fs)


def atoms_of(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, Not):
        return atoms_of(f.operand)
    if isinstance(f, (And, Or)):
        out: set[str] = set()
        for g in f.operands:
            out |= atoms_of(g)
        return out
    return set()


def literal_masks(f: Formula, index: dict[str, int]) -> tuple[int, int] | None:
    """Compile a conjunction of literals to ``(positive_mask, negative_mask)``.

    Returns None for anything that is not a (possibly nested) conjunction of
    atoms and negated atoms, and for contradictory conjunctions like ``a & !a``
    or ``bot`` which have no mask representation.
    """
    pos = neg = 0
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            pos |= 1 << index[g.name]
        elif isinstance(g, Not) and isinstance(g.operand, Atom):
            neg |= 1 << index[g.operand.name]
        elif isinstance(g, And):
            stack.extend(g.operands)
        elif g == TOP:
            continue
        else:
            return None
    if pos & neg:
        return None
    return pos, neg


# -- evaluation ---------------------------------------------------------------

def _eval_bits(f: Formula, bits: int, index: dict[str, int]) -> bool:
    if isinstance(f, Atom):
        return bool(bits >> index[f.name] & 1)
    if isinstance(f, Not):
        return not _eval_bits(f.operand, bits, index)
    if isinstance(f, And):
        return all(_eval_bits(g, bits, index) for g in f.operands)
    if isinstance(f, Or):
        return any(_eval_bits(g, bits, index) for g in f.operands)
    if isinstance(f, _Constant):
        return f.value
    raise TypeError(f"not a formula: {f!r}")


def eval_array(f: Formula, worlds: np.ndarray, index: dict[str, int]) -> np.ndarray:
    """Vectorised evaluation of ``f`` on an array of world bit patterns."""
    if isinstance(f, Atom):
        return ((worlds >> np.uint64(index[f.name])) & np.uint64(1)).astype(bool)
    if isinstance(f, Not):
        return ~eval_array(f.operand, worlds, index)
    if isinstance(f, And):
        out = np.ones(worlds.shape, dtype=bool)
        for g in f.operands:
            out &= eval_array(g, worlds, index)
        return out
    if isinstance(f, Or):
        out = np.zeros(worlds.shape, dtype=bool)
        for g in f.operands:
            out |= eval_array(g, worlds, index)
        return out
    if isinstance(f, _Constant):
        return np.full(worlds.shape, f.value, dtype=bool)
    raise TypeError(f"not a formula: {f!r}")


@dataclass(frozen=True)
class PossibleWorld:
    """Total truth assignment; ``bits`` bit ``i`` is the value of ``atoms[i]``."""

    bits: int
    atoms: tuple[str, ...]

    def __post_init__(self):
        if not 0 <= self.bits < (1 << len(self.atoms)):
            raise ValueError(f"world bits {self.bits} out of range for {len(self.atoms)} atoms")

    @property
    def atom_count(self) -> int:
        return len(self.atoms)

    def __getitem__(self, name: str) -> bool:
        return bool(self.bits >> self.atoms.index(name) & 1)

    def true_atoms(self) -> list[str]:
        return [a for i, a in enumerate(self.atoms) if self.bits >> i & 1]

    def __str__(self) -> str:
        return " ".join(a if self.bits >> i & 1 else "!" + a for i, a in enumerate(self.atoms))

    @classmethod
    def from_string(cls, text: str, atoms: Sequence[str]) -> "PossibleWorld":
        """Inverse of ``str``; every atom must occur exactly once as ``x`` or ``!x``."""
        atoms = tuple(atoms)
        values: dict[str, bool] = {}
        for tok in text.split():
            name, value = (tok[1:], False) if tok.startswith("!") else (tok, True)
            if name not in atoms or name in values:
                raise ValueError(f"bad literal {tok!r} in world {text!r}")
            values[name] = value
        if len(values) != len(atoms):
            raise ValueError(f"world {text!r} is not total over {atoms}")
        return cls(sum(1 << i for i, a in enumerate(atoms) if values[a]), atoms)


def _index_for(f: Formula, atoms: Sequence[str]) -> dict[str, int]:
    index = {a: i for i, a in enumerate(atoms)}
    unknown = atoms_of(f) - index.keys()
    if unknown:
        raise KeyError(f"unknown atoms {sorted(unknown)}")
    return index


def evaluate(w: PossibleWorld, f: Formula) -> bool:
    return _eval_bits(f, w.bits, _index_for(f, w.atoms))


def enumerate_worlds(atoms: Sequence[str] | int, world_limit: int | None = None) -> Iterator[PossibleWorld]:
    """Stream all ``2**n`` worlds in increasing bit order.

    ``atoms`` may be an atom-name sequence or a bare count (names ``x0, x1, ..``).
    """
    if isinstance(atoms, int):
        atoms = tuple(f"x{i}" for i in range(atoms))
    atoms = tuple(atoms)
    check_world_limit(len(atoms), world_limit)
    for bits in range(1 << len(atoms)):
        yield PossibleWorld(bits, atoms)


def models(fs: Iterable[Formula], atoms: Sequence[str] | int, world_limit: int | None = None) -> list[PossibleWorld]:
    """``Mod(fs)``: every enumerated world satisfying all formulas of ``fs``."""
    fs = list(fs)
    if isinstance(atoms, int):
        atoms = tuple(f"x{i}" for i in range(atoms))
    atoms = tuple(atoms)
    check_world_limit(len(atoms), world_limit)
    index = {a: i for i, a in enumerate(atoms)}
    for f in fs:
        _index_for(f, atoms)
    out: list[PossibleWorld] = []
    n = 1 << len(atoms)
    step = 1 << 16
    for lo in range(0, n, step):
        worlds = np.arange(lo, min(n, lo + step), dtype=np.uint64)
        keep = np.ones(worlds.shape, dtype=bool)
        for f in fs:
            keep &= eval_array(f, worlds, index)
        out.extend(PossibleWorld(int(b), atoms) for b in worlds[keep])
    return out


# -- text syntax ----------------------------------------------------------------
#
# Precedence: ! binds tightest, then &, then |. A conditional ``(phi | psi)``
# takes phi at conjunction level, so a disjunctive consequent must be
# parenthesised: ``((a | b) | c)``.

_TOKEN_RE = re.compile(r"\s*(?:(\()|(\))|(!|~)|(&)|(\|)|([A-Za-z0-9_]+))")
_KEYWORDS = {"top": TOP, "bot": BOTTOM}


class FormulaSyntaxError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character at offset {pos} in {text!r}")
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise FormulaSyntaxError(f"expected {expected or 'a token'} in {self.text!r}, got {tok!r}")
        self.pos += 1
        return tok

    def done(self) -> None:
        if self.peek() is not None:
            raise FormulaSyntaxError(f"trailing input {self.peek()!r} in {self.text!r}")

    def disjunction(self) -> Formula:
        parts = [self.conjunction()]
        while self.peek() in ("|",):
            self.take()
            parts.append(self.conjunction())
        return parts[0] if len(parts) == 1 else Or(parts)

    def conjunction(self) -> Formula:
        parts = [self.unary()]
        while self.peek() == "&":
            self.take()
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else And(parts)

    def unary(self) -> Formula:
        tok = self.take()
        if tok in ("!", "~"):
            return Not(self.unary())
        if tok == "(":
            f = self.disjunction()
            self.take(")")
            return f
        if tok in ("&", "|", ")"):
            raise FormulaSyntaxError(f"unexpected {tok!r} in {self.text!r}")
        return _KEYWORDS.get(tok) or Atom(tok)


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.disjunction()
    p.done()
    return f


def parse_conditional_parts(text: str) -> tuple[Formula, Formula]:
    """Split ``(phi | psi)`` into ``(phi, psi)``."""
    p = _Parser(text)
    p.take("(")
    consequent = p.conjunction()
    p.take("|")
    antecedent = p.disjunction()
    p.take(")")
    p.done()
    return consequent, antecedent


def format_formula(f: Formula, _ctx: int = 0) -> str:
    """Render in the text syntax; ``_ctx`` is the binding strength of the parent."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, _Constant):
        return "top" if f.value else "bot"
    if isinstance(f, Not):
        return "!" + format_formula(f.operand, 3)
    if isinstance(f, And):
        if not f.operands:
            return "top"
        s = " & ".join(format_formula(g, 2) for g in f.operands)
        return f"({s})" if _ctx > 2 else s
    if isinstance(f, Or):
        if not f.operands:
            return "bot"
        s = " | ".join(format_formula(g, 1) for g in f.operands)
        return f"({s})" if _ctx > 1 else s
    raise TypeError(f"not a formula: {f!r}")
