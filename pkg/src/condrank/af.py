"""Abstract argumentation frameworks: data model, TGF/APX I/O and graph helpers."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

_NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")
_APX_FACT_RE = re.compile(r"\s*(arg|att)\s*\(\s*([^()]*?)\s*\)\s*\.")


class ParseError(ValueError):
    """Malformed framework input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class ArgumentationFramework:
    """A finite attack graph ``<A, R>``.

    ``arguments`` keeps first-appearance order; that order fixes the bit index
    of every argument's atom further down the pipeline.
    """

    arguments: tuple[str, ...] = ()
    attacks: frozenset[tuple[str, str]] = frozenset()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        args = tuple(dict.fromkeys(self.arguments))
        for name in args:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ValueError(f"invalid argument name {name!r}")
        index = {name: i for i, name in enumerate(args)}
        attacks = frozenset((str(x), str(y)) for x, y in self.attacks)
        for x, y in attacks:
            if x not in index or y not in index:
                raise ValueError(f"attack ({x},{y}) references an unknown argument")
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "attacks", attacks)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.arguments)

    def __contains__(self, name) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown argument {name!r}") from None

    def sorted_attacks(self) -> list[tuple[str, str]]:
        """Attacks ordered by (attacker, target) position in the argument order."""
        return sorted(self.attacks, key=lambda e: (self._index[e[0]], self._index[e[1]]))

    def attackers(self, a: str) -> list[str]:
        return attackers(self, a)

    def to_tgf(self) -> str:
        return to_tgf(self)

    def to_apx(self) -> str:
        return to_apx(self)


def _check_name(name: str, line: int) -> str:
    if not _NAME_RE.match(name):
        raise ParseError(f"invalid argument name {name!r}", line)
    return name


def parse_tgf(text: str) -> ArgumentationFramework:
    """Parse Trivial Graph Format: one name per node line, ``#``, then ``X Y`` edges."""
    args: list[str] = []
    seen: set[str] = set()
    attacks: list[tuple[str, str]] = []
    in_edges = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_edges:
                raise ParseError("second '#' separator", lineno)
            in_edges = True
            continue
        parts = line.split()
        if not in_edges:
            if len(parts) != 1:
                raise ParseError(f"node line must hold exactly one identifier, got {line!r}", lineno)
            name = _check_name(parts[0], lineno)
            if name in seen:
                raise ParseError(f"duplicate argument {name!r}", lineno)
            seen.add(name)
            args.append(name)
        else:
            if len(parts) != 2:
                raise ParseError(f"edge line must hold two identifiers, got {line!r}", lineno)
            for name in parts:
                if name not in seen:
                    raise ParseError(f"unknown argument {name!r}", lineno)
            attacks.append((parts[0], parts[1]))
    return ArgumentationFramework(tuple(args), frozenset(attacks))


def parse_apx(text: str) -> ArgumentationFramework:
    """Parse ASPARTIX facts ``arg(X).`` and ``att(X,Y).``; several facts per line are fine.

    Attack facts may precede the ``arg`` facts they mention; resolution happens
    once the whole input has been read.
    """
    args: list[str] = []
    seen: set[str] = set()
    attacks: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0]
        pos = 0
        while pos < len(line):
            if line[pos:].strip() == "":
                break
            m = _APX_FACT_RE.match(line, pos)
            if m is None:
                raise ParseError(f"syntax error near {line[pos:].strip()!r}", lineno)
            pos = m.end()
            kind, body = m.group(1), m.group(2)
            parts = [p.strip() for p in body.split(",")]
            if kind == "arg":
                if len(parts) != 1:
                    raise ParseError("arg/1 expects one identifier", lineno)
                name = _check_name(parts[0], lineno)
                if name not in seen:
                    seen.add(name)
                    args.append(name)
            else:
                if len(parts) != 2:
                    raise ParseError("att/2 expects two identifiers", lineno)
                attacks.append((_check_name(parts[0], lineno), _check_name(parts[1], lineno), lineno))
    for x, y, lineno in attacks:
        for name in (x, y):
            if name not in seen:
                raise ParseError(f"att references undeclared argument {name!r}", lineno)
    return ArgumentationFramework(tuple(args), frozenset((x, y) for x, y, _ in attacks))


def to_tgf(af: ArgumentationFramework) -> str:
    lines = list(af.arguments) + ["#"] + [f"{x} {y}" for x, y in af.sorted_attacks()]
    return "\n".join(lines) + "\n"


def to_apx(af: ArgumentationFramework) -> str:
    lines = [f"arg({a})." for a in af.arguments]
    lines += [f"att({x},{y})." for x, y in af.sorted_attacks()]
    return "\n".join(lines) + ("\n" if lines else "")


def attackers(af: ArgumentationFramework, a: str) -> list[str]:
    """Arguments attacking ``a``, in canonical argument order."""
    af.index(a)
    found = {x for x, y in af.attacks if y == a}
    return [x for x in af.arguments if x in found]


def self_attackers(af: ArgumentationFramework) -> list[str]:
    return [a for a in af.arguments if (a, a) in af.attacks]


def unattacked(af: ArgumentationFramework) -> list[str]:
    targets = {y for _, y in af.attacks}
    return [a for a in af.arguments if a not in targets]


def restrict(af: ArgumentationFramework, members: Iterable[str]) -> ArgumentationFramework:
    """Sub-framework induced by ``members``; keeps canonical order."""
    keep = set(members)
    args = tuple(a for a in af.arguments if a in keep)
    return ArgumentationFramework(args, frozenset(e for e in af.attacks if e[0] in keep and e[1] in keep))


def connected_components(af: ArgumentationFramework) -> list[ArgumentationFramework]:
    """Weakly connected components, ordered by the position of their first member."""
    parent = list(range(len(af)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x, y in af.attacks:
        rx, ry = find(af.index(x)), find(af.index(y))
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    groups: dict[int, list[str]] = {}
    for i, name in enumerate(af.arguments):
        groups.setdefault(find(i), []).append(name)
    return [restrict(af, members) for _, members in sorted(groups.items())]


def apply_isomorphism(af: ArgumentationFramework, mapping: Mapping[str, str]) -> ArgumentationFramework:
    """Rename every argument through ``mapping``, which must be a bijection on ``af.arguments``."""
    missing = [a for a in af.arguments if a not in mapping]
    if missing:
        raise ValueError(f"mapping is not total: no image for {missing}")
    images = [mapping[a] for a in af.arguments]
    if len(set(images)) != len(images):
        raise ValueError("mapping is not injective")
    return ArgumentationFramework(
        tuple(images), frozenset((mapping[x], mapping[y]) for x, y in af.attacks)
    )


def disjoint_union(af1: ArgumentationFramework, af2: ArgumentationFramework) -> ArgumentationFramework:
    clash = set(af1.arguments) & set(af2.arguments)
    if clash:
        raise ValueError(f"argument names clash: {sorted(clash)}")
    return ArgumentationFramework(af1.arguments + af2.arguments, af1.attacks | af2.attacks)


def random_af(n: int, p: float, allow_self_attacks: bool = False, seed: int = 0,
              prefix: str = "a") -> ArgumentationFramework:
    """Erdős–Rényi style directed attack graph over ``a0 .. a(n-1)``.

    Ordered pairs are visited row by row and kept with probability ``p``; the
    same seed always gives the same framework.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    names = tuple(f"{prefix}{i}" for i in range(n))
    attacks = []
    for i in range(n):
        for j in range(n):
            if i == j and not allow_self_attacks:
                continue
            if rng.random() < p:
                attacks.append((names[i], names[j]))
    return ArgumentationFramework(names, frozenset(attacks))
