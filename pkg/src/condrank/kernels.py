"""Backend selection and chunked world scans for compiled knowledge bases.

The compiled extension is used when it imports; otherwise the numpy
implementation takes over. Set ``CONDRANK_BACKEND=numpy`` to force the
fallback. Knowledge bases whose formulas are not literal conjunctions always
go through the numpy path with vectorised formula evaluation.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import reduce
from typing import Sequence

import numpy as np

from . import _kernels_py
from .logic import eval_array, literal_masks

try:
    if os.environ.get("CONDRANK_BACKEND", "").lower() == "numpy":
        raise ImportError("numpy backend forced")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

MAX_CONDITIONALS = 64

_threads = 1


def available_backends() -> list[str]:
    return (["cython"] if _compiled is not None else []) + ["numpy"]


def default_backend() -> str:
    return available_backends()[0]


def set_threads(n: int) -> None:
    """Worker threads used to split world ranges. Results never depend on it."""
    global _threads
    if n < 1:
        raise ValueError("thread count must be positive")
    _threads = n


def get_threads() -> int:
    return _threads


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total)) if total else 1
    step = -(-total // parts) if total else 0
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)] if total else [(0, 0)]


class CompiledKB:
    """A list of conditionals over a fixed atom order, ready for world scans.

    ``conditionals`` is a sequence of ``(consequent, antecedent)`` formula
    pairs. Bit ``j`` of every mask handed in or out refers to conditional ``j``.
    """

    def __init__(self, conditionals: Sequence[tuple], atoms: Sequence[str], backend: str | None = None):
        if len(conditionals) > MAX_CONDITIONALS:
            raise ValueError(f"at most {MAX_CONDITIONALS} conditionals per knowledge base")
        self.atoms = tuple(atoms)
        self.n_atoms = len(self.atoms)
        self.n_worlds = 1 << self.n_atoms
        self.size = len(conditionals)
        self.full_mask = (1 << self.size) - 1
        self.index = {a: i for i, a in enumerate(self.atoms)}
        self.conditionals = [tuple(c) for c in conditionals]

        backend = backend or default_backend()
        if backend not in available_backends():
            raise ValueError(f"backend {backend!r} unavailable; have {available_backends()}")

        compiled = []
        for consequent, antecedent in self.conditionals:
            cons = literal_masks(consequent, self.index)
            ante = literal_masks(antecedent, self.index)
            if cons is None or ante is None:
                compiled = None
                break
            compiled.append(ante + cons)

        if compiled is not None:
            arr = np.array(compiled, dtype=np.uint64).reshape(-1, 4)
            self._masks = tuple(np.ascontiguousarray(arr[:, k]) for k in range(4))
            self._mod = _compiled if backend == "cython" else _kernels_py
            self.backend = backend
            self._vf = lambda worlds: _kernels_py.literal_vf(*self._masks, worlds)
        else:
            self._masks = None
            self._mod = None
            self.backend = "numpy-generic"
            self._vf = self._generic_vf

    @property
    def literal(self) -> bool:
        return self._masks is not None

    def _generic_vf(self, worlds: np.ndarray):
        ver = np.zeros(worlds.shape, dtype=np.uint64)
        fal = np.zeros(worlds.shape, dtype=np.uint64)
        for j, (consequent, antecedent) in enumerate(self.conditionals):
            ante = eval_array(antecedent, worlds, self.index)
            cons = eval_array(consequent, worlds, self.index)
            bit = np.uint64(1 << j)
            ver[ante & cons] |= bit
            fal[ante & ~cons] |= bit
        return ver, fal

    def _map(self, fn, lo: int = 0, hi: int | None = None) -> list:
        hi = self.n_worlds if hi is None else hi
        ranges = [(lo + a, lo + b) for a, b in _split(hi - lo, _threads)]
        if len(ranges) == 1:
            return [fn(*ranges[0])]
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            return list(pool.map(lambda r: fn(*r), ranges))

    # -- scans --------------------------------------------------------------

    def level_scan(self, remaining: int) -> int:
        """Members of ``remaining`` verified by some world that falsifies nothing in it."""
        if remaining == 0:
            return 0
        if self._mod is not None:
            fn = lambda lo, hi: int(self._mod.level_scan(*self._masks, lo, hi, remaining))
        else:
            fn = lambda lo, hi: _kernels_py.level_scan_vf(self._vf, lo, hi, remaining)
        return reduce(lambda x, y: x | y, self._map(fn), 0)

    def first_witness(self, target: int, kb_mask: int) -> int:
        """First world verifying ``target`` that falsifies nothing in ``kb_mask``, or -1."""
        if self._mod is not None:
            fn = lambda lo, hi: int(self._mod.first_witness(*self._masks, lo, hi, target, kb_mask))
        else:
            fn = lambda lo, hi: _kernels_py.first_witness_vf(self._vf, lo, hi, target, kb_mask)
        hits = [w for w in self._map(fn) if w >= 0]
        return min(hits) if hits else -1

    def zero_scan(self) -> tuple[int, np.ndarray]:
        """Number of worlds falsifying nothing, and per-atom true counts among them."""
        if self._mod is not None:
            fn = lambda lo, hi: self._mod.zero_scan(*self._masks, lo, hi, self.n_atoms)
        else:
            fn = lambda lo, hi: _kernels_py.zero_scan_vf(self._vf, lo, hi, self.n_atoms)
        parts = self._map(fn)
        total = sum(int(t) for t, _ in parts)
        counts = np.sum([np.asarray(c, dtype=np.int64) for _, c in parts], axis=0)
        return total, np.asarray(counts, dtype=np.int64).reshape(self.n_atoms)

    def ranks(self, z: Sequence[int], lo: int, hi: int) -> np.ndarray:
        """kappa^Z of worlds ``lo .. hi-1``; -1 encodes infinity.

        ``z[j]`` is conditional j's stratum, negative for the infinite stratum.
        """
        z = np.ascontiguousarray(z, dtype=np.int64)
        if self._mod is not None:
            fn = lambda a, b: np.asarray(self._mod.rank_chunk(*self._masks, z, a, b))
        else:
            fn = lambda a, b: _kernels_py.rank_chunk_vf(self._vf, z, a, b)
        return np.concatenate(self._map(fn, lo, hi)) if hi > lo else np.zeros(0, dtype=np.int64)

    def iter_rank_blocks(self, z: Sequence[int], block: int = 1 << 16):
        """Yield ``(first_world, ranks)`` blocks covering every world in order."""
        for lo in range(0, self.n_worlds, block):
            yield lo, self.ranks(z, lo, min(self.n_worlds, lo + block))
