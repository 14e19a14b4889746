"""Pure numpy implementation of the world scans in ``_kernels.pyx``.

Same signatures and results; worlds are processed in vectorised blocks. The
``*_vf`` helpers are shared with the generic-formula path in ``kernels``.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"
BLOCK = 1 << 16

_ONE = np.uint64(1)
_ZERO = np.uint64(0)


def literal_vf(ap, an, cp, cn, worlds):
    """Verified / falsified bitsets (one uint64 per world) for literal masks."""
    ver = np.zeros(worlds.shape, dtype=np.uint64)
    fal = np.zeros(worlds.shape, dtype=np.uint64)
    for j in range(len(ap)):
        ante = ((worlds & ap[j]) == ap[j]) & ((worlds & an[j]) == _ZERO)
        cons = ((worlds & cp[j]) == cp[j]) & ((worlds & cn[j]) == _ZERO)
        bit = np.uint64(1 << j)
        ver[ante & cons] |= bit
        fal[ante & ~cons] |= bit
    return ver, fal


def _blocks(lo, hi):
    lo, hi = int(lo), int(hi)
    for start in range(lo, hi, BLOCK):
        yield np.arange(start, min(hi, start + BLOCK), dtype=np.uint64)


def level_scan_vf(vf, lo, hi, remaining):
    remaining = np.uint64(remaining)
    acc = _ZERO
    for worlds in _blocks(lo, hi):
        ver, fal = vf(worlds)
        ok = (fal & remaining) == _ZERO
        if ok.any():
            acc |= np.bitwise_or.reduce(ver[ok] & remaining)
        if acc == remaining:
            break
    return int(acc)


def first_witness_vf(vf, lo, hi, target, kb_mask):
    tbit = np.uint64(1 << target)
    kb_mask = np.uint64(kb_mask)
    for worlds in _blocks(lo, hi):
        ver, fal = vf(worlds)
        hit = np.flatnonzero(((ver & tbit) != _ZERO) & ((fal & kb_mask) == _ZERO))
        if hit.size:
            return int(worlds[hit[0]])
    return -1


def zero_scan_vf(vf, lo, hi, n_atoms):
    total = 0
    counts = np.zeros(n_atoms, dtype=np.int64)
    shifts = np.arange(n_atoms, dtype=np.uint64)
    for worlds in _blocks(lo, hi):
        _, fal = vf(worlds)
        zero = worlds[fal == _ZERO]
        total += zero.size
        if zero.size and n_atoms:
            counts += ((zero[:, None] >> shifts) & _ONE).sum(axis=0).astype(np.int64)
    return total, counts


def rank_chunk_vf(vf, z, lo, hi):
    z = np.asarray(z, dtype=np.int64)
    worlds = np.arange(int(lo), int(hi), dtype=np.uint64)
    _, fal = vf(worlds)
    out = np.zeros(worlds.shape, dtype=np.int64)
    inf = np.zeros(worlds.shape, dtype=bool)
    for j, zj in enumerate(z):
        hit = (fal >> np.uint64(j)) & _ONE != _ZERO
        if zj < 0:
            inf |= hit
        else:
            np.maximum(out, np.where(hit, zj + 1, 0), out=out)
    out[inf] = -1
    return out


def _literal(ap, an, cp, cn):
    return lambda worlds: literal_vf(ap, an, cp, cn, worlds)


def level_scan(ap, an, cp, cn, lo, hi, remaining):
    return level_scan_vf(_literal(ap, an, cp, cn), lo, hi, remaining)


def first_witness(ap, an, cp, cn, lo, hi, target, kb_mask):
    return first_witness_vf(_literal(ap, an, cp, cn), lo, hi, target, kb_mask)


def zero_scan(ap, an, cp, cn, lo, hi, n_atoms):
    return zero_scan_vf(_literal(ap, an, cp, cn), lo, hi, n_atoms)


def rank_chunk(ap, an, cp, cn, z, lo, hi):
    return rank_chunk_vf(_literal(ap, an, cp, cn), z, lo, hi)
