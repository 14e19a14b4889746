# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled world scans over literal-conjunction knowledge bases.

Every conditional j is four uint64 masks: antecedent positive/negative literals
(ap, an) and consequent positive/negative literals (cp, cn). All functions scan
the half-open world range [lo, hi) and release the GIL while doing so.
"""

from libc.stdint cimport uint64_t, int64_t

import numpy as np

BACKEND = "cython"


cdef inline void _vf(uint64_t w, const uint64_t[:] ap, const uint64_t[:] an,
                     const uint64_t[:] cp, const uint64_t[:] cn, Py_ssize_t m,
                     uint64_t *ver, uint64_t *fal) noexcept nogil:
    cdef Py_ssize_t j
    cdef uint64_t v = 0, f = 0, bit
    for j in range(m):
        if (w & ap[j]) == ap[j] and (w & an[j]) == 0:
            bit = (<uint64_t>1) << j
            if (w & cp[j]) == cp[j] and (w & cn[j]) == 0:
                v |= bit
            else:
                f |= bit
    ver[0] = v
    fal[0] = f


def level_scan(const uint64_t[:] ap, const uint64_t[:] an, const uint64_t[:] cp,
               const uint64_t[:] cn, uint64_t lo, uint64_t hi, uint64_t remaining):
    """OR of the verified sets (restricted to ``remaining``) over worlds that
    falsify nothing in ``remaining``."""
    cdef Py_ssize_t m = ap.shape[0]
    cdef uint64_t w, v, f, acc = 0
    with nogil:
        w = lo
        while w < hi:
            _vf(w, ap, an, cp, cn, m, &v, &f)
            if (f & remaining) == 0:
                acc |= v & remaining
                if acc == remaining:
                    break
            w += 1
    return acc


def first_witness(const uint64_t[:] ap, const uint64_t[:] an, const uint64_t[:] cp,
                  const uint64_t[:] cn, uint64_t lo, uint64_t hi, int target,
                  uint64_t kb_mask):
    """First world verifying conditional ``target`` and falsifying nothing in
    ``kb_mask``; -1 when none exists in range."""
    cdef Py_ssize_t m = ap.shape[0]
    cdef uint64_t w, v, f
    cdef uint64_t tbit = (<uint64_t>1) << target
    cdef int64_t found = -1
    with nogil:
        w = lo
        while w < hi:
            _vf(w, ap, an, cp, cn, m, &v, &f)
            if (v & tbit) and (f & kb_mask) == 0:
                found = <int64_t>w
                break
            w += 1
    return found


def zero_scan(const uint64_t[:] ap, const uint64_t[:] an, const uint64_t[:] cp,
              const uint64_t[:] cn, uint64_t lo, uint64_t hi, int n_atoms):
    """Count worlds falsifying no conditional and, per atom, how many of them
    make the atom true. Returns ``(count, per_atom_counts)``."""
    cdef Py_ssize_t m = ap.shape[0]
    cdef uint64_t w, v, f
    cdef int64_t total = 0
    cdef int i
    counts = np.zeros(n_atoms, dtype=np.int64)
    cdef int64_t[:] c = counts
    with nogil:
        w = lo
        while w < hi:
            _vf(w, ap, an, cp, cn, m, &v, &f)
            if f == 0:
                total += 1
                for i in range(n_atoms):
                    c[i] += (w >> i) & 1
            w += 1
    return total, counts


def rank_chunk(const uint64_t[:] ap, const uint64_t[:] an, const uint64_t[:] cp,
               const uint64_t[:] cn, const int64_t[:] z, uint64_t lo, uint64_t hi):
    """kappa^Z for every world in range. ``z[j]`` is the stratum index of
    conditional j, negative for the infinite stratum; infinite ranks come back
    as -1."""
    cdef Py_ssize_t m = ap.shape[0]
    cdef Py_ssize_t j, k
    cdef uint64_t w, v, f
    cdef int64_t r
    out = np.empty(hi - lo, dtype=np.int64)
    cdef int64_t[:] o = out
    with nogil:
        w = lo
        k = 0
        while w < hi:
            _vf(w, ap, an, cp, cn, m, &v, &f)
            r = 0
            for j in range(m):
                if (f >> j) & 1:
                    if z[j] < 0:
                        r = -1
                        break
                    if z[j] + 1 > r:
                        r = z[j] + 1
            o[k] = r
            k += 1
            w += 1
    return out
