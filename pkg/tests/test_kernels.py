import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_kb
from condrank import kernels, random_af, theta
from condrank.kernels import CompiledKB, available_backends

needs_cython = pytest.mark.skipif("cython" not in available_backends(), reason="extension not built")


def test_numpy_always_available():
    assert "numpy" in available_backends()


def test_generic_path_for_non_literal_formulas():
    from condrank.systemz import Conditional, ConditionalKB
    kb = ConditionalKB((Conditional.parse("((a | b) | !c)"), Conditional.parse("(c | top)")), ("a", "b", "c"))
    ckb = kb.compile()
    assert not ckb.literal and ckb.backend == "numpy-generic"
    assert ckb.zero_scan()[0] == 4  # c forced, a and b free


def test_literal_kb_uses_selected_backend(mutual_af, backend):
    assert theta(mutual_af).compile(backend).backend == backend


def test_unknown_backend(mutual_af):
    with pytest.raises(ValueError):
        theta(mutual_af).compile("fortran")


def _snapshot(ckb, z):
    return (
        [ckb.level_scan(m) for m in range(ckb.full_mask + 1)][:64],
        [ckb.first_witness(t, ckb.full_mask) for t in range(ckb.size)],
        ckb.zero_scan()[0], ckb.zero_scan()[1].tolist(),
        ckb.ranks(z, 0, ckb.n_worlds).tolist(),
    )


@needs_cython
@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6).map(lambda s: 2 * s))
def test_backends_agree(seed):
    kb = random_kb(seed, 7, 8)
    z = [(j % 3) - 1 for j in range(len(kb))]
    a, b = kb.compile("cython"), kb.compile("numpy")
    assert a.literal and b.literal
    assert _snapshot(a, z) == _snapshot(b, z)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 5))
def test_thread_count_does_not_change_results(seed, threads):
    kb = theta(random_af(9, 0.25, True, seed))
    z = [j % 2 for j in range(len(kb))]
    base = _snapshot(kb.compile(), z)
    try:
        kernels.set_threads(threads)
        assert _snapshot(kb.compile(), z) == base
    finally:
        kernels.set_threads(1)


def test_rank_blocks_cover_all_worlds(mutual_af):
    ckb = theta(mutual_af).compile()
    blocks = list(ckb.iter_rank_blocks([0, 0, 1, 0], block=5))
    assert [lo for lo, _ in blocks] == [0, 5, 10, 15]
    assert np.concatenate([r for _, r in blocks]).tolist() == ckb.ranks([0, 0, 1, 0], 0, 16).tolist()


def test_too_many_conditionals():
    from condrank.logic import Atom
    with pytest.raises(ValueError):
        CompiledKB([(Atom("a"), Atom("a"))] * 65, ("a",))
