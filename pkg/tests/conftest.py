import random
from pathlib import Path

import pytest

from condrank import ArgumentationFramework, parse_tgf, available_backends
from condrank.logic import And, Atom, Not, Or, TOP, BOTTOM
from condrank.systemz import Conditional, ConditionalKB

DATA = Path(__file__).parent / "data"


def load(name):
    return parse_tgf((DATA / name).read_text())


@pytest.fixture
def chain_af():
    """a -> b -> c <-> d."""
    return load("chain.tgf")


@pytest.fixture
def mutual_af():
    """Mutual attack a/b, both plus d attack c."""
    return load("mutual.tgf")


@pytest.fixture
def selfloop_af():
    """a attacks itself, b is unattacked."""
    return load("selfloop.tgf")


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


def random_formula(rng, atoms, depth=2):
    if depth == 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.05:
            return TOP
        if roll < 0.08:
            return BOTTOM
        lit = Atom(rng.choice(atoms))
        return Not(lit) if rng.random() < 0.5 else lit
    kind = rng.choice([Not, And, Or])
    if kind is Not:
        return Not(random_formula(rng, atoms, depth - 1))
    return kind([random_formula(rng, atoms, depth - 1) for _ in range(rng.randint(2, 3))])


def random_literal_conj(rng, atoms, max_len=3):
    chosen = rng.sample(atoms, rng.randint(0, min(max_len, len(atoms))))
    lits = [Not(Atom(a)) if rng.random() < 0.5 else Atom(a) for a in chosen]
    return And(lits) if len(lits) != 1 else lits[0]


def random_kb(seed, max_atoms=10, max_conditionals=12):
    """Random KB; even seeds give literal-conjunction conditionals, odd seeds arbitrary formulas."""
    rng = random.Random(seed)
    atoms = [f"p{i}" for i in range(rng.randint(1, max_atoms))]
    conds = []
    for _ in range(rng.randint(0, max_conditionals)):
        if seed % 2 == 0:
            conds.append(Conditional(random_literal_conj(rng, atoms, 1) if rng.random() < 0.7
                                     else random_literal_conj(rng, atoms),
                                     random_literal_conj(rng, atoms)))
        else:
            conds.append(Conditional(random_formula(rng, atoms), random_formula(rng, atoms)))
    return ConditionalKB(tuple(conds), tuple(atoms))


@pytest.fixture(autouse=True)
def _single_thread():
    from condrank import kernels
    yield
    kernels.set_threads(1)


# -- acceptance reporting ----------------------------------------------------------

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the build")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    number, title = marker.args
    _acceptance[number] = (title, rep.outcome.upper(), rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, outcome, duration = _acceptance[number]
        verdict = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number}: {title} ({duration:.2f} s)")
