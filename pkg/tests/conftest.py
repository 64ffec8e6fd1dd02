import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from matroid_kl.corpus import named_corpus, random_matrices
from matroid_kl.lattice import Matrix, build_lattice

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


@st.composite
def matrix_specs(draw, max_cols=7, max_rows=3):
    """Loopless matrix matroids over GF(2) or GF(3)."""
    p = draw(st.sampled_from([2, 3]))
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    nonzero = st.lists(st.integers(0, p - 1), min_size=rows, max_size=rows).filter(any)
    columns = draw(st.lists(nonzero, min_size=cols, max_size=cols))
    entries = tuple(tuple(col[r] for col in columns) for r in range(rows))
    return Matrix(p, rows, cols, entries)


@st.composite
def small_lattices(draw, max_cols=6):
    return build_lattice(draw(matrix_specs(max_cols=max_cols)))


_LATTICES = {}


def lattice(name_or_spec):
    """Build once per session; lattices are immutable so sharing is safe."""
    key = str(name_or_spec)
    if key not in _LATTICES:
        _LATTICES[key] = build_lattice(name_or_spec)
    return _LATTICES[key]


SMALL_CORPUS = [(name, spec) for name, spec in named_corpus(6)]


@pytest.fixture(scope="session")
def corpus_lattices():
    return [(name, lattice(spec)) for name, spec in SMALL_CORPUS]


@pytest.fixture(scope="session")
def random_matrix_lattices():
    return [build_lattice(s) for s in random_matrices(50, seed=2024)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
