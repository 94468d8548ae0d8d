import sys

import numpy as np
import pytest

from fracgrid.core import make_grid, sample_corpus


def pytest_terminal_summary(terminalreporter):
    """Replay the acceptance verdict lines after capture ends."""
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "CRITERION_LINES", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


def rel_l2(a, b):
    """Relative l2 distance, safe against a zero reference."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    scale = np.linalg.norm(b)
    return float(np.linalg.norm(a - b) / (scale if scale > 0 else 1.0))


def corpus_entry(corpus, label):
    for e in corpus:
        if e.label == label:
            return e
    raise KeyError(label)


@pytest.fixture(scope="session")
def grid1():
    return make_grid(1, 512, 16.0)


@pytest.fixture(scope="session")
def grid2():
    return make_grid(2, 128, 16.0)


@pytest.fixture(scope="session")
def corpus1(grid1):
    return sample_corpus(grid1, seed=7)


@pytest.fixture(scope="session")
def corpus2(grid2):
    return sample_corpus(grid2, seed=7)
