import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from icejac import load  # noqa: E402
from icejac.fdalg import build_fd_algebra  # noqa: E402
from icejac.groebner import buchberger, enumerate_basis  # noqa: E402
from icejac.jacobian import jacobian_relations  # noqa: E402
from icejac.pipeline import CORPUS  # noqa: E402


class Loaded:
    def __init__(self, name):
        self.name = name
        self.q, self.W, self.meta = load(CORPUS / f"{name}.qp")
        self.relations = jacobian_relations(self.q, self.W)
        self.gb = buchberger(self.q, self.relations)
        self.basis = enumerate_basis(self.gb)
        self._A = None

    @property
    def A(self):
        if self._A is None:
            self._A = build_fd_algebra(self.gb)
        return self._A

    @property
    def frozen(self):
        return sorted(self.q.frozen_vertices)

    def v(self, name):
        return self.q.vertex(name)

    def a(self, name):
        return self.q.arrow(name)


@lru_cache(maxsize=None)
def corpus(name):
    return Loaded(name)


@pytest.fixture(scope="session")
def tri():
    return corpus("triangle-ice")


@pytest.fixture(scope="session")
def plain():
    return corpus("triangle-plain")


@pytest.fixture(scope="session")
def aprime():
    return corpus("a-prime")


@pytest.fixture(scope="session")
def gr26():
    q, W, _ = load(CORPUS / "gr26.qp")
    return q, W


ACCEPTANCE_LINES = []


def record_acceptance(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
