from __future__ import annotations

import numpy as np
import pytest

_ACCEPTANCE_KEY = pytest.StashKey[list]()


def random_code(rng: np.random.Generator, m: int, n: int):
    from nnfcodes.codes import load_code

    return load_code(rng.integers(0, 2, (m, n), dtype=np.uint8))


def identity_encoder(k: int):
    """All 2^k messages in point order, word p = binary expansion of p."""
    from nnfcodes.codes import load_code

    return load_code([format(p, f"0{k}b") for p in range(1 << k)])


def anf_eval_direct(coeffs, point: int) -> int:
    """F2 value at ``point``: parity of the monomials dividing it."""
    return sum(int(c) for u, c in enumerate(coeffs) if c and u & point == u) & 1


def hamming(a: str, b: str) -> int:
    return sum(x != y for x, y in zip(a, b))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


class AcceptanceRecorder:
    def __init__(self, results: list, nodeid: str):
        self.results = results
        self.nodeid = nodeid

    def check(self, criterion: str, ok: bool, detail: str = "") -> None:
        self.results.append((criterion, bool(ok), detail))
        assert ok, f"{criterion} failed: {detail}"


@pytest.fixture
def acceptance(request):
    results = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])
    return AcceptanceRecorder(results, request.node.nodeid)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_ACCEPTANCE_KEY, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in results:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}")
