import time
from contextlib import contextmanager

import pytest

_ACCEPTANCE: dict[int, tuple[str, str, float]] = {}


@pytest.fixture
def criterion():
    """Time a block as acceptance criterion ``number``; record PASS/FAIL."""

    @contextmanager
    def run(number: int, title: str, limit: float):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"
            status = "PASS"
        finally:
            _ACCEPTANCE[number] = (status, title, time.perf_counter() - start)

    return run


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title, elapsed = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] AC{number}: {title} ({elapsed:.2f}s)")
