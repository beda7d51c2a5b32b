import time

import pytest
from hypothesis import strategies as st

from tgpdeform.partitions import Partition

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@st.composite
def partitions(draw, max_size=6, min_size=0):
    d = draw(st.integers(min_value=min_size, max_value=max_size))
    parts = []
    rest = d
    while rest:
        p = draw(st.integers(min_value=1, max_value=min(rest, parts[-1] if parts else rest)))
        parts.append(p)
        rest -= p
    return Partition(parts)


@pytest.fixture
def record():
    def _record(num: int, title: str, passed: bool, detail: str = ""):
        ACCEPTANCE[num] = (title, passed, detail)
    return _record


class _Criterion:
    def __init__(self, record, num, title, limit=None):
        self.record, self.num, self.title, self.limit = record, num, title, limit
        self.detail = ""
        self.passed = True

    def check(self, cond, msg=""):
        if not cond:
            self.passed = False
            raise AssertionError(msg or f"criterion {self.num} failed")

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.elapsed = time.perf_counter() - self.start
        in_time = self.limit is None or self.elapsed < self.limit
        ok = self.passed and exc_type is None and in_time
        self.ok = ok
        bound = f" < {self.limit} s" if self.limit is not None else ""
        timing = f"{self.elapsed:.2f} s{bound}" + ("" if in_time else " EXCEEDED")
        detail = f"{self.detail}; {timing}" if self.detail else timing
        self.record(self.num, self.title, ok, detail)
        print(f"[{'PASS' if ok else 'FAIL'}] {self.num}. {self.title} ({detail})")
        return False


@pytest.fixture
def criterion(record):
    """Context manager that times a block and records PASS only if it finishes cleanly."""
    return lambda num, title, limit=None: _Criterion(record, num, title, limit)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, passed, detail = ACCEPTANCE[num]
        line = f"[{'PASS' if passed else 'FAIL'}] {num:2d}. {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
