import contextlib
import time
from collections import defaultdict

import pytest

# criterion number -> list of (ok, part label, seconds)
_RESULTS: dict[int, list[tuple[bool, str, float]]] = defaultdict(list)


class Acceptance:
    @contextlib.contextmanager
    def criterion(self, number: int, part: str, limit_s: float | None = None):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            dt = time.perf_counter() - t0
            if limit_s is not None and dt >= limit_s:
                ok = False
                part = f"{part} took {dt:.2f} s, limit {limit_s} s"
            _RESULTS[number].append((ok, part, dt))
        assert limit_s is None or dt < limit_s, f"{part}: {dt:.2f} s over {limit_s} s"


@pytest.fixture(scope="session")
def acceptance():
    return Acceptance()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        parts = _RESULTS[number]
        status = "PASS" if all(ok for ok, _, _ in parts) else "FAIL"
        label = "; ".join(f"{p} [{dt:.2f} s]" for _, p, dt in parts)
        terminalreporter.write_line(f"criterion {number}: {status}  {label}")
