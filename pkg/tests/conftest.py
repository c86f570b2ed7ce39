import pytest

from koszulkit.field import QQ, GF
from koszulkit.poly import PolyRing


@pytest.fixture
def R4():
    return PolyRing(["x", "y", "z", "w"], QQ)


@pytest.fixture
def R4p():
    return PolyRing(["x", "y", "z", "w"], GF(101))


_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line per acceptance criterion."""
    log = request.config.stash.setdefault(_ACCEPTANCE, {})

    def record(number, ok, detail=""):
        log[number] = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'} {detail}".rstrip()
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    log = config.stash.get(_ACCEPTANCE, {})
    if log:
        terminalreporter.section("acceptance criteria")
        for k in sorted(log):
            terminalreporter.write_line(log[k])
