import contextlib

import pytest

from fencemonoid import PartialInjection

_results = {}


def E(dom, img=None):
    """Shorthand element: ``E((1, 2), (3, 4))`` or ``E("1,2->3,4")``."""
    if img is None:
        if dom in ("ε", ""):
            return PartialInjection((), ())
        left, right = dom.split("->")
        dom = [int(x) for x in left.split(",")]
        img = [int(x) for x in right.split(",")]
    return PartialInjection(tuple(dom), tuple(img))


@pytest.fixture
def criterion():
    @contextlib.contextmanager
    def record(number, title):
        try:
            yield
        except BaseException:
            _results[number] = (title, "FAIL")
            raise
        _results[number] = (title, "PASS")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        title, verdict = _results[number]
        terminalreporter.write_line(f"criterion {number:2d} {verdict}  {title}")
