import pytest

from faberkrahn import build_graph, load_fixture


@pytest.fixture
def triangle_pendants():
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


@pytest.fixture(params=["triangle_path_14", "square_14", "square_tree_13", "triangle_branch_13"])
def reference_graph(request):
    return request.param, load_fixture(request.param)


@pytest.fixture(autouse=True)
def _no_enumeration_cache(monkeypatch):
    monkeypatch.delenv("FK_CACHE_DIR", raising=False)


ACCEPTANCE_LINES = {}


@pytest.fixture
def acceptance_line(request):
    """Record the one-line verdict of an acceptance criterion."""
    number = request.node.get_closest_marker("criterion").args[0]

    def record(ok, detail):
        ACCEPTANCE_LINES[number] = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        assert ok, detail

    return record


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
