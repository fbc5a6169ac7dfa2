import pytest

from powergraph import build_group
from powergraph.verify import default_catalog


@pytest.fixture(scope="session")
def catalog_groups():
    """Every default-catalog group, built once."""
    return [build_group(e) for e in default_catalog().entries]


@pytest.fixture(scope="session")
def s3():
    return build_group("S3")


@pytest.fixture(scope="session")
def q8():
    return build_group("Q8")


def element(g, name):
    return g.names.index(name)


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion outcome for the summary."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_RESULTS[name] = (ok, detail)
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
