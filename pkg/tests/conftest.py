import pathlib

import pytest

from leavitt import load_graph

DATA = pathlib.Path(__file__).parent / "data"


def fixture_graph(name):
    return load_graph(DATA / f"{name}.json")


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def rose():
    return fixture_graph("rose")


@pytest.fixture(scope="session")
def g3():
    return fixture_graph("g")


@pytest.fixture(scope="session")
def two_vertex():
    return fixture_graph("two_vertex")


@pytest.fixture(scope="session")
def collapse_graph():
    return fixture_graph("collapse")


@pytest.fixture(scope="session")
def one_loop():
    return fixture_graph("one_loop")


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in test_acceptance.summary_lines():
        terminalreporter.write_line(line)
