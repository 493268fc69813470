import pytest

from deodhar import build_system


@pytest.fixture(scope="session")
def A2():
    return build_system("A", 2)


@pytest.fixture(scope="session")
def A3():
    return build_system("A", 3)


@pytest.fixture(scope="session")
def A4():
    return build_system("A", 4)


@pytest.fixture(scope="session")
def A5():
    return build_system("A", 5)


@pytest.fixture(scope="session")
def B3():
    return build_system("B", 3)


@pytest.fixture(scope="session")
def B4():
    return build_system("B", 4)


@pytest.fixture(scope="session")
def D3():
    return build_system("D", 3)


@pytest.fixture(scope="session")
def D4():
    return build_system("D", 4)


@pytest.fixture(scope="session")
def G2():
    return build_system("G", 2)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
