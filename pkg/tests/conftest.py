import pytest

from effortfit import NATIVE_AVAILABLE, nasa_dataset, split_fixed, use_backend

BACKENDS = ["python", "native"] if NATIVE_AVAILABLE else ["python"]


@pytest.fixture
def nasa():
    return nasa_dataset()


@pytest.fixture
def nasa_split():
    return split_fixed(nasa_dataset(), 13)


@pytest.fixture(params=BACKENDS)
def backend(request):
    with use_backend(request.param):
        yield request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
