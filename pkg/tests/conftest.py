import pytest

from italcheck.model import static_model, validate


@pytest.fixture
def m0():
    return static_model(["x1", "x2"], ["y1", "y2"], [("x1", "y1"), ("x2", "y2")],
                        [("y1", "x2"), ("y2", "x1")])


@pytest.fixture
def m1():
    return validate({
        "worlds_a": ["x1", "x2"], "worlds_b": ["y1", "y2"], "prefix_len": 0, "loop_len": 2,
        "slices": [
            {"rel_ab": [["x1", "y1"], ["x2", "y2"]], "rel_ba": [["y1", "x2"], ["y2", "x1"]]},
            {"rel_ab": [["x1", "y1"], ["x2", "y2"]], "rel_ba": [["y1", "x1"], ["y2", "x2"]]},
        ],
    })


@pytest.fixture
def m2():
    return static_model(["x1", "x2"], ["y1", "y2"], [("x1", "y1"), ("x1", "y2"), ("x2", "y1")],
                        [("y1", "x2"), ("y2", "x1")])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
