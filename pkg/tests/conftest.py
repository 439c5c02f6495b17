import json
from pathlib import Path

import pytest

from repseries import class_table, parse_group

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def golden():
    return json.loads((DATA / "golden.json").read_text())


def table(spec):
    return class_table(parse_group(spec))


CLASSICAL_RANK_LE_4 = (
    [f"U({k})" for k in range(1, 5)]
    + [f"SU({k})" for k in range(2, 6)]
    + [f"SO({k})" for k in range(3, 10)]
    + [f"Sp({k})" for k in range(1, 5)]
    + [f"T^{k}" for k in range(1, 5)]
)

CLASSICAL_RANK_LE_6 = (
    [f"U({k})" for k in range(1, 7)]
    + [f"SU({k})" for k in range(2, 8)]
    + [f"SO({k})" for k in range(3, 14)]
    + [f"Sp({k})" for k in range(1, 7)]
    + [f"T^{k}" for k in range(1, 7)]
    + ["B_5", "C_3", "D_5", "D_6", "A_4", "Spin(7)"]
)

PAPER_GROUPS = ["SU(2)", "U(2)", "U(3)", "U(4)", "G2"]


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num}. {line}")
