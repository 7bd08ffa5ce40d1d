"""Shared fixtures.

The example algebras are immutable, so one session-scoped copy is shared by
every test module.  Acceptance tests additionally register a one-line verdict
per criterion; the hook at the bottom echoes those after the run.
"""

from __future__ import annotations

import pytest

import whakit as wk


def build_examples() -> dict[str, wk.WeakHopfAlgebra]:
    return {
        "z2": wk.cyclic_wha(2),
        "z3": wk.cyclic_wha(3),
        "z4": wk.cyclic_wha(4),
        "z5": wk.cyclic_wha(5),
        "s3": wk.symmetric_wha(3),
        "p2": wk.pair_groupoid_wha(2),
        "p3": wk.pair_groupoid_wha(3),
        "p4": wk.pair_groupoid_wha(4),
        "fp2": wk.function_wha(wk.pair_groupoid(2)),
        "h4": wk.sweedler_h4(),
        "m23": wk.m2_m3(),
    }


@pytest.fixture(scope="session")
def examples() -> dict[str, wk.WeakHopfAlgebra]:
    return build_examples()


@pytest.fixture(scope="session")
def z3(examples):
    return examples["z3"]


@pytest.fixture(scope="session")
def s3(examples):
    return examples["s3"]


@pytest.fixture(scope="session")
def p2(examples):
    return examples["p2"]


@pytest.fixture(scope="session")
def fp2(examples):
    return examples["fp2"]


@pytest.fixture(scope="session")
def h4(examples):
    return examples["h4"]


@pytest.fixture(scope="session")
def m23(examples):
    return examples["m23"]


# --------------------------------------------------------------------------
# acceptance summary

_ACCEPTANCE: list[tuple[int, str]] = []


@pytest.fixture(scope="session")
def acceptance():
    """Record `criterion N PASS/FAIL/SKIPPED` lines for the terminal summary."""

    def record(num: int, status: str, detail: str = "") -> None:
        line = f"criterion {num:2d}  {status}" + (f"  — {detail}" if detail else "")
        _ACCEPTANCE.append((num, line))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
