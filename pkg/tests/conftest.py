"""Definition-level brute force shared by the tests.

Plain tuples and itertools only, so it stays independent of both the package's
word type and its numpy oracle.
"""

import itertools

import pytest


def ham(a, b):
    return sum(x != y for x, y in zip(a, b))


def rot(w, i):
    return w[i:] + w[:i]


def all_words(k, n):
    return itertools.product(range(k), repeat=n)


def brute_shift_members(k, n, i):
    return {w for w in all_words(k, n) if ham(w, rot(w, i)) == 2}


def brute_members(k, n):
    return {w for w in all_words(k, n) if any(ham(w, rot(w, i)) == 2 for i in range(1, n))}


@pytest.fixture
def brute():
    return {
        "shift": brute_shift_members,
        "members": brute_members,
        "ham": ham,
        "rot": rot,
    }


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(lines):
        terminalreporter.write_line(lines[number])
