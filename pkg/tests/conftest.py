import random

import pytest

from functorhh import fixtures as fx
from functorhh.linalg import Field
from functorhh.monoids import unit_monoid

QQ = Field()
GF2 = Field(2)


def random_cochain(hc, n, x, seed, lo=-3, hi=3):
    rng = random.Random(seed)
    d = hc.space(n, x).dim
    return hc.cochain_from_coordinates(n, x, [rng.randint(lo, hi) for _ in range(d)])


def all_monoid_fixtures():
    """(label, monoid) for every fixture monoid over Q."""
    out = [
        ("dual", fx.dual_numbers_monoid(QQ)),
        ("c2", fx.group_algebra_monoid(QQ)),
        ("m2", fx.matrix_monoid(QQ)),
        ("graded", fx.graded_monoid(QQ)),
        ("graded-super", fx.graded_monoid(QQ, True)),
    ]
    for cat in (fx.trivial_category(QQ), fx.c2_category(QQ), fx.c2_category(QQ, True)):
        out.append((f"unit-{cat.name}", unit_monoid(cat)))
    return out


@pytest.fixture(scope="session")
def dual():
    return fx.dual_numbers_monoid(QQ)


@pytest.fixture(scope="session")
def m2():
    return fx.matrix_monoid(QQ)


@pytest.fixture(scope="session")
def graded_super():
    return fx.graded_monoid(QQ, True)


@pytest.fixture(scope="session")
def graded():
    return fx.graded_monoid(QQ)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        label, ok, why = results[n]
        terminalreporter.write_line(f"criterion {n:2d} {label}: {'PASS' if ok else 'FAIL'}")
