from functools import lru_cache

import pytest

from boolinf import build_from_anf, build_from_bits
from boolinf.core import constant, parity
from boolinf.oracle import OracleConfig, all_functions, random_functions

CONFIG = OracleConfig()


@lru_cache(maxsize=None)
def functions_of(n: int):
    """All n-variable functions, built once per session (spectra cache on the objects)."""
    return tuple(all_functions(n))


def small_functions(max_n: int = 3):
    for n in range(1, max_n + 1):
        yield from functions_of(n)


@lru_cache(maxsize=None)
def seeded_functions(n: int, count: int):
    return tuple(random_functions(n, count, CONFIG.rng_seed + n))


AND2 = build_from_bits(2, "0001")
AND3 = build_from_bits(3, "00000001")
PARITY3 = parity(3)
BENT4 = build_from_anf("x1*x2 + x3*x4", 4)
# (1 + x1) x2 (x3 + x4)
GS4 = build_from_anf("x2*x3 + x2*x4 + x1*x2*x3 + x1*x2*x4", 4)
INDICATOR6 = build_from_bits(6, "1" + "0" * 63)
ZERO2 = constant(2, 0)


@pytest.fixture
def and2():
    return AND2


# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
