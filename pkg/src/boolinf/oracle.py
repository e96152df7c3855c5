"""Brute-force reference computations written straight from the definitions.

Nothing here calls the transform, restriction or influence code used by the
fast paths; inputs are read only through point evaluation of the truth table.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .core import BooleanFunction, DomainError, as_subset


@dataclass(frozen=True)
class OracleConfig:
    max_exhaustive_n: int = 3
    max_per_function_n: int = 4
    rng_seed: int = 0x5EED_B001

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.rng_seed)


def all_functions(n: int) -> Iterator[BooleanFunction]:
    """Every ``n``-variable function, in order of the integer whose bits are the table."""
    size = 1 << n
    shifts = np.arange(size - 1, -1, -1, dtype=np.uint64)
    for code in range(1 << size):
        yield BooleanFunction(n, ((np.uint64(code) >> shifts) & np.uint64(1)).astype(np.uint8))


def random_functions(n: int, count: int, seed: int) -> list[BooleanFunction]:
    rng = np.random.default_rng(seed)
    return [BooleanFunction(n, rng.integers(0, 2, 1 << n, dtype=np.uint8)) for _ in range(count)]


def _positions(f: BooleanFunction, T) -> tuple[list[int], list[int]]:
    """Bit positions (in the truth-table index) of the variables in and out of ``T``."""
    T = as_subset(f.n, T)
    if T.size == 0:
        raise DomainError("variable set must be nonempty")
    inside = [f.n - j for j in range(1, f.n + 1) if j in T]
    outside = [f.n - j for j in range(1, f.n + 1) if j not in T]
    return inside, outside


def _spread(value: int, positions: list[int]) -> int:
    """Place the bits of ``value`` (first position most significant) at ``positions``."""
    out = 0
    k = len(positions)
    for i, pos in enumerate(positions):
        if value >> (k - 1 - i) & 1:
            out |= 1 << pos
    return out


def influence_by_definition(f: BooleanFunction, T) -> Fraction:
    """``Pr[f(u) != f(u xor alpha)]`` over uniform ``alpha <= chi_T`` and ``u``."""
    inside, _ = _positions(f, T)
    tab = f.table
    size = len(tab)
    us = np.arange(size)
    disagree = 0
    for a in range(1 << len(inside)):
        alpha = _spread(a, inside)
        disagree += int(np.count_nonzero(tab[us] != tab[us ^ alpha]))
    return Fraction(disagree, size << len(inside))


def tal_influence_by_definition(f: BooleanFunction, T) -> Fraction:
    """``E_y[(D_T f)(y)^2]`` with ``(D_T f)(y) = 2^-t sum_beta (-1)^{wt(beta) + f_beta(y)}``.

    ``f_beta`` fixes ``X_T`` to ``beta``; ``y`` ranges over the other variables.
    """
    inside, outside = _positions(f, T)
    t, rest = len(inside), len(outside)
    total = 0
    for y in range(1 << rest):
        base = _spread(y, outside)
        d = 0
        for beta in range(1 << t):
            exponent = bin(beta).count("1") + f(base | _spread(beta, inside))
            d += -1 if exponent & 1 else 1
        total += d * d
    return Fraction(total, (1 << rest) << (2 * t))


def fb_influence_by_sampling_free_enumeration(f: BooleanFunction, T) -> Fraction:
    """``Pr_{x,y}[f(x) != f(Z(T, x, y))]``, enumerating ``x`` and the ``T``-bits of ``y``."""
    inside, _ = _positions(f, T)
    tab = f.table
    size = len(tab)
    keep = (size - 1) ^ sum(1 << p for p in inside)
    xs = np.arange(size)
    disagree = 0
    for y in range(1 << len(inside)):
        z = (xs & keep) | _spread(y, inside)
        disagree += int(np.count_nonzero(tab[xs] != tab[z]))
    return Fraction(disagree, size << len(inside))


def walsh_by_definition(f: BooleanFunction, alpha: int) -> Fraction:
    s = 0
    for x in range(1 << f.n):
        s += -1 if (f(x) + bin(x & alpha).count("1")) & 1 else 1
    return Fraction(s, 1 << f.n)


def autocorrelation_by_definition(f: BooleanFunction, alpha: int) -> Fraction:
    s = 0
    for x in range(1 << f.n):
        s += -1 if f(x) != f(x ^ alpha) else 1
    return Fraction(s, 1 << f.n)


def degenerate_by_definition(f: BooleanFunction, T) -> bool:
    """All restrictions ``f_{X_T <- beta}`` pairwise equal, checked point by point."""
    inside, outside = _positions(f, T)
    restrictions = set()
    for beta in range(1 << len(inside)):
        b = _spread(beta, inside)
        restrictions.add(tuple(f(b | _spread(y, outside)) for y in range(1 << len(outside))))
    return len(restrictions) == 1


def bl_influence_by_definition(f: BooleanFunction, T) -> Fraction:
    """Share of settings of the other variables leaving ``f`` non-constant on ``X_T``."""
    inside, outside = _positions(f, T)
    moving = 0
    for a in range(1 << len(outside)):
        base = _spread(a, outside)
        values = {f(base | _spread(b, inside)) for b in range(1 << len(inside))}
        moving += len(values) > 1
    return Fraction(moving, 1 << len(outside))
