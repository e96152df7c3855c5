"""Hypercube view of influence: crossing pairs, path counts, edge boundary.

For a shift ``alpha`` of weight ``w`` there are ``w!`` shortest paths between
``u`` and ``u xor alpha``.  ``x_alpha`` counts ordered pairs ``(u, u xor alpha)``
with ``f(u) = 1`` and ``f(u xor alpha) = 0``; the number of such paths between
``supp(f)`` and its complement is ``n_alpha = w! * x_alpha``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .core import BooleanFunction, DomainError, index_array, popcount_array
from .influence import binom, t_influence
from .spectra import autocorrelation_spectrum, fwht, walsh_squares


@dataclass(frozen=True)
class PathCensus:
    """Crossing counts ``x_alpha`` for every shift; path counts derived on demand."""

    n: int
    crossings: tuple[int, ...]

    def path_count(self, alpha: int) -> int:
        return factorial(bin(alpha).count("1")) * self.crossings[alpha]

    @property
    def counts(self) -> list[int]:
        return [self.path_count(a) for a in range(len(self.crossings))]

    def autocorrelation(self, alpha: int) -> Fraction:
        """``C_f(alpha) = 1 - n_alpha / (wt(alpha)! 2^{n-2})``."""
        w = bin(alpha).count("1")
        return 1 - Fraction(self.path_count(alpha) * 4, factorial(w) * (1 << self.n))


def path_census(f: BooleanFunction, method: str = "direct") -> PathCensus:
    """Count crossings directly, or recover them from ``C_f`` via ``x = 2^{n-2}(1 - C)``."""
    n = f.n
    if method == "direct":
        tab = f.table.astype(bool)
        idx = index_array(n)
        xs = tuple(int(np.count_nonzero(tab & ~tab[idx ^ a])) for a in range(1 << n))
    elif method == "autocorr":
        c = autocorrelation_spectrum(f).numerators
        # 2^{n-2}(1 - c/2^n) = (2^n - c)/4
        xs = tuple(((1 << n) - int(v)) // 4 for v in c)
    else:
        raise DomainError(f"unknown census method {method!r}")
    return PathCensus(n, xs)


def edge_boundary(f: BooleanFunction) -> int:
    """Number of hypercube edges between ``supp(f)`` and its complement."""
    tab = f.table.astype(bool)
    idx = index_array(f.n)
    return sum(int(np.count_nonzero(tab & ~tab[idx ^ (1 << b)])) for b in range(f.n))


def t_influence_by_paths(f: BooleanFunction, t: int, census: PathCensus | None = None) -> Fraction:
    """t-influence from path counts.

    ``1 - (2^{n+t-2} C(n,t))^-1 sum_alpha C(n - wt, t - wt) (2^{n-2} - n_alpha / wt!)``,
    where ``n_alpha / wt! = x_alpha``.
    """
    n = f.n
    if not 1 <= t <= n:
        raise DomainError(f"t={t} outside [1, {n}]")
    census = census or path_census(f)
    # 2^{n-2} - x_alpha = (2^n - 4 x_alpha) / 4; drop the 1/4 from both sides
    coef = _level_binom(n, t)
    x = np.array(census.crossings, dtype=np.int64)
    total = int((coef * ((1 << n) - 4 * x)).sum())
    return 1 - Fraction(total, (1 << (n + t)) * comb(n, t))


@lru_cache(maxsize=None)
def _level_binom(n: int, t: int) -> np.ndarray:
    """``C(n - wt(alpha), t - wt(alpha))`` for every ``alpha``, zero when ``wt > t``."""
    w = popcount_array(n)
    out = np.array([binom(n - k, t - k) for k in range(n + 1)], dtype=np.int64)[w]
    out.setflags(write=False)
    return out


def walsh_from_paths_check(f: BooleanFunction, census: PathCensus | None = None) -> bool:
    """Check ``W(beta)^2 = [beta = 0] - 2^{-(2n-2)} sum_alpha (-1)^<alpha,beta> x_alpha``."""
    n = f.n
    census = census or path_census(f)
    signed = fwht(np.array(census.crossings, dtype=np.int64))
    # scaled by 2^{2n}: W'^2 = 2^{2n}[beta = 0] - 4 * signed
    rhs = -4 * signed
    rhs[0] += 1 << (2 * n)
    return bool(np.array_equal(walsh_squares(f), rhs))


def path_autocorr_check(f: BooleanFunction, census: PathCensus | None = None) -> bool:
    census = census or path_census(f)
    c = autocorrelation_spectrum(f)
    return all(census.autocorrelation(a) == c[a] for a in range(1 << f.n))


def census_divisibility_check(census: PathCensus) -> bool:
    """``n_0 = 0`` and ``wt(alpha)!`` divides every ``n_alpha``."""
    counts = census.counts
    return counts[0] == 0 and all(
        c % factorial(bin(a).count("1")) == 0 for a, c in enumerate(counts))


def edge_relation_check(f: BooleanFunction) -> bool:
    """``1-inf(f) = e(A, Ā) / (n 2^{n-1})``."""
    return t_influence(f, 1) == Fraction(edge_boundary(f), f.n << (f.n - 1))

