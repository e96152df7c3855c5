"""Influence of a set of variables, in every variant, with cross-checking routes.

Measure tags used throughout (and in CLI output):

``ac``      auto-correlation influence ``inf_f(T)``
``pi``      pseudo-influence ``PI_f(T)`` (equal to Tal's ``J_f(T)``)
``bl``      Ben-Or--Linial influence
``gs``      Gangopadhyay--Stanica influence ``(1 - C_f(chi_T)) / 2``
``fb``      Fischer et al. / Blais influence ``I_f(T)``
``mu``      shift-flip probability ``mu_f(T)``
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .core import (
    BooleanFunction,
    DomainError,
    VariableSubset,
    as_subset,
    index_array,
    popcount_array,
    restriction_table,
    subsets_of_size,
)
from .spectra import autocorr_numerators, walsh_squares, weight_distribution

MEASURES = ("ac", "pi", "bl", "gs", "fb", "mu")


@dataclass(frozen=True)
class InfluenceValue:
    value: Fraction
    measure: str
    subset: VariableSubset

    def __float__(self) -> float:
        return float(self.value)


def _subset(f: BooleanFunction, T) -> VariableSubset:
    return as_subset(f.n, T).require_nonempty()


def _check_t(f: BooleanFunction, t: int) -> None:
    if not 1 <= t <= f.n:
        raise DomainError(f"t={t} outside [1, {f.n}]")


def binom(a: int, b: int) -> int:
    """Binomial coefficient with ``C(a, b) = 0`` for ``b < 0`` or ``b > a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@lru_cache(maxsize=4096)
def _below(n: int, chi: int) -> np.ndarray:
    """Boolean mask of the points ``alpha <= chi``."""
    m = (index_array(n) & (((1 << n) - 1) ^ chi)) == 0
    m.setflags(write=False)
    return m


@lru_cache(maxsize=4096)
def _meets(n: int, chi: int) -> np.ndarray:
    """Boolean mask of the points whose support meets ``chi``."""
    m = (index_array(n) & chi) != 0
    m.setflags(write=False)
    return m


@lru_cache(maxsize=4096)
def _covers(n: int, chi: int) -> np.ndarray:
    """Boolean mask of the points ``u >= chi``."""
    m = (index_array(n) & chi) == chi
    m.setflags(write=False)
    return m


def _restriction_weights(f: BooleanFunction, T: VariableSubset) -> np.ndarray:
    """Weights of ``f_{X_{T̄} <- alpha}`` for every ``alpha`` (functions of ``X_T``)."""
    return restriction_table(f, T).sum(axis=1, dtype=np.int64)


# -- auto-correlation influence ---------------------------------------------

def _influence_autocorr(f, T):
    n, t = f.n, T.size
    s = int(autocorr_numerators(f)[_below(n, T.chi)].sum())
    return 1 - Fraction(s, 1 << (n + t))


def _influence_walsh(f, T):
    n = f.n
    return Fraction(int(walsh_squares(f)[_meets(n, T.chi)].sum()), 1 << (2 * n))


def _influence_restriction(f, T):
    n, t = f.n, T.size
    w0 = (1 << t) - 2 * _restriction_weights(f, T)
    return 1 - Fraction(int((w0 * w0).sum()), 1 << (n + t))


_INFLUENCE_ALGORITHMS = {
    "autocorr": _influence_autocorr,
    "walsh": _influence_walsh,
    "restriction": _influence_restriction,
}


def influence(f: BooleanFunction, T, algorithm: str = "restriction") -> InfluenceValue:
    """Auto-correlation influence ``inf_f(T) = 1 - 2^-t sum_{alpha <= chi_T} C_f(alpha)``.

    ``algorithm`` selects the route: ``"autocorr"`` (the definition),
    ``"walsh"`` (squared Walsh mass on points meeting ``T``) or
    ``"restriction"`` (one O(2^n) scan over the restrictions fixing ``X_{T̄}``).
    All three return the identical rational.
    """
    T = _subset(f, T)
    try:
        fn = _INFLUENCE_ALGORITHMS[algorithm]
    except KeyError:
        raise DomainError(f"unknown influence algorithm {algorithm!r}") from None
    return InfluenceValue(fn(f, T), "ac", T)


def influence_by_variance(f: BooleanFunction, T) -> Fraction:
    """``2^{-(n-2-t)} sum_alpha Var(f_alpha)`` over the restrictions fixing ``X_{T̄}``."""
    T = _subset(f, T)
    n, t = f.n, T.size
    w = _restriction_weights(f, T)
    # Var(f_alpha) = w (2^t - w) / 2^{2t}
    total = int((w * ((1 << t) - w)).sum())
    return Fraction(total * 4, 1 << (n + t))


def influence_variable(f: BooleanFunction, i: int) -> InfluenceValue:
    """``Pr_x[f(x) != f(x xor e_i)] = (1 - C_f(e_i)) / 2``."""
    if not 1 <= i <= f.n:
        raise DomainError(f"variable index {i} outside [1, {f.n}]")
    T = VariableSubset.of(f.n, [i])
    c = int(autocorr_numerators(f)[T.chi])
    return InfluenceValue(Fraction((1 << f.n) - c, 1 << (f.n + 1)), "ac", T)


def subset_count(n: int, t: int, k: int) -> int:
    """``N_{n,t,k}``: size-``t`` subsets of ``[n]`` meeting a fixed ``k``-set."""
    if not 1 <= t <= n or not 0 <= k <= n:
        raise DomainError(f"need 1 <= t <= n and 0 <= k <= n, got n={n}, t={t}, k={k}")
    return comb(n, t) - binom(n - k, t)


def t_influence(f: BooleanFunction, t: int, algorithm: str = "spectral") -> Fraction:
    """Average of ``inf_f(T)`` over the ``C(n, t)`` sets of size ``t``.

    ``"spectral"`` uses ``1 - C(n,t)^-1 sum_{k<=n-t} C(n-k, t) p(k)``;
    ``"enumerate"`` averages the per-subset influences.
    """
    _check_t(f, t)
    n = f.n
    if algorithm == "spectral":
        p = weight_distribution(f).p
        return 1 - sum((binom(n - k, t) * p[k] for k in range(n - t + 1)), Fraction(0)) / comb(n, t)
    if algorithm == "enumerate":
        subsets = subsets_of_size(n, t)
        return sum((influence(f, T).value for T in subsets), Fraction(0)) / len(subsets)
    raise DomainError(f"unknown t-influence algorithm {algorithm!r}")


def t_influence_by_counts(f: BooleanFunction, t: int) -> Fraction:
    """``C(n,t)^-1 sum_k N_{n,t,k} p(k)``."""
    _check_t(f, t)
    p = weight_distribution(f).p
    return sum((subset_count(f.n, t, k) * p[k] for k in range(f.n + 1)), Fraction(0)) / comb(f.n, t)


# -- pseudo-influence -------------------------------------------------------

def _pi_autocorr(f, T):
    n, t = f.n, T.size
    below = _below(n, T.chi)
    c = autocorr_numerators(f)[below]
    sign = 1 - 2 * (popcount_array(n)[below] & 1)
    return Fraction(int((sign * c).sum()), 1 << (n + t))


def _pi_walsh(f, T):
    n = f.n
    return Fraction(int(walsh_squares(f)[_covers(n, T.chi)].sum()), 1 << (2 * n))


def pseudo_influence(f: BooleanFunction, T, algorithm: str = "walsh") -> InfluenceValue:
    """``PI_f(T) = 2^-t sum_{alpha <= chi_T} (-1)^{wt(alpha)} C_f(alpha)``.

    ``"walsh"`` computes the equal quantity ``sum_{u >= chi_T} W_f(u)^2``.
    """
    T = _subset(f, T)
    if algorithm == "autocorr":
        v = _pi_autocorr(f, T)
    elif algorithm == "walsh":
        v = _pi_walsh(f, T)
    else:
        raise DomainError(f"unknown pseudo-influence algorithm {algorithm!r}")
    return InfluenceValue(v, "pi", T)


def t_pseudo_influence(f: BooleanFunction, t: int, algorithm: str = "spectral") -> Fraction:
    """``C(n,t)^-1 sum_{k>=t} C(k, t) p(k)``, or the plain subset average."""
    _check_t(f, t)
    n = f.n
    if algorithm == "spectral":
        p = weight_distribution(f).p
        return sum((comb(k, t) * p[k] for k in range(t, n + 1)), Fraction(0)) / comb(n, t)
    if algorithm == "enumerate":
        subsets = subsets_of_size(n, t)
        return sum((pseudo_influence(f, T).value for T in subsets), Fraction(0)) / len(subsets)
    raise DomainError(f"unknown t-pseudo-influence algorithm {algorithm!r}")


# -- the prior notions -------------------------------------------------------

def bl_influence(f: BooleanFunction, T) -> InfluenceValue:
    """Fraction of settings of ``X_{T̄}`` leaving a non-constant function of ``X_T``."""
    T = _subset(f, T)
    n, t = f.n, T.size
    w = _restriction_weights(f, T)
    # W_{f_alpha}(0)^2 != 1  <=>  0 < wt(f_alpha) < 2^t
    moving = int(np.count_nonzero((w != 0) & (w != (1 << t))))
    return InfluenceValue(Fraction(moving, 1 << (n - t)), "bl", T)


def t_bl_influence(f: BooleanFunction, t: int) -> Fraction:
    _check_t(f, t)
    subsets = subsets_of_size(f.n, t)
    return sum((bl_influence(f, T).value for T in subsets), Fraction(0)) / len(subsets)


def gs_influence(f: BooleanFunction, T) -> InfluenceValue:
    """``Pr_x[f(x) != f(x xor chi_T)] = (1 - C_f(chi_T)) / 2``."""
    T = _subset(f, T)
    c = int(autocorr_numerators(f)[T.chi])
    return InfluenceValue(Fraction((1 << f.n) - c, 1 << (f.n + 1)), "gs", T)


def fb_influence(f: BooleanFunction, T) -> InfluenceValue:
    """Rerandomisation probability ``I_f(T) = 2^{-(n-1-t)} sum_beta Var(f_beta)``."""
    T = _subset(f, T)
    n, t = f.n, T.size
    w = _restriction_weights(f, T)
    total = int((w * ((1 << t) - w)).sum())
    return InfluenceValue(Fraction(total * 2, 1 << (n + t)), "fb", T)


def mu_probability(f: BooleanFunction, T) -> InfluenceValue:
    """``mu_f(T) = 2^-t sum_{alpha <= chi_T} (1 - C_f(alpha)) / 2``."""
    T = _subset(f, T)
    n, t = f.n, T.size
    c = autocorr_numerators(f)[_below(n, T.chi)]
    total = int(((1 << n) - c).sum())
    return InfluenceValue(Fraction(total, 1 << (n + t + 1)), "mu", T)


_MEASURE_FUNCS = {
    "ac": influence,
    "pi": pseudo_influence,
    "bl": bl_influence,
    "gs": gs_influence,
    "fb": fb_influence,
    "mu": mu_probability,
}


def measure(f: BooleanFunction, name: str, T) -> InfluenceValue:
    try:
        fn = _MEASURE_FUNCS[name]
    except KeyError:
        raise DomainError(f"unknown measure {name!r}; expected one of {MEASURES}") from None
    return fn(f, T)


def t_measure(f: BooleanFunction, name: str, t: int) -> Fraction:
    """Average of a measure over all size-``t`` subsets (closed forms where known)."""
    if name == "ac":
        return t_influence(f, t)
    if name == "pi":
        return t_pseudo_influence(f, t)
    if name == "bl":
        return t_bl_influence(f, t)
    _check_t(f, t)
    subsets = subsets_of_size(f.n, t)
    return sum((measure(f, name, T).value for T in subsets), Fraction(0)) / len(subsets)


def union_decomposition(f: BooleanFunction, S, T) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """``(inf(S u T), inf(S), inf(T), cross)`` with ``inf(S u T) = inf(S) + inf(T) - cross``.

    ``cross`` is the squared Walsh mass on points whose support meets both
    sets; it is non-negative, which is sub-additivity.
    """
    S = _subset(f, S)
    T = _subset(f, T)
    both = _meets(f.n, S.chi) & _meets(f.n, T.chi)
    cross = Fraction(int(walsh_squares(f)[both].sum()), 1 << (2 * f.n))
    return influence(f, S | T).value, influence(f, S).value, influence(f, T).value, cross
