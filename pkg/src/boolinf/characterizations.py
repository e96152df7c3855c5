"""Bent, resilient, PC(k) and junta characterisations; Fourier entropy."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .core import (
    BooleanFunction,
    DomainError,
    VariableSubset,
    as_subset,
    expectation,
    is_balanced,
    is_constant,
    nonempty_subsets,
    popcount_array,
    relevant_variables,
    restriction_table,
)
from .influence import binom, influence, t_influence
from .spectra import autocorr_numerators, tail_weight, walsh_squares


@dataclass(frozen=True)
class CharacterizationReport:
    is_bent: bool
    resiliency_order: int | None
    pc_order: int
    entropy: float
    notes: list[str] = field(default_factory=list)


def is_bent(f: BooleanFunction) -> bool:
    """Flat Walsh spectrum: ``W_f(alpha)^2 = 2^-n`` everywhere."""
    if f.n % 2:
        return False
    return bool(np.all(walsh_squares(f) == (1 << f.n)))


def bent_by_influence(f: BooleanFunction) -> bool:
    """``inf_f(T) = 1 - 2^{-#T}`` for every nonempty ``T``.

    With ``C_f = 0`` off the origin the auto-correlation sum over
    ``alpha <= chi_T`` is just ``C_f(0) = 1``, hence the constant ``1 - 2^-t``.
    """
    for T in nonempty_subsets(f.n):
        if influence(f, T, "autocorr").value != 1 - Fraction(1, 1 << T.size):
            return False
    return True


def resiliency_order(f: BooleanFunction) -> int | None:
    """Largest ``m`` with ``W_f`` vanishing on all points of weight ``<= m``.

    ``None`` for unbalanced functions.
    """
    sq = walsh_squares(f)
    if sq[0] != 0:
        return None
    return int(popcount_array(f.n)[sq != 0].min()) - 1


def pc_order(f: BooleanFunction) -> int:
    """Largest ``k`` such that ``C_f(u) = 0`` whenever ``1 <= wt(u) <= k`` (0 if none)."""
    c = autocorr_numerators(f).copy()
    c[0] = 0
    nz = c != 0
    if not nz.any():
        return f.n
    return int(popcount_array(f.n)[nz].min()) - 1


def pc_consequence_check(f: BooleanFunction) -> bool:
    """PC(k) forces ``inf_f(T) = 1 - 2^-t`` for every ``T`` with ``#T = t <= k``."""
    k = pc_order(f)
    return all(
        influence(f, T).value == 1 - Fraction(1, 1 << T.size)
        for T in nonempty_subsets(f.n) if T.size <= k
    )


def junta_distance(f: BooleanFunction, S) -> tuple[Fraction, BooleanFunction]:
    """Distance from ``f`` to the closest junta on ``S``, and that junta.

    Each fiber ``f_{X_S <- alpha}`` is replaced by its majority constant,
    with ties going to 0.  ``S`` may be empty (distance to the constants).
    """
    S = as_subset(f.n, S)
    rows = restriction_table(f, S.complement())
    free = rows.shape[1]
    w = rows.sum(axis=1, dtype=np.int64)
    g_rows = (2 * w > free).astype(np.uint8)
    disagreements = int(np.minimum(w, free - w).sum())
    delta = Fraction(disagreements, 1 << f.n)

    # lay g back out in the original variable order
    fixed_axes = [j - 1 for j in S.indices]
    free_axes = [j - 1 for j in range(1, f.n + 1) if j not in S]
    perm = fixed_axes + free_axes
    cube = np.broadcast_to(g_rows[:, None], rows.shape).reshape((2,) * f.n)
    g_table = cube.transpose(np.argsort(perm)).reshape(-1)
    return delta, BooleanFunction(f.n, g_table)


def junta_far_check(f: BooleanFunction, S) -> bool:
    """``2 * delta <= inf_f(S̄)`` for the closest junta on ``S``."""
    S = as_subset(f.n, S)
    delta, _ = junta_distance(f, S)
    rest = S.complement()
    if rest.size == 0:
        return delta == 0
    return 2 * delta <= influence(f, rest).value


def junta_influence_bound(n: int, s: int, t: int) -> Fraction:
    """Upper bound ``1 - C(n-s, t) / C(n, t)`` on the t-influence of an s-junta."""
    return 1 - Fraction(binom(n - s, t), comb(n, t))


def junta_influence_bound_check(f: BooleanFunction, s: int, t: int) -> bool:
    if not 1 <= t <= f.n:
        raise DomainError(f"t={t} outside [1, {f.n}]")
    if relevant_variables(f).size > s:
        raise DomainError(f"function depends on more than {s} variables")
    return t_influence(f, t) <= junta_influence_bound(f.n, s, t)


def fourier_entropy(f: BooleanFunction) -> float:
    """Shannon entropy (bits) of the squared Walsh spectrum."""
    sq = walsh_squares(f)
    nz = sq[sq != 0].astype(np.float64)
    p = nz / float(1 << (2 * f.n))
    # log2 p = log2(sq) - 2n, kept separate for accuracy
    return float(-(p * (np.log2(nz) - 2 * f.n)).sum()) + 0.0


def fei_ratio(f: BooleanFunction, t: int) -> float:
    """``(H(f) / n) / t-inf(f)``."""
    ti = t_influence(f, t)
    if ti == 0:
        raise DomainError("t-influence is zero (constant function)")
    return (fourier_entropy(f) / f.n) / float(ti)


def concentration_threshold(f: BooleanFunction, t: int, epsilon) -> int:
    """Least positive ``k`` with ``k >= t - 1 + (n - t + 1)(1 - (1 - x)^{1/t})``.

    ``x = t-inf(f) / epsilon``.  The comparison is done exactly: the inequality
    is equivalent to ``1 - x >= q^t`` with ``q = 1 - (k - t + 1)/(n - t + 1)``
    whenever ``q > 0``.
    """
    n = f.n
    ti = t_influence(f, t)
    eps = Fraction(epsilon)
    if eps < ti or eps > 1:
        raise DomainError(f"epsilon={epsilon} outside [t-inf, 1] = [{ti}, 1]")
    x = Fraction(0) if ti == 0 else ti / eps
    for k in range(1, n + 1):
        q = 1 - Fraction(k - t + 1, n - t + 1)
        if q <= 0 or 1 - x >= q ** t:
            return k
    return n


def concentration_check(f: BooleanFunction, t: int, epsilon) -> bool:
    k = concentration_threshold(f, t, epsilon)
    return tail_weight(f, k) <= Fraction(epsilon)


def characterize(f: BooleanFunction) -> CharacterizationReport:
    bent = is_bent(f)
    res = resiliency_order(f)
    pc = pc_order(f)
    notes = []
    if is_constant(f):
        notes.append("constant")
    if is_balanced(f):
        notes.append("balanced")
    if bent:
        notes.append("bent")
    if res is not None and res >= 1:
        notes.append(f"{res}-resilient")
    if pc >= 1:
        notes.append(f"PC({pc})")
    if expectation(f) not in (0, 1):
        r = relevant_variables(f).size
        if r < f.n:
            notes.append(f"{r}-junta")
    return CharacterizationReport(bent, res, pc, fourier_entropy(f), notes)
