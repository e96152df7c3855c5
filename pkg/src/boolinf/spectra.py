"""Walsh transform, auto-correlation and spectral weight distributions.

All transforms run on unnormalised integer vectors; a spectrum carries the
normalising power of two separately (``value = numerator / 2**log2_den``), so
no division ever happens inside a transform.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import (
    BooleanFunction,
    DomainError,
    as_subset,
    expectation,
    index_array,
    popcount_array,
    restriction_table,
)

AUTOCORR_DIRECT_MAX_N = 12
_INT64_SAFE = 1 << 62


def fwht(a: np.ndarray) -> np.ndarray:
    """Unnormalised Walsh-Hadamard butterfly: ``out[u] = sum_x a[x] (-1)^<u,x>``.

    Works on int64 or object (Python int) arrays; int64 input is promoted to
    object when the result could overflow.
    """
    a = np.asarray(a)
    size = a.size
    if size == 0 or size & (size - 1):
        raise DomainError(f"length {size} is not a power of two")
    if a.dtype != object:
        a = a.astype(np.int64)
        peak = int(np.abs(a).max()) if size else 0
        if peak * size >= _INT64_SAFE:
            a = a.astype(object)
    out = a.copy()
    h = 1
    while h < size:
        v = out.reshape(-1, 2, h)
        lo = v[:, 0, :].copy()
        hi = v[:, 1, :]
        v[:, 0, :] = lo + hi
        v[:, 1, :] = lo - hi
        h <<= 1
    return out


def _log2_size(size: int) -> int:
    if size == 0 or size & (size - 1):
        raise DomainError(f"length {size} is not a power of two")
    return size.bit_length() - 1


@dataclass(frozen=True, eq=False)
class RealSpectrum:
    """``2**n`` exact dyadic values ``numerators[i] / 2**log2_den``.

    ``kind`` is one of ``"walsh"``, ``"autocorrelation"``, ``"fourier-generic"``.
    """

    n: int
    numerators: np.ndarray
    log2_den: int
    kind: str = "fourier-generic"

    def __len__(self) -> int:
        return len(self.numerators)

    def __getitem__(self, i: int) -> Fraction:
        return Fraction(int(self.numerators[i]), 1 << self.log2_den)

    @property
    def values(self) -> list[Fraction]:
        d = 1 << self.log2_den
        return [Fraction(int(v), d) for v in self.numerators]

    def floats(self) -> np.ndarray:
        return np.array([float(v) for v in self.values])

    def reduced(self) -> "RealSpectrum":
        """Same values with the smallest possible power-of-two denominator."""
        num = np.array(self.numerators, dtype=object)
        k = self.log2_den
        while k > 0 and all(int(v) % 2 == 0 for v in num):
            num = num // 2
            k -= 1
        return RealSpectrum(self.n, num, k, self.kind)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealSpectrum):
            return NotImplemented
        if self.n != other.n:
            return False
        k = max(self.log2_den, other.log2_den)
        a = [int(v) << (k - self.log2_den) for v in self.numerators]
        b = [int(v) << (k - other.log2_den) for v in other.numerators]
        return a == b

    __hash__ = None

    def check_invariants(self) -> bool:
        one = 1 << self.log2_den
        nums = [int(v) for v in self.numerators]
        in_range = all(-one <= v <= one for v in nums)
        if self.kind == "walsh":
            return in_range and sum(v * v for v in nums) == one * one
        if self.kind == "autocorrelation":
            return in_range and nums[0] == one
        return True

    def to_records(self) -> list[dict]:
        """JSON-ready ``{index, numerator, log2_denominator, float}`` records."""
        r = self.reduced()
        recs = []
        for i, v in enumerate(r.numerators):
            v = int(v)
            k = r.log2_den
            while k > 0 and v % 2 == 0:
                v //= 2
                k -= 1
            recs.append({"index": i, "numerator": v, "log2_denominator": k,
                         "float": v / (1 << k)})
        return recs


def _as_dyadic(psi) -> tuple[np.ndarray, int]:
    if isinstance(psi, RealSpectrum):
        return np.asarray(psi.numerators), psi.log2_den
    vals = list(psi)
    if all(isinstance(v, (int, np.integer)) and not isinstance(v, bool) for v in vals):
        return np.array(vals, dtype=np.int64 if vals and max(abs(int(v)) for v in vals) < _INT64_SAFE else object), 0
    fr = [Fraction(v) for v in vals]
    k = 0
    for v in fr:
        d = v.denominator
        if d & (d - 1):
            raise DomainError(f"value {v} is not dyadic")
        k = max(k, d.bit_length() - 1)
    return np.array([int(v * (1 << k)) for v in fr], dtype=object), k


def fourier_transform(psi) -> RealSpectrum:
    """``psi_hat(alpha) = 2^-n sum_x psi(x) (-1)^<x,alpha>`` for dyadic-valued ``psi``."""
    num, k = _as_dyadic(psi)
    n = _log2_size(len(num))
    return RealSpectrum(n, fwht(num), k + n, "fourier-generic")


def inverse_fourier(spec) -> RealSpectrum:
    """``psi(x) = sum_alpha psi_hat(alpha) (-1)^<x,alpha>``."""
    num, k = _as_dyadic(spec)
    n = _log2_size(len(num))
    return RealSpectrum(n, fwht(num), k, "fourier-generic")


def signs(f: BooleanFunction) -> np.ndarray:
    """``(-1)^f`` as int64."""
    return 1 - 2 * f.table.astype(np.int64)


def walsh_spectrum(f: BooleanFunction) -> RealSpectrum:
    """Normalised Walsh transform; numerators are ``2^n W_f(alpha)``."""
    spec = f._cache.get("walsh")
    if spec is None:
        num = fwht(signs(f))
        num.setflags(write=False)
        spec = RealSpectrum(f.n, num, f.n, "walsh")
        f._cache["walsh"] = spec
    return spec


def walsh_squares(f: BooleanFunction) -> np.ndarray:
    """``2^{2n} W_f(alpha)^2`` as int64."""
    sq = f._cache.get("walsh2")
    if sq is None:
        w = walsh_spectrum(f).numerators
        sq = w * w
        sq.setflags(write=False)
        f._cache["walsh2"] = sq
    return sq


def _autocorr_direct(f: BooleanFunction) -> np.ndarray:
    s = signs(f)
    idx = index_array(f.n)
    if f.n <= 10:
        return (s[idx[:, None] ^ idx[None, :]] @ s).astype(np.int64)
    out = np.empty(1 << f.n, dtype=np.int64)
    for a in range(1 << f.n):
        out[a] = int(s @ s[idx ^ a])
    return out


def _autocorr_wk(f: BooleanFunction) -> np.ndarray:
    # inverse transform of 2^{2n} W^2 gives 2^{2n} C; divide by 2^n exactly
    full = fwht(walsh_squares(f))
    return (full >> f.n).astype(np.int64)


def autocorrelation_spectrum(f: BooleanFunction, method: str | None = None) -> RealSpectrum:
    """Normalised auto-correlation ``C_f``; numerators are ``2^n C_f(alpha)``.

    ``method`` is ``"direct"`` (pairwise sums, O(4^n)) or
    ``"wiener-khintchine"`` (inverse transform of the squared Walsh spectrum).
    The default is direct up to ``n = 12`` and the transform route above.
    """
    if method is None:
        method = "direct" if f.n <= AUTOCORR_DIRECT_MAX_N else "wiener-khintchine"
    key = "ac-" + method
    spec = f._cache.get(key)
    if spec is not None:
        return spec
    if method == "direct":
        num = _autocorr_direct(f)
    elif method == "wiener-khintchine":
        num = _autocorr_wk(f)
    else:
        raise DomainError(f"unknown auto-correlation method {method!r}")
    num.setflags(write=False)
    spec = RealSpectrum(f.n, num, f.n, "autocorrelation")
    f._cache[key] = spec
    return spec


def autocorr_numerators(f: BooleanFunction) -> np.ndarray:
    """``2^n C_f`` via whichever method is already cached, else the default."""
    for key in ("ac-direct", "ac-wiener-khintchine"):
        if key in f._cache:
            return f._cache[key].numerators
    return autocorrelation_spectrum(f).numerators


@dataclass(frozen=True)
class WeightDistribution:
    """Squared Walsh mass ``p(k)`` at each Hamming level ``k = 0..n``."""

    n: int
    p: tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.p[k]

    def __len__(self) -> int:
        return len(self.p)


def _level_sums(f: BooleanFunction) -> list[int]:
    sq = walsh_squares(f)
    pop = popcount_array(f.n)
    return [int(sq[pop == k].sum()) for k in range(f.n + 1)]


def weight_distribution(f: BooleanFunction) -> WeightDistribution:
    wd = f._cache.get("wd")
    if wd is None:
        d = 1 << (2 * f.n)
        wd = WeightDistribution(f.n, tuple(Fraction(s, d) for s in _level_sums(f)))
        f._cache["wd"] = wd
    return wd


def tail_weight(f: BooleanFunction, k: int) -> Fraction:
    """``W^{>=k}(f) = sum_{i >= k} p(i)``."""
    if not 0 <= k <= f.n:
        raise DomainError(f"level k={k} outside [0, {f.n}]")
    return sum(weight_distribution(f).p[k:], Fraction(0))


def level_l1(f: BooleanFunction, t: int) -> Fraction:
    """``L_{1,t}(f) = sum_{wt(u) = t} |W_f(u)|``."""
    if not 0 <= t <= f.n:
        raise DomainError(f"level t={t} outside [0, {f.n}]")
    w = walsh_spectrum(f).numerators
    pop = popcount_array(f.n)
    return Fraction(int(np.abs(w[pop == t]).sum()), 1 << f.n)


def subspace_identity_check(f: BooleanFunction, T) -> bool:
    """Check both Poisson-summation identities for the subspace ``{x <= chi_{T̄}}``.

    First: ``sum_{w in E} W^2 = (#E / 2^n) sum_{u in E^perp} C``.
    Second: ``sum_{w <= chi_{T̄}} W^2 = 2^{-(n-t)} sum_alpha W_{f_alpha}(0)^2``
    with ``f_alpha`` the restriction fixing ``X_{T̄}`` to ``alpha``.
    """
    T = as_subset(f.n, T).require_nonempty()
    n, t = f.n, T.size
    idx = index_array(n)
    chi_t = T.chi
    chi_bar = ((1 << n) - 1) ^ chi_t
    in_e = (idx & chi_t) == 0
    in_eperp = (idx & chi_bar) == 0

    lhs = Fraction(int(walsh_squares(f)[in_e].sum()), 1 << (2 * n))
    c_sum = Fraction(int(autocorr_numerators(f)[in_eperp].sum()), 1 << n)
    first = lhs == Fraction(1 << (n - t), 1 << n) * c_sum

    rows = restriction_table(f, T)
    w0 = (1 << t) - 2 * rows.sum(axis=1, dtype=np.int64)
    second = lhs == Fraction(int((w0 * w0).sum()), 1 << (2 * t)) / (1 << (n - t))
    return bool(first and second)


def one_minus_p0_check(f: BooleanFunction) -> bool:
    """``p(0) = (1 - 2E(f))^2`` and ``1 - p(0) = 4 Var(f)``."""
    e = expectation(f)
    p0 = weight_distribution(f).p[0]
    return p0 == (1 - 2 * e) ** 2 and 1 - p0 == 4 * e * (1 - e)
