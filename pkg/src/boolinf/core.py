"""Boolean functions as packed truth tables.

Index convention (used by every parser, emitter and spectrum in the package):
the truth-table index ``i`` encodes the assignment ``x`` with ``X_1`` as the
most significant bit and ``X_n`` as the least significant bit, i.e.
``i = sum(x_j * 2**(n - j))``.

Variable sets are carried as :class:`VariableSubset`, whose ``mask`` has bit
``j - 1`` set iff variable ``j`` belongs to the set.  The corresponding point
``chi_T`` of F_2^n (under the truth-table convention above) is ``subset.chi``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VARIABLES = 20


class DomainError(ValueError):
    """An argument is well formed but outside the operation's domain."""


class ParseError(ValueError):
    """Text input (truth table, hex or ANF) is malformed."""


@lru_cache(maxsize=None)
def index_array(n: int) -> np.ndarray:
    a = np.arange(1 << n, dtype=np.int64)
    a.setflags(write=False)
    return a


@lru_cache(maxsize=None)
def popcount_array(n: int) -> np.ndarray:
    pop = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        pop += (index_array(n) >> b) & 1
    pop.setflags(write=False)
    return pop


def _check_n(n: int, max_n: int | None) -> None:
    cap = MAX_VARIABLES if max_n is None else max_n
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DomainError(f"variable count must be an integer, got {n!r}")
    if n < 1 or n > cap:
        raise DomainError(f"variable count n={n} outside [1, {cap}]")


class BooleanFunction:
    """An ``n``-variable Boolean function stored as its truth table.

    Instances are immutable; derived spectra are memoised per instance.
    """

    __slots__ = ("_n", "_table", "_cache")

    def __init__(self, n: int, table, *, max_n: int | None = None, _zero_ok: bool = False):
        if not (_zero_ok and n == 0):
            _check_n(n, max_n)
        arr = np.asarray(table)
        if arr.ndim != 1 or arr.size != (1 << n):
            raise ParseError(f"truth table has {arr.size} entries, expected 2^{n} = {1 << n}")
        if arr.dtype != np.uint8:
            if not np.all((arr == 0) | (arr == 1)):
                raise DomainError("truth table entries must be 0 or 1")
            arr = arr.astype(np.uint8)
        elif arr.size and arr.max() > 1:
            raise DomainError("truth table entries must be 0 or 1")
        arr = arr.copy()
        arr.setflags(write=False)
        self._n = int(n)
        self._table = arr
        self._cache: dict = {}

    @property
    def n(self) -> int:
        return self._n

    @property
    def table(self) -> np.ndarray:
        """Read-only uint8 array of length ``2**n``."""
        return self._table

    def __len__(self) -> int:
        return self._table.size

    def __call__(self, x) -> int:
        """Evaluate at an index or at a bit sequence ``(x_1, ..., x_n)``."""
        if isinstance(x, (int, np.integer)):
            return int(self._table[x])
        bits = tuple(x)
        if len(bits) != self._n:
            raise DomainError(f"expected {self._n} bits, got {len(bits)}")
        i = 0
        for b in bits:
            i = (i << 1) | (1 if b else 0)
        return int(self._table[i])

    def bits(self) -> str:
        return "".join("1" if b else "0" for b in self._table)

    def to_hex(self) -> str:
        if self._n < 2:
            raise DomainError("hex form requires n >= 2")
        return format(int(self.bits(), 2), f"0{(1 << self._n) // 4}x")

    def __xor__(self, other: "BooleanFunction") -> "BooleanFunction":
        if other.n != self._n:
            raise DomainError("xor of functions with different variable counts")
        return BooleanFunction(self._n, self._table ^ other._table, max_n=max(self._n, MAX_VARIABLES))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        return hash((self._n, self._table.tobytes()))

    def __repr__(self) -> str:
        if self._n <= 6:
            return f"BooleanFunction(n={self._n}, bits={self.bits()!r})"
        return f"BooleanFunction(n={self._n}, weight={weight(self)})"


@dataclass(frozen=True)
class VariableSubset:
    """A subset ``T`` of ``[n]`` as an ``n``-bit mask (bit ``j-1`` <=> ``j in T``)."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("negative variable count")
        if self.mask < 0 or self.mask >> self.n:
            raise DomainError(f"mask {self.mask:#x} does not fit in {self.n} bits")

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "VariableSubset":
        mask = 0
        for j in indices:
            j = int(j)
            if not 1 <= j <= n:
                raise DomainError(f"variable index {j} outside [1, {n}]")
            mask |= 1 << (j - 1)
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VariableSubset":
        return cls(n, (1 << n) - 1)

    @cached_property
    def indices(self) -> tuple[int, ...]:
        return tuple(j for j in range(1, self.n + 1) if self.mask >> (j - 1) & 1)

    @cached_property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, j) -> bool:
        return 1 <= j <= self.n and bool(self.mask >> (j - 1) & 1)

    @cached_property
    def chi(self) -> int:
        """Truth-table index of the indicator vector of the set."""
        c = 0
        for j in self.indices:
            c |= 1 << (self.n - j)
        return c

    def complement(self) -> "VariableSubset":
        return VariableSubset(self.n, ((1 << self.n) - 1) ^ self.mask)

    def __or__(self, other: "VariableSubset") -> "VariableSubset":
        if other.n != self.n:
            raise DomainError("subsets over different variable counts")
        return VariableSubset(self.n, self.mask | other.mask)

    def issubset(self, other: "VariableSubset") -> bool:
        return self.mask & ~other.mask == 0

    def require_nonempty(self) -> "VariableSubset":
        if self.mask == 0:
            raise DomainError("variable set must be nonempty")
        return self

    def __repr__(self) -> str:
        return f"VariableSubset(n={self.n}, {set(self.indices) or '{}'})"


def as_subset(n: int, T) -> VariableSubset:
    """Coerce a :class:`VariableSubset` or an iterable of 1-based indices."""
    if isinstance(T, VariableSubset):
        if T.n != n:
            raise DomainError(f"subset is over {T.n} variables, function has {n}")
        return T
    if isinstance(T, (int, np.integer)):
        return VariableSubset.of(n, [T])
    return VariableSubset.of(n, T)


def subsets_of_size(n: int, t: int) -> list[VariableSubset]:
    """All size-``t`` subsets of ``[n]`` in increasing mask order."""
    masks = sorted(sum(1 << (j - 1) for j in c) for c in combinations(range(1, n + 1), t))
    return [VariableSubset(n, m) for m in masks]


def nonempty_subsets(n: int) -> list[VariableSubset]:
    return [VariableSubset(n, m) for m in range(1, 1 << n)]


# -- construction -----------------------------------------------------------

def build_from_bits(n: int, bits, *, max_n: int | None = None) -> BooleanFunction:
    """Build from a ``0/1`` string or bit sequence, index 0 first."""
    _check_n(n, max_n)
    if isinstance(bits, str):
        s = bits.strip()
        if not re.fullmatch(r"[01]*", s):
            raise ParseError(f"truth table must be a string over {{0,1}}, got {bits!r}")
        arr = np.frombuffer(s.encode("ascii"), dtype=np.uint8) - ord("0")
    else:
        arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits)
    if arr.size != 1 << n:
        raise ParseError(f"truth table has {arr.size} entries, expected 2^{n} = {1 << n}")
    return BooleanFunction(n, arr, max_n=max_n)


def build_from_hex(n: int, digits: str, *, max_n: int | None = None) -> BooleanFunction:
    """Big-endian hex rendering of the ``2**n``-bit truth table (``n >= 2``)."""
    _check_n(n, max_n)
    if n < 2:
        raise DomainError("hex form requires n >= 2")
    s = digits.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    if not re.fullmatch(r"[0-9a-f]+", s):
        raise ParseError(f"malformed hex string {digits!r}")
    if len(s) != (1 << n) // 4:
        raise ParseError(f"hex string has {len(s)} digits, expected {(1 << n) // 4} for n={n}")
    return build_from_bits(n, format(int(s, 16), f"0{1 << n}b"), max_n=max_n)


_VAR = re.compile(r"x(\d+)")


def parse_anf(expr: str) -> list[frozenset[int]]:
    """Parse ``term ('+' term)*`` into monomials; the constant term is the empty set."""
    s = re.sub(r"\s+", "", expr)
    if not s:
        raise ParseError("empty ANF expression")
    monomials = []
    for term in s.split("+"):
        if term == "1":
            monomials.append(frozenset())
            continue
        if term == "0":
            continue
        if not term:
            raise ParseError(f"empty term in {expr!r}")
        vars_ = []
        for factor in term.split("*"):
            m = _VAR.fullmatch(factor)
            if m is None or int(m.group(1)) < 1:
                raise ParseError(f"bad factor {factor!r} in {expr!r}")
            vars_.append(int(m.group(1)))
        monomials.append(frozenset(vars_))
    return monomials


def build_from_anf(expr: str, n: int, *, max_n: int | None = None) -> BooleanFunction:
    """XOR of the monomials of an ANF expression such as ``"x1*x2 + x3 + 1"``."""
    _check_n(n, max_n)
    idx = index_array(n)
    table = np.zeros(1 << n, dtype=np.uint8)
    for mono in parse_anf(expr):
        col = np.ones(1 << n, dtype=np.uint8)
        for j in mono:
            if j > n:
                raise DomainError(f"variable x{j} out of range for n={n}")
            col &= ((idx >> (n - j)) & 1).astype(np.uint8)
        table ^= col
    return BooleanFunction(n, table, max_n=max_n)


def constant(n: int, value: int = 0) -> BooleanFunction:
    return BooleanFunction(n, np.full(1 << n, value & 1, dtype=np.uint8))


def linear(n: int, mask: int) -> BooleanFunction:
    """``x -> <chi, x>`` where ``chi`` is a truth-table index."""
    return BooleanFunction(n, (popcount_array(n)[index_array(n) & mask] & 1).astype(np.uint8))


def parity(n: int) -> BooleanFunction:
    return linear(n, (1 << n) - 1)


def conjunction(n: int) -> BooleanFunction:
    t = np.zeros(1 << n, dtype=np.uint8)
    t[-1] = 1
    return BooleanFunction(n, t)


# -- basic statistics -------------------------------------------------------

def weight(f: BooleanFunction) -> int:
    return int(np.count_nonzero(f.table))


def expectation(f: BooleanFunction) -> Fraction:
    return Fraction(weight(f), 1 << f.n)


def variance(f: BooleanFunction) -> Fraction:
    e = expectation(f)
    return e * (1 - e)


def is_balanced(f: BooleanFunction) -> bool:
    return 2 * weight(f) == len(f)


def is_constant(f: BooleanFunction) -> bool:
    w = weight(f)
    return w == 0 or w == len(f)


# -- restriction ------------------------------------------------------------

def restriction_table(f: BooleanFunction, free) -> np.ndarray:
    """Truth tables of every restriction ``f_{X_{T̄} <- alpha}`` with ``T = free``.

    Returns an array of shape ``(2**(n-t), 2**t)``: row ``alpha`` (over the
    fixed variables in increasing index order, first one most significant)
    holds the truth table of the restriction as a function of ``X_T``.
    """
    T = as_subset(f.n, free)
    n = f.n
    cube = f.table.reshape((2,) * n)
    return cube.transpose(_axis_order(n, T.mask)).reshape(1 << (n - T.size), 1 << T.size)


@lru_cache(maxsize=4096)
def _axis_order(n: int, free_mask: int) -> tuple[int, ...]:
    fixed = [j for j in range(n) if not free_mask >> j & 1]
    free = [j for j in range(n) if free_mask >> j & 1]
    return tuple(fixed + free)


def restrict(f: BooleanFunction, fixed, assignment: Sequence[int]) -> BooleanFunction:
    """Fix the variables in ``fixed`` to ``assignment`` (increasing index order).

    The result is a function of the remaining variables, kept in increasing
    original index order.  Fixing every variable yields a 0-variable function.
    """
    T = as_subset(f.n, fixed)
    assignment = tuple(int(a) for a in assignment)
    if len(assignment) != T.size:
        raise DomainError(f"assignment has {len(assignment)} bits, {T.size} variables fixed")
    if any(a not in (0, 1) for a in assignment):
        raise DomainError("assignment bits must be 0 or 1")
    row = 0
    for a in assignment:
        row = (row << 1) | a
    rows = restriction_table(f, T.complement())
    return BooleanFunction(f.n - T.size, rows[row], _zero_ok=True, max_n=max(f.n, MAX_VARIABLES))


def is_degenerate_on(f: BooleanFunction, T) -> bool:
    """True iff every restriction ``f_{X_T <- beta}`` is the same function."""
    T = as_subset(f.n, T).require_nonempty()
    rows = restriction_table(f, T.complement())
    # rows are indexed by assignments of T; columns by the free variables
    return bool(np.all(rows == rows[0]))


def relevant_variables(f: BooleanFunction) -> VariableSubset:
    """Variables on which ``f`` is not degenerate."""
    mask = 0
    for j in range(1, f.n + 1):
        if not is_degenerate_on(f, [j]):
            mask |= 1 << (j - 1)
    return VariableSubset(f.n, mask)
