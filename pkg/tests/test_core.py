from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from boolinf import (
    BooleanFunction,
    DomainError,
    ParseError,
    VariableSubset,
    build_from_anf,
    build_from_bits,
    build_from_hex,
    expectation,
    is_degenerate_on,
    restrict,
    variance,
    weight,
)
from boolinf.core import (
    constant,
    conjunction,
    linear,
    nonempty_subsets,
    parity,
    relevant_variables,
    restriction_table,
    subsets_of_size,
)
from boolinf.oracle import degenerate_by_definition

from conftest import AND2, AND3, GS4, PARITY3, small_functions


def test_bits_encoding_msb_first():
    f = build_from_bits(2, "0001")
    assert f(3) == 1 and f((1, 1)) == 1
    assert [f(i) for i in range(3)] == [0, 0, 0]
    g = build_from_bits(1, "01")
    assert g((0,)) == 0 and g((1,)) == 1
    assert weight(AND3) == 1 and AND3 == conjunction(3)


def test_anf_examples():
    assert weight(build_from_anf("x1*x2 + x3*x4", 4)) == 6
    one = build_from_anf("1", 2)
    assert weight(one) == 4 and one == constant(2, 1)
    assert build_from_anf("x1 + x2 + x3", 3) == PARITY3
    assert weight(PARITY3) == 4


def test_anf_matches_pointwise_evaluation():
    f = build_from_anf("x1*x3 + x2 + 1", 3)
    for x in range(8):
        x1, x2, x3 = x >> 2 & 1, x >> 1 & 1, x & 1
        assert f(x) == (x1 & x3) ^ x2 ^ 1


@pytest.mark.parametrize("expr", ["x1 +", "x0", "x5", "y1", "x1 ** x2", ""])
def test_anf_rejects_malformed(expr):
    with pytest.raises((ParseError, DomainError)):
        build_from_anf(expr, 4)


def test_hex_big_endian():
    assert build_from_hex(2, "8").bits() == "1000"
    assert build_from_hex(4, "0660") == build_from_bits(4, "0000011001100000")
    assert build_from_hex(4, "0660").to_hex() == "0660"
    with pytest.raises(ParseError):
        build_from_hex(2, "88")
    with pytest.raises(ParseError):
        build_from_hex(2, "g")


def test_bits_rejects_bad_input():
    with pytest.raises(ParseError):
        build_from_bits(2, "001")
    with pytest.raises(ParseError):
        build_from_bits(2, "0021")
    with pytest.raises(DomainError):
        build_from_bits(21, np.zeros(1 << 21, dtype=np.uint8))
    with pytest.raises(DomainError):
        build_from_bits(3, "0" * 8, max_n=2)


def test_statistics():
    assert (weight(AND2), expectation(AND2), variance(AND2)) == (1, Fraction(1, 4), Fraction(3, 16))
    z = constant(2)
    assert (weight(z), expectation(z), variance(z)) == (0, 0, 0)
    assert (weight(PARITY3), expectation(PARITY3), variance(PARITY3)) == (4, Fraction(1, 2), Fraction(1, 4))


def test_restrict_examples():
    g = restrict(GS4, [1, 2], (0, 1))
    assert g == build_from_anf("x1 + x2", 2)
    assert restrict(GS4, [], ()) == GS4
    h = restrict(AND2, [1], (0,))
    assert h.n == 1 and weight(h) == 0


def test_restrict_to_zero_variables():
    f = restrict(AND2, [1, 2], (1, 1))
    assert f.n == 0 and f(0) == 1


def test_degenerate_examples():
    f = build_from_anf("x1 + x2", 3)
    assert is_degenerate_on(f, [3])
    assert not is_degenerate_on(GS4, [3, 4])
    assert is_degenerate_on(constant(3, 1), [1, 2, 3])


def test_degenerate_matches_oracle_exhaustive():
    for f in small_functions(3):
        for T in nonempty_subsets(f.n):
            assert is_degenerate_on(f, T) == degenerate_by_definition(f, T)


def test_relevant_variables():
    assert relevant_variables(build_from_anf("x1 + x3", 3)).indices == (1, 3)
    assert relevant_variables(constant(3)).size == 0


def test_subset_helpers():
    T = VariableSubset.of(4, [1, 3])
    assert T.mask == 0b0101 and T.indices == (1, 3) and T.size == 2
    assert T.chi == 0b1010
    assert T.complement().indices == (2, 4)
    assert (T | VariableSubset.of(4, [2])).indices == (1, 2, 3)
    assert [S.mask for S in subsets_of_size(3, 2)] == [3, 5, 6]
    assert len(nonempty_subsets(4)) == 15
    with pytest.raises(DomainError):
        VariableSubset.of(3, [4])
    with pytest.raises(DomainError):
        VariableSubset.of(3, [0])
    with pytest.raises(DomainError):
        VariableSubset(3, 0).require_nonempty()


def test_linear_and_parity():
    assert parity(3) == linear(3, 0b111)
    f = linear(3, 0b100)
    assert [f(x) for x in range(8)] == [x >> 2 & 1 for x in range(8)]


def test_restriction_table_layout():
    # rows index assignments of the fixed variables, columns the free ones
    f = build_from_anf("x1*x2 + x3", 3)
    rows = restriction_table(f, [3])
    assert rows.shape == (4, 2)
    assert rows.tolist() == [[0, 1], [0, 1], [0, 1], [1, 0]]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 1), min_size=1 << n, max_size=1 << n))))
def test_bits_round_trip(case):
    n, bits = case
    f = build_from_bits(n, bits)
    assert [f(i) for i in range(1 << n)] == bits
    assert build_from_bits(n, f.bits()) == f
    if n >= 2:
        assert build_from_hex(n, f.to_hex()) == f


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n),
    st.integers(0, (1 << (1 << n)) - 1),
    st.integers(0, (1 << n) - 1),
    st.integers(0, (1 << n) - 1))))
def test_restrict_commutes_with_evaluation(case):
    n, code, fixed_mask, assignment_bits = case
    size = 1 << n
    f = BooleanFunction(n, [(code >> (size - 1 - i)) & 1 for i in range(size)])
    fixed = [j for j in range(1, n + 1) if fixed_mask >> (j - 1) & 1]
    free = [j for j in range(1, n + 1) if j not in fixed]
    alpha = [(assignment_bits >> k) & 1 for k in range(len(fixed))]
    g = restrict(f, fixed, alpha)
    assert g.n == len(free)
    for y in range(1 << len(free)):
        point = [0] * n
        for j, a in zip(fixed, alpha):
            point[j - 1] = a
        for k, j in enumerate(free):
            point[j - 1] = (y >> (len(free) - 1 - k)) & 1
        assert g(y) == f(tuple(point))
