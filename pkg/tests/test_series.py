from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest
import sympy
from hypothesis import given, strategies as st

from partperm.combinatorics import partitions_up_to, z_value
from partperm.errors import EmptyPartition, NonInvertibleSeries, OrderExceeded
from partperm.series import (
    TruncatedSeries,
    coefficient,
    exp_series,
    f_series,
    phi_series_q,
    phi_series_sinh,
)

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "cli_schema.json").read_text())
T = sympy.symbols("t")


def sympy_coeffs(expr, order: int) -> list[Fraction]:
    """Taylor coefficients from sympy, an independent series engine."""
    poly = sympy.series(expr, T, 0, order + 1).removeO()
    return [Fraction(str(sympy.Rational(poly.coeff(T, k)))) for k in range(order + 1)]


def test_f_series_values():
    f = f_series(10)
    assert f.coefficient(0) == 1
    assert f.coefficient(2) == Fraction(1, 24)
    assert f.coefficient(4) == Fraction(1, 1920)
    assert all(f.coefficient(k) == 0 for k in range(1, 11, 2))
    assert list(f.coeffs) == sympy_coeffs(2 * sympy.sinh(T / 2) / T, 10)


def test_exp_series_law():
    e = exp_series(12)
    assert e * e == e.scale_arg(2)
    assert [(e * e).coefficient(k) for k in range(13)] == [Fraction(2**k, math.factorial(k)) for k in range(13)]


def test_int_pow_and_inverse():
    f = f_series(8)
    assert f.int_pow(0) == TruncatedSeries.constant(1, 8)
    assert f.int_pow(-1) * f == TruncatedSeries.constant(1, 8)
    with pytest.raises(NonInvertibleSeries):
        TruncatedSeries([0, 1], 4).int_pow(-1)


def test_order_handling():
    a = TruncatedSeries([1, 2, 3], 5)
    b = TruncatedSeries([1, 1], 3)
    assert (a + b).order == 3
    assert (a * b).order == 3
    with pytest.raises(OrderExceeded):
        coefficient(b, 4)
    assert coefficient(a, 1) + coefficient(b, 1) == coefficient(a + b, 1)


@given(
    st.lists(st.integers(-5, 5), min_size=6, max_size=6),
    st.integers(-3, 3),
    st.integers(-3, 3),
)
def test_int_pow_exponent_law(tail, a, b):
    s = TruncatedSeries([1] + tail, 6)
    assert s.int_pow(a) * s.int_pow(b) == s.int_pow(a + b)


def test_phi_small_cases():
    assert phi_series_sinh((1,), 10) == TruncatedSeries.constant(1, 10)
    assert phi_series_q((1,), 10) == TruncatedSeries.constant(1, 10)
    phi2 = phi_series_sinh((2,), 12)
    assert phi2.coefficient(1) == Fraction(1, 2)
    assert phi2.egf_coefficient(1) == Fraction(1, 2)
    # g_(2)(1) = z * 1! * 1/2 = 1
    assert z_value((2,)) * phi2.egf_coefficient(1) == 1
    with pytest.raises(EmptyPartition):
        phi_series_sinh((), 4)
    with pytest.raises(EmptyPartition):
        phi_series_q((), 4)


@pytest.mark.parametrize("lam", [p for p in partitions_up_to(6) if p])
def test_phi_forms_agree_to_order_12(lam):
    assert phi_series_sinh(lam, 12) == phi_series_q(lam, 12)


@pytest.mark.parametrize("lam", [(2,), (2, 1), (3, 1), (2, 2), (3, 2, 1)])
def test_phi_q_form_against_sympy(lam):
    q = sympy.exp(T)
    num = sympy.Integer(1)
    for part in lam:
        num *= q**part - 1
    expr = (1 - 1 / q) ** (sum(lam) - 1) * num / (q - 1) / (math.factorial(sum(lam)) * z_value(lam))
    assert list(phi_series_q(lam, 10).coeffs) == sympy_coeffs(expr, 10)


@pytest.mark.parametrize("lam", [p for p in partitions_up_to(5) if p])
def test_phi_leading_zeros_and_parity(lam):
    s = phi_series_sinh(lam, 12)
    low = sum(lam) + len(lam) - 2
    for r in range(13):
        if r < low or (r - low) % 2:
            assert s.coefficient(r) == 0


def test_series_json():
    s = f_series(4)
    data = s.to_json()
    assert data == ["1", "0", "1/24", "0", "1/1920"]
    jsonschema.validate(data, {**SCHEMA, "$ref": "#/$defs/series"})
    assert TruncatedSeries.from_json(data) == s
