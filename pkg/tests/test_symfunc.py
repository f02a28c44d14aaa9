from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kostka import (
    InputError,
    alternant,
    complete_homogeneous,
    expand_to_raw,
    monomial_count,
    monomial_symmetric,
    raw_mul,
    sym_add,
    sym_mul,
    sym_scale,
    vandermonde,
)
from kostka.partitions import iter_partitions
from kostka.symfunc import format_raw
from oracles import collect_raw


def test_monomial_symmetric_basic():
    m21 = monomial_symmetric(3, (2, 1))
    assert m21.coeffs == {(2, 1): 1}
    assert len(expand_to_raw(m21).terms) == 6

    m111 = monomial_symmetric(3, (1, 1, 1))
    assert expand_to_raw(m111).terms == {(1, 1, 1): 1}

    assert monomial_symmetric(2, (1, 1, 1)).is_zero()


def test_complete_homogeneous_counts():
    for n, p, count in [(3, 3, 10), (3, 4, 15), (4, 4, 35), (5, 5, 126), (8, 5, 792)]:
        h = complete_homogeneous(n, p)
        assert all(c == 1 for c in h.coeffs.values())
        assert len(expand_to_raw(h).terms) == count
        assert len(expand_to_raw(h).terms) == monomial_count(n, p)


def test_complete_homogeneous_conventions():
    assert complete_homogeneous(4, -2).is_zero()
    assert complete_homogeneous(4, 0).coeffs == {(): 1}


def test_complete_homogeneous_keys_are_all_partitions():
    h = complete_homogeneous(3, 4)
    expected = {lam for lam in iter_partitions(4) if len(lam) <= 3}
    assert set(h.coeffs) == expected


def test_sym_mul_frozen_examples():
    h1 = complete_homogeneous(3, 1)
    h2 = complete_homogeneous(3, 2)
    assert sym_mul(h2, h1).coeffs == {(3,): 1, (2, 1): 2, (1, 1, 1): 3}
    assert sym_mul(sym_mul(h1, h1), h1).coeffs == {(3,): 1, (2, 1): 3, (1, 1, 1): 6}


def test_sym_mul_identity_and_errors():
    h2 = complete_homogeneous(3, 2)
    one = complete_homogeneous(3, 0)
    assert sym_mul(h2, one).coeffs == h2.coeffs
    with pytest.raises(InputError):
        sym_mul(complete_homogeneous(2, 1), complete_homogeneous(3, 1))


def test_sym_add_scale():
    m21 = monomial_symmetric(3, (2, 1))
    m111 = monomial_symmetric(3, (1, 1, 1))
    total = sym_add(m21, sym_scale(2, m111))
    assert total.coeffs == {(2, 1): 1, (1, 1, 1): 2}
    assert sym_add(total, sym_scale(-1, total)).is_zero()
    zero = sym_scale(0, m21)
    assert sym_add(zero, m21).coeffs == m21.coeffs
    with pytest.raises(InputError):
        sym_add(m21, monomial_symmetric(3, (2, 2)))


@st.composite
def small_sym_poly(draw):
    n = draw(st.integers(min_value=2, max_value=4))
    degree = draw(st.integers(min_value=1, max_value=4))
    keys = [lam for lam in iter_partitions(degree) if len(lam) <= n]
    coeffs = {
        lam: draw(st.integers(min_value=-3, max_value=3)) for lam in keys
    }
    return n, degree, {k: v for k, v in coeffs.items() if v}


@settings(max_examples=40, deadline=None)
@given(small_sym_poly(), st.data())
def test_sym_mul_matches_raw_expansion(poly, data):
    from kostka.symfunc import SymmetricPolynomial

    n, deg_a, coeffs_a = poly
    deg_b = data.draw(st.integers(min_value=1, max_value=3))
    keys_b = [lam for lam in iter_partitions(deg_b) if len(lam) <= n]
    coeffs_b = {
        lam: data.draw(st.integers(min_value=-3, max_value=3)) for lam in keys_b
    }
    coeffs_b = {k: v for k, v in coeffs_b.items() if v}

    a = SymmetricPolynomial(n, deg_a, coeffs_a)
    b = SymmetricPolynomial(n, deg_b, coeffs_b)
    product = sym_mul(a, b)
    raw = raw_mul(expand_to_raw(a), expand_to_raw(b))
    assert product.coeffs == collect_raw(raw.terms, n)
    assert expand_to_raw(product).terms == raw.terms


def test_raw_mul_basic():
    n = 2
    a = expand_to_raw(monomial_symmetric(n, (1,)))  # x1 + x2
    diff = vandermonde(2)  # x1 - x2
    prod = raw_mul(diff, a)
    assert prod.terms == {(2, 0): 1, (0, 2): -1}
    x1 = raw_mul(diff, diff)
    assert x1.terms == {(2, 0): 1, (1, 1): -2, (0, 2): 1}


def test_vandermonde():
    assert vandermonde(1).terms == {(0,): 1}
    assert vandermonde(2).terms == {(1, 0): 1, (0, 1): -1}
    v3 = vandermonde(3)
    assert len(v3.terms) == 6
    assert all(c in (1, -1) for c in v3.terms.values())
    for n in range(1, 6):
        assert vandermonde(n).terms == alternant(n, range(n - 1, -1, -1)).terms


def test_alternant():
    assert alternant(2, (1, 0)).terms == vandermonde(2).terms
    assert alternant(3, (2, 2, 0)).is_zero()
    # bialternant instance: Vandermonde * Q-expansion equals the alternant
    from kostka import build_context, q_determinant

    ctx = build_context(3)
    q = q_determinant(ctx, (2, 1))
    lhs = raw_mul(vandermonde(3), expand_to_raw(q))
    assert lhs.terms == alternant(3, (4, 2, 0)).terms


def test_alternant_antisymmetry():
    for exps in [(3, 1, 0), (4, 2, 1), (5, 2, 0)]:
        swapped = (exps[1], exps[0], exps[2])
        plus = alternant(3, exps)
        minus = alternant(3, swapped)
        assert plus.terms == {k: -v for k, v in minus.terms.items()}


def test_monomial_count_values():
    assert monomial_count(3, 3) == 10
    assert monomial_count(8, 5) == 792
    assert monomial_count(12, 6) == 12376
    assert monomial_count(5, 0) == 1
    assert monomial_count(4, 7) == comb(10, 7)


def test_format_raw():
    assert format_raw(vandermonde(2)) == "x1 - x2"
    poly = expand_to_raw(
        sym_add(
            monomial_symmetric(3, (2, 1)),
            sym_scale(2, monomial_symmetric(3, (1, 1, 1))),
        )
    )
    text = format_raw(poly)
    assert text.startswith("x1^2*x2")
    assert "2*x1*x2*x3" in text
