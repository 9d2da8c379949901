from __future__ import annotations

import itertools
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from qcforge.errors import ClosureError, FieldMismatchError, InvalidInputError
from qcforge.galois import (
    Poly,
    coset_factors,
    cyclotomic_cosets,
    divides,
    extension_field,
    factor_divisor,
    factor_xn_minus_1,
    field,
    format_poly,
    is_irreducible,
    minimal_poly,
    multiplicative_order,
    poly_gcd,
    primitive_root_of_unity,
    smallest_irreducible,
    split_characteristic,
)

FIELDS = (2, 3, 4, 5)


@pytest.mark.parametrize("q", FIELDS)
def test_field_axioms(q):
    f = field(q)
    els = list(f.elements())
    for a, b, c in itertools.product(els, repeat=3):
        assert f.add(a, f.add(b, c)) == f.add(f.add(a, b), c)
        assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    for a in els:
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1


def test_gf4_generator_relation():
    f = field(4)
    a = 2
    assert f.mul(a, a) == f.add(a, 1) == 3


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        field(3).inv(0)


def _polys(q, max_deg=8):
    return st.lists(st.integers(0, q - 1), min_size=0, max_size=max_deg + 1).map(lambda c: Poly(field(q), c))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(lambda q: st.tuples(_polys(q), _polys(q))))
def test_divmod_identity(pair):
    a, b = pair
    if b.is_zero():
        with pytest.raises(ZeroDivisionError):
            divmod(a, b)
        return
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(lambda q: st.tuples(_polys(q), _polys(q))))
def test_gcd_divides_both(pair):
    a, b = pair
    if a.is_zero() and b.is_zero():
        return
    g = poly_gcd(a, b)
    assert g.lead == 1
    assert (a % g).is_zero() and (b % g).is_zero()


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        Poly(field(2), [1, 1]) + Poly(field(3), [1, 1])


def test_format_poly():
    assert format_poly(Poly(field(2), [1, 0, 1, 1, 1])) == "1 + x^2 + x^3 + x^4"
    assert format_poly(Poly(field(2), [])) == "0"


def _irreducible_by_trial_division(f: Poly) -> bool:
    fld = f.field
    d = f.degree
    for deg in range(1, d // 2 + 1):
        for tail in itertools.product(range(fld.q), repeat=deg):
            g = Poly(fld, list(tail) + [1])
            if (f % g).is_zero():
                return False
    return True


@pytest.mark.parametrize("q", FIELDS)
def test_is_irreducible_matches_trial_division(q):
    fld = field(q)
    for deg in (1, 2, 3):
        for tail in itertools.product(range(q), repeat=deg):
            f = Poly(fld, list(tail) + [1])
            assert is_irreducible(f) == _irreducible_by_trial_division(f)


def test_smallest_irreducible():
    assert smallest_irreducible(2, 3) == Poly(field(2), [1, 1, 0, 1])
    assert smallest_irreducible(2, 4) == Poly(field(2), [1, 1, 0, 0, 1])


@pytest.mark.parametrize("q", FIELDS)
@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 7, 9, 10, 12, 13, 15, 20, 21, 24, 25, 31, 35])
def test_factorization_product(q, n):
    fld = field(q)
    prod = Poly.one(fld)
    for f, mult in factor_xn_minus_1(q, n):
        assert f.lead == 1
        if f.degree <= 4:
            assert _irreducible_by_trial_division(f)
        else:
            assert is_irreducible(f)
        prod = prod * f ** mult
    assert prod == Poly.x_n_minus_1(fld, n)


def test_cosets_examples():
    assert cyclotomic_cosets(2, 7) == [(0,), (1, 2, 4), (3, 5, 6)]
    assert cyclotomic_cosets(3, 13) == [(0,), (1, 3, 9), (2, 5, 6), (4, 10, 12), (7, 8, 11)]
    assert cyclotomic_cosets(2, 1) == [(0,)]


@pytest.mark.parametrize("q,n", [(2, 15), (3, 20), (4, 21), (5, 24)])
def test_cosets_partition_and_sizes(q, n):
    cos = cyclotomic_cosets(q, n)
    flat = sorted(w for c in cos for w in c)
    assert flat == list(range(n))
    for c in cos:
        assert {(w * q) % n for w in c} == set(c)
        order = n // gcd(c[0], n)
        assert len(c) == (multiplicative_order(q, order) if order > 1 else 1)


def test_cosets_require_coprime():
    with pytest.raises(InvalidInputError):
        cyclotomic_cosets(2, 6)


def test_split_characteristic():
    assert split_characteristic(24, 2) == (3, 3)
    assert split_characteristic(26, 2) == (13, 1)
    assert split_characteristic(99, 3) == (11, 2)


def test_primitive_root_has_exact_order():
    ext, beta = primitive_root_of_unity(2, 7)
    acc = ext.one
    for i in range(1, 8):
        acc = ext.mul(acc, beta)
        assert (acc == ext.one) == (i == 7)


def test_minimal_poly_degree_and_closure():
    ext, beta = primitive_root_of_unity(2, 7)
    p = minimal_poly((1, 2, 4), beta, ext)
    assert p.degree == 3 and (Poly.x_n_minus_1(field(2), 7) % p).is_zero()
    with pytest.raises(ClosureError):
        minimal_poly((1, 2), beta, ext)


def test_coset_factors_degrees():
    for coset, mp in coset_factors(3, 13):
        assert mp.degree == len(coset)


def test_factor_divisor_multiplicities():
    fld = field(2)
    g = Poly(fld, [1, 1]) ** 2 * Poly(fld, [1, 1, 0, 1])
    facs = factor_divisor(g, 14)
    assert sorted((f.degree, k) for f, k in facs) == [(1, 2), (3, 1)]
    assert divides(g, Poly.x_n_minus_1(fld, 14))


def test_extension_field_arithmetic():
    ext = extension_field(2, 4)
    els = list(ext.elements())
    assert len(els) == 16
    for a in els:
        if a != ext.zero:
            assert ext.mul(a, ext.inv(a)) == ext.one
