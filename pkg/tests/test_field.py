import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from girth7.errors import DivisionByZero, FieldMismatch, NonPrimeCharacteristic
from girth7.field import (
    arithmetic,
    default_modulus,
    elements,
    field_of_order,
    is_irreducible,
    is_prime_power,
    make_field,
    prime_power,
)

SMALL = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2)]


def test_prime_field_modulus():
    f = make_field(5, 1)
    assert f.q == 5 and f.modulus == (0, 1)


def test_gf8_modulus_and_reduction():
    f = make_field(2, 3)
    assert f.modulus == (1, 1, 0, 1)  # x^3 + x + 1
    x = f([0, 1])
    assert x * x**2 == f([1, 1])


def test_gf9_modulus_and_square():
    f = make_field(3, 2)
    assert f.modulus == (1, 0, 1)  # x^2 + 1
    x = f([0, 1])
    assert x * x == f(2)


def test_gf5_product():
    f = make_field(5)
    assert arithmetic(f(3), f(4), "mul") == f(2)


def test_modulus_is_deterministic_and_irreducible():
    for p, e in SMALL:
        m = default_modulus(p, e)
        assert m == make_field(p, e).modulus
        assert is_irreducible(m, p)


def test_modulus_is_least_candidate():
    # no smaller monic degree-e polynomial (same ordering) is irreducible
    for p, e in [(2, 3), (3, 2), (2, 4), (5, 2), (3, 3)]:
        m = default_modulus(p, e)
        code = sum(c * p**i for i, c in enumerate(m[:-1]))
        for smaller in range(code):
            cand = [(smaller // p**i) % p for i in range(e)] + [1]
            assert not is_irreducible(cand, p)


def test_irreducibility_against_brute_force():
    # degree-4 polynomials over GF(2): irreducible iff no factor of degree 1 or 2
    def product_set(d1, d2):
        out = set()
        for a in itertools.product(range(2), repeat=d1):
            for b in itertools.product(range(2), repeat=d2):
                pa, pb = list(a) + [1], list(b) + [1]
                prod = [0] * (len(pa) + len(pb) - 1)
                for i, x in enumerate(pa):
                    for j, y in enumerate(pb):
                        prod[i + j] ^= x & y
                out.add(tuple(prod))
        return out

    reducible = product_set(1, 3) | product_set(2, 2)
    for low in itertools.product(range(2), repeat=4):
        m = tuple(low) + (1,)
        assert is_irreducible(m, 2) == (m not in reducible)


def test_non_prime_characteristic():
    with pytest.raises(NonPrimeCharacteristic):
        make_field(4, 1)


def test_prime_power_helpers():
    assert prime_power(9) == (3, 2)
    assert prime_power(12) is None
    assert [q for q in range(2, 30) if is_prime_power(q)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
    with pytest.raises(ValueError):
        field_of_order(6)


def test_elements_order():
    assert [int(a) for a in elements(make_field(2))] == [0, 1]
    assert [int(a) for a in elements(make_field(7))] == list(range(7))
    els = elements(make_field(2, 2))
    assert len(set(els)) == 4
    assert els[0] == make_field(2, 2).zero and els[1] == make_field(2, 2).one


def test_zero_and_one_representation():
    f = make_field(3, 2)
    assert f.zero.rep == (0, 0) and f.one.rep == (1, 0)


def test_division_by_zero():
    f = make_field(2, 2)
    with pytest.raises(DivisionByZero):
        f.one / f.zero
    with pytest.raises(DivisionByZero):
        arithmetic(f.zero, None, "inv")


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        arithmetic(make_field(2, 2)(1), make_field(3)(1), "add")


@pytest.mark.parametrize("p,e", SMALL)
def test_axioms_exhaustive(p, e):
    f = make_field(p, e)
    els = elements(f)
    one, zero = f.one, f.zero
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a:
            assert a * a.inverse() == one
            assert a ** (f.q - 1) == one
        if p == 2:
            assert a + a == zero
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
        assert (a - b) + b == a
        if b:
            assert (a / b) * b == a


@pytest.mark.parametrize("p,e", [(2, 2), (3, 2), (2, 3), (5, 1)])
def test_associative_distributive_exhaustive(p, e):
    f = make_field(p, e)
    els = elements(f)
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@given(st.sampled_from([(2, 7), (3, 5), (7, 3), (5, 4)]), st.data())
def test_axioms_sampled_large(pe, data):
    f = make_field(*pe)
    a, b, c = (f(data.draw(st.integers(0, f.q - 1))) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == f.one
        assert a ** (f.q - 1) == f.one


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 32, 49])
def test_tables_match_polynomial_route(q):
    f = field_of_order(q)
    r = np.arange(q)
    A, M = f.add_table, f.mul_table
    for a in range(q):
        assert [f.add(a, b) for b in range(q)] == A[a].tolist()
        assert [f.mul(a, b) for b in range(q)] == M[a].tolist()
    assert f.neg_table.tolist() == [f.neg(a) for a in range(q)]
    assert f.inv_table[1:].tolist() == [f.inv(a) for a in range(1, q)]
    np.testing.assert_array_equal(f.vmul(r, r[::-1]), M[r, r[::-1]])
    np.testing.assert_array_equal(f.vadd(r, r[::-1]), A[r, r[::-1]])


def test_tables_read_only():
    f = field_of_order(9)
    with pytest.raises(ValueError):
        f.mul_table[0, 0] = 1


def test_integer_embedding():
    f = make_field(3, 2)
    x = f([0, 1])
    assert x + 3 == x
    assert 2 * x == x + x
