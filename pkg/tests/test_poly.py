"""Multivariate polynomials: arithmetic, gcd, squarefree decomposition."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dilogeq.poly import (
    MultiPoly,
    gcd_many,
    poly_gcd,
    squarefree_parts,
    univar_gcd,
    univar_inverse_mod,
    univar_rem,
)
from dilogeq.scalars import ONE, ZERO, fe

from helpers import random_poly


T = ("t",)
T12 = ("t1", "t2")


def t():
    return MultiPoly.var(T, "t")


def c(n):
    return MultiPoly.const(T, fe(n))


small_polys = st.builds(
    lambda seed: random_poly(random.Random(seed), T, max_deg=3, max_terms=3),
    st.integers(0, 10_000),
)
small_polys2 = st.builds(
    lambda seed: random_poly(random.Random(seed), T12, max_deg=2, max_terms=3),
    st.integers(0, 10_000),
)


def test_construction_and_str():
    p = t() ** 2 - c(1)
    assert str(p) == "t^2 - 1"
    assert p.total_degree() == 2
    assert p.degree_in("t") == 2
    assert p.vars_used() == ("t",)
    q = MultiPoly.var(T12, "t1") * MultiPoly.var(T12, "t2")
    assert str(q) == "t1*t2"
    assert q.degree_in("t1") == 1


def test_zero_degree_convention():
    assert MultiPoly.zero(T).total_degree() == -1
    assert MultiPoly.one(T).total_degree() == 0


@given(small_polys, small_polys, small_polys)
@settings(max_examples=60)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == MultiPoly.zero(T)


def test_gcd_examples():
    g = poly_gcd(t() ** 2 - c(1), t() - c(1))
    assert g == t() - c(1)
    assert poly_gcd(t() ** 2 - c(1), c(3)).is_one()
    t1 = MultiPoly.var(T12, "t1")
    t2 = MultiPoly.var(T12, "t2")
    g2 = poly_gcd(t1**2 * t2 + t1 * t2**2, t1 * t2)
    assert g2 == t1 * t2


def test_gcd_of_zero():
    p = c(2) * t() + c(2)
    assert poly_gcd(MultiPoly.zero(T), p) == t() + c(1)
    assert poly_gcd(p, MultiPoly.zero(T)) == t() + c(1)


@given(small_polys, small_polys)
@settings(max_examples=40, deadline=None)
def test_gcd_divides_both(p, q):
    g = poly_gcd(p, q)
    if not p.is_zero():
        assert p.divide_exact(g) is not None
    if not q.is_zero():
        assert q.divide_exact(g) is not None


@given(small_polys, small_polys, small_polys)
@settings(max_examples=25, deadline=None)
def test_common_factor_detected(p, q, r):
    # gcd(r*p, r*q) is divisible by the monic part of r
    if r.is_zero() or r.is_constant():
        return
    g = poly_gcd(r * p, r * q)
    if (r * p).is_zero() or (r * q).is_zero():
        return
    _, rm = r.primitive_monic()
    assert g.divide_exact(rm) is not None


@given(small_polys2, small_polys2)
@settings(max_examples=25, deadline=None)
def test_gcd_two_variables(p, q):
    g = poly_gcd(p, q)
    if not p.is_zero():
        assert p.divide_exact(g) is not None
    if not q.is_zero():
        assert q.divide_exact(g) is not None


def test_gcd_many():
    polys = [t() ** 3 - t(), t() ** 2 + t(), t() ** 2 - t()]
    assert gcd_many(polys) == t()
    with pytest.raises(ValueError):
        gcd_many([])


def test_squarefree_examples():
    p = (t() - c(1)) ** 2 * (t() + c(2))
    parts = squarefree_parts(p)
    assert parts == [(t() + c(2), 1), (t() - c(1), 2)] or parts == [
        (t() - c(1), 2),
        (t() + c(2), 1),
    ]
    assert squarefree_parts(t() ** 2 - c(1)) == [(t() ** 2 - c(1), 1)]
    assert squarefree_parts(c(5)) == []


@given(small_polys)
@settings(max_examples=40, deadline=None)
def test_squarefree_multiply_back(p):
    if p.is_zero() or p.is_constant():
        return
    parts = squarefree_parts(p)
    prod = MultiPoly.one(T)
    for g, k in parts:
        prod = prod * g**k
    _, pm = p.primitive_monic()
    assert prod == pm


@given(small_polys)
@settings(max_examples=30, deadline=None)
def test_squarefree_parts_pairwise_coprime(p):
    if p.is_zero() or p.is_constant():
        return
    parts = squarefree_parts(p)
    for i in range(len(parts)):
        gi = parts[i][0]
        # squarefree: gcd with own derivative is 1
        for v in gi.vars_used():
            assert poly_gcd(gi, gi.derivative(v)).is_one()
        for j in range(i + 1, len(parts)):
            assert poly_gcd(gi, parts[j][0]).is_one()


def test_divide_exact():
    p = (t() + c(1)) * (t() - c(2))
    assert p.divide_exact(t() + c(1)) == t() - c(2)
    assert p.divide_exact(t() + c(3)) is None
    assert p.divide_exact(c(2)) == p.scale(fe(1) / fe(2))
    with pytest.raises(ZeroDivisionError):
        p.divide_exact(MultiPoly.zero(T))


def test_derivative():
    p = t() ** 3 + c(2) * t()
    assert p.derivative("t") == c(3) * t() ** 2 + c(2)
    t1 = MultiPoly.var(T12, "t1")
    t2 = MultiPoly.var(T12, "t2")
    assert (t1**2 * t2).derivative("t2") == t1**2


def test_evaluate_and_partial_eval():
    t1 = MultiPoly.var(T12, "t1")
    t2 = MultiPoly.var(T12, "t2")
    p = t1**2 + t2
    assert p.evaluate({"t1": fe(3), "t2": fe(4)}) == fe(13)
    q = p.partial_eval({"t1": fe(3)})
    assert q.vars_used() == ("t2",)
    assert q == t2 + MultiPoly.const(T12, fe(9))


def test_shift_and_rename():
    p = t() ** 2 + t()
    # exponent shift: multiply by t^k
    assert p.shift_var("t", 1) == t() ** 3 + t() ** 2
    assert p.shift_var("t", 1).shift_var("t", -1) == p
    # rename_vars permutes within the universe
    t1 = MultiPoly.var(T12, "t1")
    t2 = MultiPoly.var(T12, "t2")
    swapped = (t1**2 + t2).rename_vars({"t1": "t2", "t2": "t1"})
    assert swapped == t2**2 + t1
    with pytest.raises(ValueError):
        t().rename_vars({"t": "s"})


def test_primitive_monic():
    p = c(4) * t() ** 2 + c(2) * t()
    lead, m = p.primitive_monic()
    assert lead == fe(4)
    assert m == t() ** 2 + t().scale(fe(1) / fe(2))
    assert m.lead_coeff() == ONE


def test_univar_gcd_and_inverse_mod():
    m = t() ** 2 + c(1)
    g = univar_gcd(t() ** 2 - c(1), t() - c(1), "t")
    assert g == t() - c(1)
    inv = univar_inverse_mod(t(), m, "t")
    # t * inv == 1 mod t^2+1, i.e. inv == -t
    assert univar_rem(t() * inv - c(1), m, "t").is_zero()
    with pytest.raises(ValueError):
        univar_inverse_mod(t() + c(0), t() ** 2 + t(), "t")


@given(small_polys, small_polys)
@settings(max_examples=30, deadline=None)
def test_univar_rem_is_remainder(p, q):
    if q.is_zero() or q.is_constant():
        return
    r = univar_rem(p, q, "t")
    assert r.degree_in("t") < q.degree_in("t")
    # p - r divisible by q
    diff = p - r
    if not diff.is_zero():
        assert diff.divide_exact(q.primitive_monic()[1]) is not None


def test_universe_mismatch_rejected():
    with pytest.raises(ValueError):
        t() + MultiPoly.var(T12, "t1")


def test_with_universe():
    p = t() ** 2
    q = p.with_universe(("s", "t"))
    assert q.universe == ("s", "t")
    assert q.degree_in("t") == 2
    with pytest.raises(ValueError):
        q.with_universe(("s",))
