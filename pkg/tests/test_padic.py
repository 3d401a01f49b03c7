"""p-adic arithmetic, logarithm branches, and the branch-difference pairing."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dilogeq.formal import FormalSum, five_term
from dilogeq.padic import (
    Branch,
    GeneratorVanishesAtPoint,
    OutOfDisc,
    PadicNumber,
    ZeroArgument,
    agree_to,
    branch_diff,
    check_constant_padic,
    dp_disc,
    li2p,
    padic_valuation,
    plog,
    teichmuller,
)
from dilogeq.ratfunc import RationalFunction
from dilogeq.scalars import fe
from dilogeq.wedge import WedgeElement, boundary

T = ("t",)


def t():
    return RationalFunction.var(T, "t")


def const(q):
    return RationalFunction.const(T, fe(q))


def pad(q, p=5, prec=32):
    return PadicNumber.from_rational(q, p, prec)


# -- valuations and representation ------------------------------------------------


def test_padic_valuation():
    assert padic_valuation(Fraction(50), 5) == 2
    assert padic_valuation(Fraction(1, 25), 5) == -2
    assert padic_valuation(Fraction(3), 5) == 0
    assert padic_valuation(Fraction(12), 2) == 2
    assert padic_valuation(Fraction(-9, 10), 3) == 2
    with pytest.raises(ValueError):
        padic_valuation(Fraction(0), 5)


def test_from_rational_normal_form():
    x = pad(Fraction(50, 3))
    assert x.val == 2 and x.unit % 5 != 0
    # 2/3 = 2 * inverse(3) mod 5^32
    assert (x.unit * 3) % 5**32 == 2 % 5**32
    assert pad(0).is_exact_zero()


def test_zero_bookkeeping():
    z = PadicNumber.zero(5, 4)
    assert z.is_zeroish() and not z.is_exact_zero()
    assert z.abs_precision() == 4
    with pytest.raises(ZeroArgument):
        z.valuation()
    assert str(z) == "O(5^4)"
    assert str(PadicNumber.zero(5)) == "0"


def test_cancellation_keeps_a_precision_floor():
    a = pad(Fraction(7, 2), prec=8)
    d = a - a
    assert d.is_zeroish()
    assert d.abs_precision() == 8
    # values congruent mod 5^6 but not mod 5^7
    b = pad(Fraction(7, 2) + 5**6, prec=8)
    assert agree_to(a, b, 6)
    assert not agree_to(a, b, 7)


def test_multiplication_tracks_valuation_and_precision():
    a = PadicNumber(5, 2, 3, 8)
    b = PadicNumber(5, -1, 2, 4)
    c = a * b
    assert c.val == 1 and c.prec == 4 and c.unit == 6
    assert c.abs_precision() == 5
    # adding something known only to O(5^3) caps the result there
    capped = a + PadicNumber.zero(5, 3)
    assert capped.abs_precision() == 3


small_fracs = st.fractions(
    min_value=Fraction(-30), max_value=Fraction(30), max_denominator=29
)
val_shifts = st.integers(min_value=-3, max_value=3)


@given(small_fracs, small_fracs, val_shifts, val_shifts)
def test_arithmetic_agrees_with_exact_rationals(qa, qb, ka, kb):
    p = 5
    a = qa * Fraction(p) ** ka
    b = qb * Fraction(p) ** kb
    xa, xb = pad(a), pad(b)
    assert agree_to(xa + xb, pad(a + b), 20)
    assert agree_to(xa - xb, pad(a - b), 20)
    assert agree_to(xa * xb, pad(a * b), 20)
    if b != 0:
        assert agree_to(xa / xb, pad(a / b), 20)
    if a != 0:
        for n in (-3, -1, 0, 2, 5):
            assert agree_to(xa**n, pad(a**n), 20)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroArgument):
        pad(0).inverse()
    with pytest.raises(ZeroArgument):
        PadicNumber.zero(5, 4).inverse()


# -- Teichmueller lifts -------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3, 5, 7, 13])
def test_teichmuller_is_torsion(p):
    one = PadicNumber.from_rational(1, p, 20)
    e = 2 if p == 2 else p - 1
    for a in range(1, min(p, 6)):
        w = teichmuller(a, p, 20)
        assert w.unit % p == a % p
        d = w**e - one
        assert d.is_zeroish() and d.abs_precision() >= 20


def test_teichmuller_rejects_non_units():
    with pytest.raises(ValueError):
        teichmuller(10, 5, 8)


# -- the logarithm ------------------------------------------------------------------


def _log_series_oracle(t_frac, p, terms, prec):
    # log(1 + t) as an exact rational partial sum of the defining series
    acc = Fraction(0)
    tp = Fraction(1)
    for k in range(1, terms + 1):
        tp *= t_frac
        acc += Fraction((-1) ** (k + 1), k) * tp
    return PadicNumber.from_rational(acc, p, prec)


def test_plog_golden_series_p5():
    got = plog(pad(6), Branch.standard(5))
    want = _log_series_oracle(Fraction(5), 5, 40, 32)
    assert agree_to(got, want, 30)


def test_plog_golden_series_p2():
    got = plog(PadicNumber.from_rational(5, 2, 32), Branch.standard(2))
    want = _log_series_oracle(Fraction(4), 2, 60, 32)
    assert agree_to(got, want, 28)


def test_plog_of_p_is_the_branch_value():
    std = plog(pad(5), Branch.standard(5))
    assert std.is_zeroish() and std.abs_precision() >= 30
    other = plog(pad(5), Branch.of(5, 10))
    assert agree_to(other, pad(10), 30)


def test_plog_kills_torsion():
    # log of a Teichmueller representative is 0
    w = teichmuller(2, 5, 24)
    lw = plog(w, Branch.standard(5))
    assert lw.is_zeroish() and lw.abs_precision() >= 22


def test_plog_is_a_homomorphism():
    rnd = random.Random(19)
    for p in (2, 3, 5, 7):
        branches = [Branch.standard(p), Branch.of(p, 3 * p)]
        for branch in branches:
            for _ in range(10):
                a = Fraction(rnd.randint(1, 60), rnd.randint(1, 60))
                b = Fraction(rnd.randint(1, 60), rnd.randint(1, 60)) * Fraction(p) ** rnd.randint(-2, 2)
                x = PadicNumber.from_rational(a, p, 32)
                y = PadicNumber.from_rational(b, p, 32)
                xy = PadicNumber.from_rational(a * b, p, 32)
                lhs = plog(xy, branch)
                rhs = plog(x, branch) + plog(y, branch)
                assert agree_to(lhs, rhs, 26), (p, a, b)


def test_plog_rejects_zero():
    with pytest.raises(ZeroArgument):
        plog(pad(0), Branch.standard(5))


# -- the dilogarithm on the disc ----------------------------------------------------


def _li2_series_oracle(z_frac, p, terms, prec):
    acc = Fraction(0)
    zp = Fraction(1)
    for n in range(1, terms + 1):
        zp *= z_frac
        acc += zp / Fraction(n * n)
    return PadicNumber.from_rational(acc, p, prec)


def test_li2p_golden_series():
    got = li2p(pad(5))
    want = _li2_series_oracle(Fraction(5), 5, 40, 32)
    assert agree_to(got, want, 30)
    got10 = li2p(pad(10))
    want10 = _li2_series_oracle(Fraction(10), 5, 40, 32)
    assert agree_to(got10, want10, 28)


def test_li2p_golden_series_p2():
    got = li2p(PadicNumber.from_rational(2, 2, 30))
    want = _li2_series_oracle(Fraction(2), 2, 80, 30)
    assert agree_to(got, want, 25)


def test_li2p_needs_the_disc():
    with pytest.raises(OutOfDisc):
        li2p(pad(3))
    with pytest.raises(OutOfDisc):
        li2p(pad(Fraction(1, 5)))
    with pytest.raises(OutOfDisc):
        dp_disc(pad(3), Branch.standard(5))


def test_dp_disc_zeroish_input():
    assert li2p(PadicNumber.zero(5, 4)).is_zeroish()
    assert dp_disc(PadicNumber.zero(5, 4), Branch.standard(5)).is_zeroish()


# -- branch differences --------------------------------------------------------------


BRANCHES = [
    Branch.standard(5),
    Branch.of(5, 10),
    Branch.of(5, -5),
    Branch.of(5, 35),
]


def test_single_term_branch_difference():
    # D_p difference for one disc point equals Delta/2 * v(z) log(1-z)
    z = Fraction(5)
    A, B = BRANCHES[0], BRANCHES[1]
    direct = dp_disc(pad(z), A) - dp_disc(pad(z), B)
    w = boundary(FormalSum.single(const(z)))
    formula = branch_diff(w, {"t": Fraction(3)}, A, B)
    assert agree_to(direct, formula, 30)


def test_branch_difference_matches_dp_disc_on_sums():
    rnd = random.Random(23)
    pt = {"t": Fraction(3)}
    for trial in range(12):
        total = FormalSum.zero(T, "Q", "Z")
        for _ in range(rnd.randint(1, 3)):
            while True:
                a = rnd.randint(1, 40)
                b = rnd.randint(1, 40)
                if a % 5 and b % 5:
                    break
            z = Fraction(5 * a, b)
            total = total + FormalSum.single(const(z), rnd.choice([-2, -1, 1, 2]))
        if total.is_zero():
            continue
        A, B = rnd.sample(BRANCHES, 2)
        direct = PadicNumber.zero(5)
        for f, coeff in total.items():
            z = f.evaluate({"t": fe(3)}).re
            diff = dp_disc(pad(z), A) - dp_disc(pad(z), B)
            direct = direct + diff.scale_rational(coeff)
        formula = branch_diff(boundary(total), pt, A, B)
        assert agree_to(direct, formula, 30), trial


def test_bracket_is_branch_independent():
    # v(f)log(g) - v(g)log(f) with both valuations nonzero: the log(p)
    # contributions cancel exactly
    f, g = pad(10), pad(15)
    for A in BRANCHES[:2]:
        for B in BRANCHES[2:]:
            ba = plog(g, A).scale_rational(1) - plog(f, A).scale_rational(1)
            bb = plog(g, B).scale_rational(1) - plog(f, B).scale_rational(1)
            assert agree_to(ba, bb, 30)
    w = WedgeElement(T, [(1, const(10), const(15))])
    d_ab = branch_diff(w, {"t": Fraction(2)}, BRANCHES[0], BRANCHES[3])
    d_ba = branch_diff(w, {"t": Fraction(2)}, BRANCHES[3], BRANCHES[0])
    assert agree_to(d_ab, -d_ba, 30)


def test_branch_diff_same_branch_is_zero():
    w = boundary(FormalSum.single(const(Fraction(5, 3))))
    d = branch_diff(w, {"t": Fraction(2)}, BRANCHES[1], BRANCHES[1])
    assert d.is_zeroish()


def test_branch_diff_argument_guards():
    w = WedgeElement(T, [(1, t(), t().one_minus())])
    with pytest.raises(GeneratorVanishesAtPoint):
        branch_diff(w, {"t": Fraction(0)}, BRANCHES[0], BRANCHES[1])
    w2 = WedgeElement(T, [(1, t().inverse(), const(2))])
    with pytest.raises(GeneratorVanishesAtPoint):
        branch_diff(w2, {"t": Fraction(0)}, BRANCHES[0], BRANCHES[1])
    with pytest.raises(ValueError):
        branch_diff(w, {"t": Fraction(2)}, Branch.standard(5), Branch.standard(7))


def test_check_constant_padic_annotates_branch_independence():
    rho = five_term(t(), t() ** 2)
    cert = check_constant_padic(rho)
    assert cert.is_constant()
    assert any("branch" in note for note in cert.notes)
    bad = check_constant_padic(FormalSum.single(t()))
    assert bad.verdict == "NotConstant"
    assert any("branch" in note for note in bad.notes)
