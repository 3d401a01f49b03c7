"""Fixed-precision p-adic arithmetic, the branch-dependent p-adic logarithm,
the dilogarithm Li_{p,2} on its convergence disc, and the branch-difference
pairing on boundary images.

A PadicNumber is p^val * unit with the unit kept modulo p^prec, so the
value is known modulo p^(val+prec); a number whose digits have all
cancelled is kept as an explicit O(p^val) with unit 0.  Every operation
propagates a precision lower bound; nothing ever claims digits it does not
have.

The logarithm on Q_p* splits as log(p^v u) = v*log(p) + log(u), where
log(p) is exactly the free choice of branch, the Teichmueller part of u is
torsion (so any homomorphism into Q_p kills it), and the principal-unit
part is handled by the usual series, reached by raising u to the (p-1)-st
power (squaring, for p = 2) and dividing the result back out.

On the disc v_p(z) >= 1:
    D_p(z) = Li_{p,2}(z) + (1/2) log(z) log(1-z),
and for two branches differing by Delta = logA(p) - logB(p), the value of
the sum attached to a wedge element at a rational point moves by

    sum a * Delta/2 * (v(f) log(g) - v(g) log(f)),

the bracket being branch-independent, which is what branch_diff computes.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .formal import FormalSum
from .ratfunc import INF
from .scalars import FieldElement
from .wedge import ConstancyCertificate, WedgeElement, check_constant


EXACT = 10**9  # valuation sentinel for an exact zero


class ZeroArgument(ZeroDivisionError):
    pass


class OutOfDisc(ValueError):
    pass


class GeneratorVanishesAtPoint(ValueError):
    pass


def padic_valuation(q: Fraction, p: int) -> int:
    if q == 0:
        raise ValueError("zero has no finite valuation")
    v = 0
    n = q.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = q.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


@dataclass(frozen=True)
class PadicNumber:
    """p^val * (unit + O(p^prec)); unit == 0 encodes O(p^val)."""

    p: int
    val: int
    unit: int
    prec: int

    def __post_init__(self):
        if self.unit:
            assert 0 < self.unit < self.p**self.prec
            assert self.unit % self.p != 0
        else:
            assert self.prec == 0

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(p: int, abs_prec: int = EXACT) -> "PadicNumber":
        return PadicNumber(p, min(abs_prec, EXACT), 0, 0)

    @staticmethod
    def from_rational(q, p: int, prec: int) -> "PadicNumber":
        q = Fraction(q)
        if q == 0:
            return PadicNumber.zero(p)
        v = padic_valuation(q, p)
        n, d = q.numerator, q.denominator
        while n % p == 0:
            n //= p
        while d % p == 0:
            d //= p
        m = p**prec
        unit = (n % m) * pow(d, -1, m) % m
        if unit == 0:
            return PadicNumber.zero(p, v + prec)
        return PadicNumber(p, v, unit, prec)

    # -- structure ----------------------------------------------------------

    def is_zeroish(self) -> bool:
        return self.unit == 0

    def is_exact_zero(self) -> bool:
        return self.unit == 0 and self.val >= EXACT

    def abs_precision(self) -> int:
        """The value is known modulo p to this power."""
        if self.unit == 0:
            return self.val
        return self.val + self.prec

    def valuation(self) -> int:
        if self.unit == 0:
            raise ZeroArgument("valuation of an (indistinguishable-from-)zero")
        return self.val

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "PadicNumber") -> "PadicNumber":
        a, b = self, other
        assert a.p == b.p
        p = a.p
        if a.unit == 0 and b.unit == 0:
            return PadicNumber.zero(p, min(a.val, b.val))
        if a.unit == 0:
            a, b = b, a
        if b.unit == 0:
            # a + O(p^{b.val})
            cap = min(a.abs_precision(), b.val)
            if cap <= a.val:
                return PadicNumber.zero(p, cap)
            return PadicNumber(p, a.val, a.unit % p ** (cap - a.val), cap - a.val)
        cap = min(a.abs_precision(), b.abs_precision())
        v = min(a.val, b.val)
        digits = cap - v
        if digits <= 0:
            return PadicNumber.zero(p, cap)
        m = p**digits
        s = (a.unit * p ** (a.val - v) + b.unit * p ** (b.val - v)) % m
        if s == 0:
            return PadicNumber.zero(p, cap)
        k = 0
        while s % p == 0:
            s //= p
            k += 1
        if digits - k <= 0:
            return PadicNumber.zero(p, cap)
        return PadicNumber(p, v + k, s % p ** (digits - k), digits - k)

    def __neg__(self) -> "PadicNumber":
        if self.unit == 0:
            return self
        m = self.p**self.prec
        return PadicNumber(self.p, self.val, (m - self.unit) % m, self.prec)

    def __sub__(self, other: "PadicNumber") -> "PadicNumber":
        return self + (-other)

    def __mul__(self, other: "PadicNumber") -> "PadicNumber":
        a, b = self, other
        assert a.p == b.p
        p = a.p
        if a.unit == 0 or b.unit == 0:
            # O(p^x) times p^y-unit (or O(p^y)) is O(p^{x+y})
            return PadicNumber.zero(p, min(a.val + b.val, EXACT))
        prec = min(a.prec, b.prec)
        m = p**prec
        u = (a.unit * b.unit) % m
        return PadicNumber(p, a.val + b.val, u, prec)

    def inverse(self) -> "PadicNumber":
        if self.unit == 0:
            raise ZeroArgument("inverse of zero (at this precision)")
        m = self.p**self.prec
        return PadicNumber(self.p, -self.val, pow(self.unit, -1, m), self.prec)

    def __truediv__(self, other: "PadicNumber") -> "PadicNumber":
        return self * other.inverse()

    def __pow__(self, n: int) -> "PadicNumber":
        if n < 0:
            return self.inverse() ** (-n)
        if self.unit == 0:
            if n == 0:
                return PadicNumber.from_rational(1, self.p, 1)
            return PadicNumber.zero(self.p, min(self.val * n, EXACT))
        out = PadicNumber(self.p, 0, 1, self.prec)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale_rational(self, q) -> "PadicNumber":
        q = Fraction(q)
        if q == 0:
            return PadicNumber.zero(self.p)
        prec = self.prec if self.unit else 8
        return self * PadicNumber.from_rational(q, self.p, max(prec, 1))

    # -- display -------------------------------------------------------------

    def __str__(self):
        if self.unit == 0:
            if self.val >= EXACT:
                return "0"
            return f"O({self.p}^{self.val})"
        return f"{self.p}^{self.val} * {self.unit} + O({self.p}^{self.abs_precision()})"

    def __repr__(self):
        return f"PadicNumber({self})"


def agree_to(x: PadicNumber, y: PadicNumber, abs_digits: int) -> bool:
    """Do x and y agree modulo p^abs_digits (as far as both are known)?"""
    d = x - y
    # for a zeroish difference d.val is its cancellation floor; otherwise it
    # is the exact valuation, and either way agreement means it clears the cap
    return d.val >= min(abs_digits, x.abs_precision(), y.abs_precision())


@dataclass(frozen=True)
class Branch:
    """A branch of the p-adic logarithm: the chosen value of log_p(p)."""

    p: int
    log_of_p: PadicNumber

    @staticmethod
    def standard(p: int) -> "Branch":
        """The branch with log_p(p) = 0."""
        return Branch(p, PadicNumber.zero(p))

    @staticmethod
    def of(p: int, value, prec: int = 32) -> "Branch":
        if isinstance(value, PadicNumber):
            return Branch(p, value)
        return Branch(p, PadicNumber.from_rational(value, p, prec))


def _log_principal(t: PadicNumber) -> PadicNumber:
    """log(1 + t) for v_p(t) >= 1 (>= 2 when p = 2), by the series."""
    p = t.p
    if t.unit == 0:
        return PadicNumber.zero(p, t.val)
    s = t.val
    assert s >= (2 if p == 2 else 1)
    target = t.abs_precision()
    total = PadicNumber.zero(p)
    term = t
    k = 1
    while True:
        # term = t^k; contribution = (-1)^{k+1} term / k
        contrib = term.scale_rational(Fraction((-1) ** (k + 1), k))
        total = total + contrib
        k += 1
        # tail bound: v(t^j/j) >= j*s - log2(j), increasing in j for j >= 2,
        # so once it clears the target every later term is invisible
        if k >= 2 and k * s - _ilog(k, 2) > target + 2:
            break
        term = term * t
    return total


def _ilog(k: int, p: int) -> int:
    out = 0
    while k >= p:
        k //= p
        out += 1
    return out


def plog(x: PadicNumber, branch: Branch) -> PadicNumber:
    """The branch's logarithm on Q_p*: val*log(p) + log(unit part)."""
    if x.unit == 0:
        raise ZeroArgument("log of zero")
    p = x.p
    e = 2 if p == 2 else p - 1
    # u^e is a principal unit; log(u) = log(u^e)/e kills the torsion part
    u = PadicNumber(p, 0, x.unit, x.prec)
    ue = u**e
    one = PadicNumber.from_rational(1, p, x.prec)
    t = ue - one
    lu = _log_principal(t).scale_rational(Fraction(1, e))
    return branch.log_of_p.scale_rational(x.val) + lu


def li2p(z: PadicNumber) -> PadicNumber:
    """Li_{p,2}(z) = sum z^n / n^2 on the disc v_p(z) >= 1."""
    p = z.p
    if z.unit == 0:
        if z.val < 1:
            raise OutOfDisc("need v_p(z) >= 1")
        return PadicNumber.zero(p, min(z.val, EXACT))
    if z.val < 1:
        raise OutOfDisc(f"need v_p(z) >= 1, got valuation {z.val}")
    s = z.val
    target = z.abs_precision()
    total = PadicNumber.zero(p)
    term = z
    n = 1
    while True:
        total = total + term.scale_rational(Fraction(1, n * n))
        n += 1
        # v(z^j/j^2) >= j*s - 2*log2(j), increasing for j >= 3
        if n >= 3 and n * s - 2 * _ilog(n, 2) > target + 3:
            break
        term = term * z
    return total


def dp_disc(z: PadicNumber, branch: Branch) -> PadicNumber:
    """D_p(z) = Li_{p,2}(z) + (1/2) log(z) log(1-z) on the disc."""
    if z.unit == 0 and z.val < 1:
        raise OutOfDisc("need v_p(z) >= 1")
    if z.unit == 0:
        return li2p(z)
    if z.val < 1:
        raise OutOfDisc(f"need v_p(z) >= 1, got valuation {z.val}")
    one = PadicNumber.from_rational(1, z.p, z.prec)
    lz = plog(z, branch)
    l1z = plog(one - z, branch)
    return li2p(z) + (lz * l1z).scale_rational(Fraction(1, 2))


def teichmuller(a: int, p: int, prec: int) -> PadicNumber:
    """The Teichmueller representative: the p^k-th power limit of a."""
    if a % p == 0:
        raise ValueError("needs a unit residue")
    m = p**prec
    x = a % m
    while True:
        y = pow(x, p, m)
        if y == x:
            break
        x = y
    return PadicNumber(p, 0, x, prec)


# ---------------------------------------------------------------------------
# branch dependence of certified identities
# ---------------------------------------------------------------------------


def branch_diff(
    w: WedgeElement,
    point: dict[str, Fraction],
    branch_a: Branch,
    branch_b: Branch,
    prec: int = 32,
) -> PadicNumber:
    """How much the p-adic value attached to w at the point moves between
    two branches: sum over tensors of a * Delta/2 * (v(f)log(g) - v(g)log(f)),
    with Delta the difference of the chosen log(p) values.  The bracket is
    branch-independent, so it is evaluated with branch_a."""
    p = branch_a.p
    if branch_b.p != p:
        raise ValueError("branches use different primes")
    delta = branch_a.log_of_p - branch_b.log_of_p
    fe_point = {v: FieldElement(Fraction(q)) for v, q in point.items()}
    total = PadicNumber.zero(p)
    for a, f, g in w.tensors:
        fv = _eval_rational(f, fe_point)
        gv = _eval_rational(g, fe_point)
        fp = PadicNumber.from_rational(fv, p, prec)
        gp = PadicNumber.from_rational(gv, p, prec)
        bracket = plog(gp, branch_a).scale_rational(padic_valuation(fv, p)) - plog(
            fp, branch_a
        ).scale_rational(padic_valuation(gv, p))
        total = total + (delta * bracket).scale_rational(a * Fraction(1, 2))
    return total


def _eval_rational(f, fe_point) -> Fraction:
    v = f.evaluate(fe_point)
    if v is INF:
        raise GeneratorVanishesAtPoint(f"{f} has a pole at the point")
    if v.is_zero():
        raise GeneratorVanishesAtPoint(f"{f} vanishes at the point")
    if not v.is_rational():
        raise ValueError("p-adic evaluation needs rational values")
    return v.re


def check_constant_padic(alpha: FormalSum) -> ConstancyCertificate:
    """The p-adic constancy criterion; symbolically identical to the complex
    one, and branch-independent: if the value is constant for one branch of
    log_p it is constant for every branch."""
    cert = check_constant(alpha)
    note = (
        "p-adic reading: a Constant verdict holds for every branch of log_p; "
        "only the value of the constant depends on the branch"
    )
    return replace(cert, notes=cert.notes + (note,))
