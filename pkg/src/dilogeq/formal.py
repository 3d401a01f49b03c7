"""Formal A-linear combinations of dilogarithm arguments.

A FormalSum is a finite map from rational functions f (with f != 0, 1 --
the admissible arguments) to nonzero exact coefficients.  Coefficients live
in Z or Q per the sum's coeff_mode: Z-mode keeps denominators out (and
downstream lets mod-2 sign torsion survive), Q-mode is the torsion-free
quotient.  The field_mode records whether keys may carry Gaussian rational
coefficients ("Qi") or must stay over Q ("Q").

Relation generators:
  five_term(x, y)  = [x] - [y] + [y/x] + [(1-x)/(1-y)] - [(1-x^-1)/(1-y^-1)]
  inversion(x)     = [x] + [1/x]
  c_element(c)     = [c] + [1-c]
all merged eagerly so equal arguments collapse into one term.
"""

from __future__ import annotations

from fractions import Fraction

from .ratfunc import RationalFunction, ZeroDenominator
from .scalars import FieldElement


FIELD_MODES = ("Q", "Qi")
COEFF_MODES = ("Z", "Q")


class DegenerateArguments(ValueError):
    """A generator argument is undefined or lands in {0, 1}."""


def _check_coeff(c: Fraction, coeff_mode: str) -> Fraction:
    c = Fraction(c)
    if coeff_mode == "Z" and c.denominator != 1:
        raise ValueError(f"Z-mode coefficient must be an integer, got {c}")
    return c


class FormalSum:
    __slots__ = ("universe", "field_mode", "coeff_mode", "terms", "_hash")

    def __init__(
        self,
        universe,
        terms: dict[RationalFunction, Fraction],
        field_mode: str = "Q",
        coeff_mode: str = "Z",
    ):
        if field_mode not in FIELD_MODES:
            raise ValueError(f"unknown field mode {field_mode!r}")
        if coeff_mode not in COEFF_MODES:
            raise ValueError(f"unknown coefficient mode {coeff_mode!r}")
        self.universe = tuple(universe)
        self.field_mode = field_mode
        self.coeff_mode = coeff_mode
        clean: dict[RationalFunction, Fraction] = {}
        for f, c in terms.items():
            c = _check_coeff(c, coeff_mode)
            if not c:
                continue
            if f.is_zero() or f.is_one():
                raise DegenerateArguments(f"argument {f} outside the admissible set")
            if f.universe != self.universe:
                raise ValueError("term universe mismatch")
            clean[f] = clean.get(f, Fraction(0)) + c
        self.terms = {f: c for f, c in clean.items() if c}
        self._hash = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(universe, field_mode="Q", coeff_mode="Z") -> "FormalSum":
        return FormalSum(universe, {}, field_mode, coeff_mode)

    @staticmethod
    def single(f: RationalFunction, coeff=1, field_mode="Q", coeff_mode="Z") -> "FormalSum":
        return FormalSum(f.universe, {f: Fraction(coeff)}, field_mode, coeff_mode)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[RationalFunction, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def coefficient(self, f: RationalFunction) -> Fraction:
        return self.terms.get(f, Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return (
            self.universe == other.universe
            and self.field_mode == other.field_mode
            and self.coeff_mode == other.coeff_mode
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            canon = tuple((f, c) for f, c in self.items())
            self._hash = hash(
                (self.universe, self.field_mode, self.coeff_mode, canon)
            )
        return self._hash

    def _check_compatible(self, other: "FormalSum"):
        if (
            self.universe != other.universe
            or self.field_mode != other.field_mode
            or self.coeff_mode != other.coeff_mode
        ):
            raise ValueError("formal sums live over different settings")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "FormalSum") -> "FormalSum":
        self._check_compatible(other)
        out = dict(self.terms)
        for f, c in other.terms.items():
            out[f] = out.get(f, Fraction(0)) + c
        return FormalSum(self.universe, out, self.field_mode, self.coeff_mode)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __neg__(self) -> "FormalSum":
        return FormalSum(
            self.universe,
            {f: -c for f, c in self.terms.items()},
            self.field_mode,
            self.coeff_mode,
        )

    def scale(self, c) -> "FormalSum":
        c = _check_coeff(Fraction(c), self.coeff_mode)
        return FormalSum(
            self.universe,
            {f: c * a for f, a in self.terms.items()},
            self.field_mode,
            self.coeff_mode,
        )

    def to_mode(self, coeff_mode: str) -> "FormalSum":
        """Reinterpret coefficients; Q -> Z requires integer values."""
        return FormalSum(self.universe, dict(self.terms), self.field_mode, coeff_mode)

    def map_keys(self, fn) -> "FormalSum":
        out: dict[RationalFunction, Fraction] = {}
        for f, c in self.terms.items():
            g = fn(f)
            out[g] = out.get(g, Fraction(0)) + c
        return FormalSum(self.universe, out, self.field_mode, self.coeff_mode)

    def with_universe(self, new_universe) -> "FormalSum":
        return FormalSum(
            new_universe,
            {f.with_universe(new_universe): c for f, c in self.terms.items()},
            self.field_mode,
            self.coeff_mode,
        )

    # -- display -------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for f, c in self.items():
            if c == 1:
                body = f"[{f}]"
            elif c == -1:
                body = f"-[{f}]"
            else:
                body = f"{c}*[{f}]"
            pieces.append(body)
        text = pieces[0]
        for p in pieces[1:]:
            if p.startswith("-"):
                text += " - " + p[1:]
            else:
                text += " + " + p
        return text

    def __repr__(self):
        return f"FormalSum({self})"


class ExtendedFormalSum:
    """A FormalSum plus explicit coefficients for the symbols [0], [1], [inf]."""

    __slots__ = ("ordinary", "c0", "c1", "cinf")

    def __init__(self, ordinary: FormalSum, c0=0, c1=0, cinf=0):
        self.ordinary = ordinary
        self.c0 = _check_coeff(Fraction(c0), ordinary.coeff_mode)
        self.c1 = _check_coeff(Fraction(c1), ordinary.coeff_mode)
        self.cinf = _check_coeff(Fraction(cinf), ordinary.coeff_mode)

    def __eq__(self, other):
        if not isinstance(other, ExtendedFormalSum):
            return NotImplemented
        return (
            self.ordinary == other.ordinary
            and self.c0 == other.c0
            and self.c1 == other.c1
            and self.cinf == other.cinf
        )

    def __str__(self):
        pieces = [str(self.ordinary)] if not self.ordinary.is_zero() else []
        for c, sym in ((self.c0, "[0]"), (self.c1, "[1]"), (self.cinf, "[inf]")):
            if c:
                if c == 1:
                    pieces.append(sym)
                elif c == -1:
                    pieces.append("-" + sym)
                else:
                    pieces.append(f"{c}*{sym}")
        if not pieces:
            return "0"
        text = pieces[0]
        for p in pieces[1:]:
            if p.startswith("-"):
                text += " - " + p[1:]
            else:
                text += " + " + p
        return text

    def __repr__(self):
        return f"ExtendedFormalSum({self})"


# ---------------------------------------------------------------------------
# relation generators
# ---------------------------------------------------------------------------


def _admissible(f: RationalFunction, label: str) -> RationalFunction:
    if f.is_zero() or f.is_one():
        raise DegenerateArguments(f"{label} = {f} lies in {{0, 1}}")
    return f


def five_term(
    x: RationalFunction, y: RationalFunction, field_mode="Q", coeff_mode="Z"
) -> FormalSum:
    """[x] - [y] + [y/x] + [(1-x)/(1-y)] - [(1-1/x)/(1-1/y)], merged."""
    if x == y:
        raise DegenerateArguments("x = y degenerates the relation")
    _admissible(x, "x")
    _admissible(y, "y")
    try:
        a3 = _admissible(y / x, "y/x")
        a4 = _admissible(x.one_minus() / y.one_minus(), "(1-x)/(1-y)")
        a5 = _admissible(
            x.inverse().one_minus() / y.inverse().one_minus(), "(1-1/x)/(1-1/y)"
        )
    except ZeroDenominator as exc:
        raise DegenerateArguments(str(exc)) from exc
    terms: dict[RationalFunction, Fraction] = {}
    for f, c in ((x, 1), (y, -1), (a3, 1), (a4, 1), (a5, -1)):
        terms[f] = terms.get(f, Fraction(0)) + c
    return FormalSum(x.universe, terms, field_mode, coeff_mode)


def inversion(x: RationalFunction, field_mode="Q", coeff_mode="Z") -> FormalSum:
    """[x] + [1/x], merged (x = -1 gives 2[-1])."""
    _admissible(x, "x")
    terms: dict[RationalFunction, Fraction] = {x: Fraction(1)}
    inv = x.inverse()
    terms[inv] = terms.get(inv, Fraction(0)) + 1
    return FormalSum(x.universe, terms, field_mode, coeff_mode)


def c_element(c: RationalFunction, field_mode="Q", coeff_mode="Z") -> FormalSum:
    """[c] + [1-c], merged (c = 1/2 gives 2[1/2])."""
    _admissible(c, "c")
    terms: dict[RationalFunction, Fraction] = {c: Fraction(1)}
    omc = c.one_minus()
    terms[omc] = terms.get(omc, Fraction(0)) + 1
    return FormalSum(c.universe, terms, field_mode, coeff_mode)


def conj_sum(alpha: FormalSum, var_swap: dict[str, str] | None = None) -> FormalSum:
    """Conjugate every argument; coefficients are left untouched."""
    return alpha.map_keys(lambda f: f.conjugate(var_swap))
