"""Specialization of formal sums: substituting a value (possibly infinity)
for a variable, with the degenerate-argument correction.

Plain substitution can push arguments onto 0, 1, or infinity, where they
stop being admissible.  naive_eval performs the substitution into an
extended sum that tracks those three symbols explicitly with coefficients
c0, c1, cinf; the specialization operator then applies the correction

    alpha  ->  alpha - c1*[1] + c0*(C_c - [0]) - cinf*(C_c + [inf])

with C_c = [c] + [1-c] for the chosen auxiliary c.  The symbols cancel and
what remains is an honest formal sum over the smaller universe:

    sp(alpha) = ordinary part + (c0 - cinf) * ([c] + [1-c]).

The auxiliary c only shifts the result by a multiple of [c] + [1-c], whose
boundary is zero, so the constancy verdict never depends on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .formal import ExtendedFormalSum, FormalSum, c_element, five_term
from .ratfunc import INF, RationalFunction
from .scalars import FieldElement, fe


class PointNotAdmissible(ValueError):
    def __init__(self, key, reason):
        self.key = key
        self.reason = reason
        super().__init__(f"argument [{key}] is not admissible at the point: {reason}")


@dataclass(frozen=True)
class SpecStep:
    """Eliminate `var` by sending it to `target` (a rational function of the
    remaining variables, or INF), with auxiliary constant `aux` (not 0 or 1).
    Both are expressed over the full universe with `var` unused."""

    var: str
    target: object  # RationalFunction | INF
    aux: RationalFunction

    def __post_init__(self):
        if self.target is not INF:
            if not isinstance(self.target, RationalFunction):
                raise TypeError("target must be a RationalFunction or INF")
            if self.var in self.target.vars_used():
                raise ValueError(f"target may not involve {self.var}")
        if self.var in self.aux.vars_used():
            raise ValueError(f"aux may not involve {self.var}")
        if self.aux.is_zero() or self.aux.is_one():
            raise ValueError("aux constant must avoid 0 and 1")


@dataclass(frozen=True)
class SpecPlan:
    steps: tuple[SpecStep, ...]

    def __post_init__(self):
        names = [s.var for s in self.steps]
        if len(set(names)) != len(names):
            raise ValueError("plan eliminates a variable twice")


def default_aux(universe, var: str) -> RationalFunction:
    """The auxiliary constant used when the caller does not pick one."""
    return RationalFunction.const(universe, fe(2))


def naive_eval(alpha: FormalSum, var: str, target) -> ExtendedFormalSum:
    """Substitute var -> target in every argument, collecting the symbols
    [0], [1], [inf] into explicit coefficients instead of failing."""
    ordinary: dict[RationalFunction, Fraction] = {}
    c0 = c1 = cinf = Fraction(0)
    for f, a in alpha.items():
        v = f.substitute(var, target)
        if v is INF:
            cinf += a
        elif v.is_zero():
            c0 += a
        elif v.is_one():
            c1 += a
        else:
            ordinary[v] = ordinary.get(v, Fraction(0)) + a
    base = FormalSum(alpha.universe, ordinary, alpha.field_mode, alpha.coeff_mode)
    return ExtendedFormalSum(base, c0, c1, cinf)


def sp(alpha: FormalSum, step: SpecStep) -> FormalSum:
    """Specialize one variable away; the result lives over the remaining
    universe and contains no degenerate symbols."""
    ext = naive_eval(alpha, step.var, step.target)
    result = ext.ordinary
    swing = ext.c0 - ext.cinf
    if swing:
        aux = step.aux.with_universe(alpha.universe)
        cc = c_element(aux, alpha.field_mode, alpha.coeff_mode)
        result = result + cc.scale(swing)
    rest = tuple(v for v in alpha.universe if v != step.var)
    return result.with_universe(rest)


def iterate(alpha: FormalSum, plan: SpecPlan) -> FormalSum:
    for step in plan.steps:
        if step.var not in alpha.universe:
            raise ValueError(f"variable {step.var} already eliminated")
        lifted = SpecStep(
            step.var,
            step.target if step.target is INF
            else step.target.with_universe(alpha.universe),
            step.aux.with_universe(alpha.universe),
        )
        alpha = sp(alpha, lifted)
    return alpha


def evaluate_at_point(alpha: FormalSum, point: dict[str, FieldElement]) -> FormalSum:
    """Substitute every coordinate at once; each argument must stay in the
    admissible set (not 0, 1, or a pole), else PointNotAdmissible names the
    offender.  Order-independent by construction."""
    missing = [v for v in alpha.universe if v not in point]
    if missing:
        raise ValueError(f"point does not assign {missing}")
    out: dict[RationalFunction, Fraction] = {}
    for f, a in alpha.items():
        v = f.evaluate(point)
        if v is INF:
            raise PointNotAdmissible(f, "the denominator vanishes there")
        if v.is_zero():
            raise PointNotAdmissible(f, "the value is 0")
        if v.is_one():
            raise PointNotAdmissible(f, "the value is 1")
        key = RationalFunction.const((), v)
        out[key] = out.get(key, Fraction(0)) + a
    return FormalSum((), out, alpha.field_mode, alpha.coeff_mode)


def table_cell(
    x: RationalFunction, y: RationalFunction, step: SpecStep,
    field_mode: str = "Q", coeff_mode: str = "Z",
) -> tuple[ExtendedFormalSum, FormalSum]:
    """Specialize a five-term generator: the pre-correction extended sum
    and the corrected result.  Reproduces the degeneracy-case table rows."""
    rel = five_term(x, y, field_mode, coeff_mode)
    return naive_eval(rel, step.var, step.target), sp(rel, step)


def classify_value(f: RationalFunction, var: str, target) -> str:
    """The degeneracy class substitution lands in: '0', '1', 'inf', 'other'."""
    v = f.substitute(var, target)
    if v is INF:
        return "inf"
    if v.is_zero():
        return "0"
    if v.is_one():
        return "1"
    return "other"


def table_row(
    xcase: str, ycase: str,
    witnesses: tuple[RationalFunction, RationalFunction, SpecStep],
) -> FormalSum:
    """Corrected specialization of a five-term generator realizing the
    named degeneracy cell; rejects witnesses that land elsewhere."""
    x, y, step = witnesses
    got = (classify_value(x, step.var, step.target),
           classify_value(y, step.var, step.target))
    if got != (xcase, ycase):
        raise ValueError(
            f"witnesses realize cell {got}, not ({xcase!r}, {ycase!r})"
        )
    return sp(five_term(x, y), step)
