"""The antisymmetrized square of the multiplicative group, and the boundary
map deciding constancy of dilogarithm sums.

An element of A (x) wedge^2 F* is kept two ways: as the raw list of tensors
a * (f /\ g) it was built from (so elements can be subtracted and compared
exactly), and as a normal form over a joint GCD-free basis.  The normal form
has three layers:

  beta1: coefficients on pairs (b_i, b_j), i < j, of distinct non-constant
         basis elements (antisymmetry folds the other order in with a sign);
  beta2: per non-constant basis element, a column of exact constants: one
         coefficient per prime, plus a torsion unit component (the pairing
         with -1 in rational mode, with i in Gaussian mode);
  beta3: the constant-constant part: prime pairs, per-prime unit components,
         and in rational Z-mode the (-1) /\ (-1) bit.

Identities used (all derived from the defining relation (-x) (x) x = 0):
  antisymmetry  f /\ g = -(g /\ f)
  diagonal      f /\ f = f /\ (-1); over Q(i), -1 = i^2 so this is 2 (f /\ i)
  torsion       b /\ (-1) has order 2, b /\ i has order 4, i /\ i = 0
so unit components are stored mod 2 (rational) or mod 4 (Gaussian) when
coefficients are in Z, and vanish identically when coefficients are in Q.

The constancy criterion: a formal sum has constant dilogarithm (in the
Bloch-Wigner, Rogers, or p-adic sense, under the matching admissibility of
its arguments) exactly when beta1 and beta2 of its boundary vanish; beta3 is
the constant residue living in A (x) wedge^2 k*.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coprime import CoprimeBasis
from .formal import FormalSum, conj_sum
from .poly import MultiPoly, univar_inverse_mod, univar_rem
from .primes import DEFAULT_FACTOR_BOUND, factor_constant
from .ratfunc import INF, RationalFunction
from .scalars import FieldElement, ONE


class UnknownBasisElement(KeyError):
    pass


class NotUnivariate(ValueError):
    pass


class UnpairedVariables(ValueError):
    pass


Tensor = tuple[Fraction, RationalFunction, RationalFunction]


def _unit_modulus(field_mode: str) -> int:
    return 4 if field_mode == "Qi" else 2


class WedgeElement:
    """a1 (f1 /\ g1) + ... in normal form over a joint coprime basis."""

    __slots__ = (
        "universe",
        "field_mode",
        "coeff_mode",
        "tensors",
        "basis",
        "beta1",
        "beta2_primes",
        "beta2_unit",
        "beta3_pairs",
        "beta3_units",
        "beta3_unit_unit",
    )

    def __init__(self, universe, tensors, field_mode="Q", coeff_mode="Z",
                 factor_bound=DEFAULT_FACTOR_BOUND):
        self.universe = tuple(universe)
        self.field_mode = field_mode
        self.coeff_mode = coeff_mode
        self.tensors = tuple(
            (Fraction(a), f, g) for a, f, g in tensors if Fraction(a)
        )
        for _, f, g in self.tensors:
            if f.is_zero() or g.is_zero():
                raise ValueError("wedge arguments must be nonzero")
        self._normalize(factor_bound)

    # -- normal form -------------------------------------------------------

    def _normalize(self, factor_bound):
        gaussian = self.field_mode == "Qi"
        basis = CoprimeBasis(self.universe)
        for _, f, g in self.tensors:
            basis.add(f.num)
            basis.add(f.den)
            basis.add(g.num)
            basis.add(g.den)
        basis.freeze()
        self.basis = basis

        beta1: dict[tuple[int, int], Fraction] = {}
        b2p: dict[int, dict[FieldElement, Fraction]] = {}
        b2u: dict[int, Fraction] = {}
        b3p: dict[tuple[FieldElement, FieldElement], Fraction] = {}
        b3u: dict[FieldElement, Fraction] = {}
        b3uu = Fraction(0)

        def add_beta1(i, j, val):
            if i == j or not val:
                return
            if i < j:
                key, v = (i, j), val
            else:
                key, v = (j, i), -val
            beta1[key] = beta1.get(key, Fraction(0)) + v

        def add_b2_prime(i, p, val):
            if val:
                col = b2p.setdefault(i, {})
                col[p] = col.get(p, Fraction(0)) + val

        def add_b2_unit(i, val):
            if val:
                b2u[i] = b2u.get(i, Fraction(0)) + val

        def add_b3_pair(p, q, val):
            if p == q or not val:
                return
            kp, kq = _prime_key(p), _prime_key(q)
            if kp < kq:
                key, v = (p, q), val
            else:
                key, v = (q, p), -val
            b3p[key] = b3p.get(key, Fraction(0)) + v

        def add_b3_unit(p, val):
            if val:
                b3u[p] = b3u.get(p, Fraction(0)) + val

        diag_unit = Fraction(2 if gaussian else 1)

        for a, f, g in self.tensors:
            uf, ef = basis.factor_rf(f)
            ug, eg = basis.factor_rf(g)
            facf = factor_constant(uf, gaussian, factor_bound)
            facg = factor_constant(ug, gaussian, factor_bound)

            # basis /\ basis
            for i, mi in ef.items():
                for j, nj in eg.items():
                    if i == j:
                        add_b2_unit(i, a * mi * nj * diag_unit)
                    else:
                        add_beta1(i, j, a * mi * nj)
            # basis /\ constant and constant /\ basis
            for i, mi in ef.items():
                for p, e in facg.factors:
                    add_b2_prime(i, p, a * mi * e)
                add_b2_unit(i, a * mi * facg.unit_exponent)
            for j, nj in eg.items():
                for p, e in facf.factors:
                    add_b2_prime(j, p, -a * nj * e)
                add_b2_unit(j, -a * nj * facf.unit_exponent)
            # constant /\ constant
            for p, dp in facf.factors:
                for q, eq in facg.factors:
                    if p == q:
                        add_b3_unit(p, a * dp * eq * diag_unit)
                    else:
                        add_b3_pair(p, q, a * dp * eq)
            for p, dp in facf.factors:
                add_b3_unit(p, a * dp * facg.unit_exponent)
            for q, eq in facg.factors:
                add_b3_unit(q, -a * eq * facf.unit_exponent)
            if not gaussian:
                b3uu += a * facf.unit_exponent * facg.unit_exponent
            # over Q(i) the unit /\ unit part is i /\ i = 0

        m = _unit_modulus(self.field_mode)
        self.beta1 = {k: v for k, v in beta1.items() if v}
        self.beta2_primes = {}
        for i, col in b2p.items():
            cleaned = {p: v for p, v in col.items() if v}
            if cleaned:
                self.beta2_primes[i] = cleaned
        self.beta2_unit = _reduce_units(b2u, self.coeff_mode, m)
        self.beta3_pairs = {k: v for k, v in b3p.items() if v}
        self.beta3_units = _reduce_units(b3u, self.coeff_mode, m)
        self.beta3_unit_unit = (
            _reduce_one(b3uu, self.coeff_mode, 2) if not gaussian else Fraction(0)
        )

    # -- predicates and views ------------------------------------------------

    def beta1_is_zero(self) -> bool:
        return not self.beta1

    def beta2_is_zero(self) -> bool:
        return not self.beta2_primes and not self.beta2_unit

    def beta3_is_zero(self) -> bool:
        return (
            not self.beta3_pairs
            and not self.beta3_units
            and not self.beta3_unit_unit
        )

    def is_zero(self) -> bool:
        return self.beta1_is_zero() and self.beta2_is_zero() and self.beta3_is_zero()

    def __sub__(self, other: "WedgeElement") -> "WedgeElement":
        if (
            self.universe != other.universe
            or self.field_mode != other.field_mode
            or self.coeff_mode != other.coeff_mode
        ):
            raise ValueError("wedge elements live over different settings")
        negated = tuple((-a, f, g) for a, f, g in other.tensors)
        return WedgeElement(
            self.universe, self.tensors + negated, self.field_mode, self.coeff_mode
        )

    def decompose(self):
        """(beta1, beta2, beta3) as plain printable dictionaries."""
        els = self.basis.elements
        unit_label = "i" if self.field_mode == "Qi" else "-1"
        beta1 = {
            (str(els[i]), str(els[j])): v
            for (i, j), v in sorted(self.beta1.items())
        }
        beta2 = {}
        for i in sorted(set(self.beta2_primes) | set(self.beta2_unit)):
            col = {
                str(p): v
                for p, v in sorted(
                    self.beta2_primes.get(i, {}).items(),
                    key=lambda t: _prime_key(t[0]),
                )
            }
            u = self.beta2_unit.get(i, Fraction(0))
            if u:
                col[unit_label] = u
            beta2[str(els[i])] = col
        beta3 = {
            "pairs": {
                (str(p), str(q)): v
                for (p, q), v in sorted(
                    self.beta3_pairs.items(),
                    key=lambda t: (_prime_key(t[0][0]), _prime_key(t[0][1])),
                )
            },
            "units": {
                str(p): v
                for p, v in sorted(
                    self.beta3_units.items(), key=lambda t: _prime_key(t[0])
                )
            },
            "unit_unit": self.beta3_unit_unit,
        }
        return beta1, beta2, beta3

    def first_obstruction(self):
        """The first nonzero beta1/beta2 entry in canonical order, or None."""
        for (i, j), v in sorted(self.beta1.items()):
            return ("pair", self.basis.elements[i], self.basis.elements[j], v)
        unit_label = "i" if self.field_mode == "Qi" else "-1"
        for i in sorted(set(self.beta2_primes) | set(self.beta2_unit)):
            for p, v in sorted(
                self.beta2_primes.get(i, {}).items(), key=lambda t: _prime_key(t[0])
            ):
                return ("column", self.basis.elements[i], str(p), v)
            u = self.beta2_unit.get(i, Fraction(0))
            if u:
                return ("column", self.basis.elements[i], unit_label, u)
        return None

    def __str__(self):
        b1, b2, b3 = self.decompose()
        return f"WedgeElement(beta1={b1}, beta2={b2}, beta3={b3})"

    __repr__ = __str__


def _prime_key(p: FieldElement):
    return (p.norm(), p.sort_key())


def _reduce_units(cols: dict, coeff_mode: str, modulus: int) -> dict:
    out = {}
    for k, v in cols.items():
        r = _reduce_one(v, coeff_mode, modulus)
        if r:
            out[k] = r
    return out


def _reduce_one(v: Fraction, coeff_mode: str, modulus: int) -> Fraction:
    if coeff_mode == "Q":
        return Fraction(0)
    assert v.denominator == 1
    return Fraction(v.numerator % modulus)


# ---------------------------------------------------------------------------
# the boundary map and constancy certificates
# ---------------------------------------------------------------------------


def boundary(alpha: FormalSum, factor_bound=DEFAULT_FACTOR_BOUND) -> WedgeElement:
    """d[f] = f /\ (1 - f), extended A-linearly."""
    tensors = [(a, f, f.one_minus()) for f, a in alpha.items()]
    return WedgeElement(
        alpha.universe, tensors, alpha.field_mode, alpha.coeff_mode, factor_bound
    )


@dataclass(frozen=True)
class ConstancyCertificate:
    verdict: str  # "Constant" | "NotConstant"
    witness: tuple | None
    residual_beta3: dict
    constant_value: complex | str | None = None
    constant_error: float | None = None
    notes: tuple[str, ...] = ()

    def is_constant(self) -> bool:
        return self.verdict == "Constant"


def _certificate(w: WedgeElement) -> ConstancyCertificate:
    _, _, b3 = w.decompose()
    if w.beta1_is_zero() and w.beta2_is_zero():
        return ConstancyCertificate("Constant", None, b3)
    obs = w.first_obstruction()
    assert obs is not None
    return ConstancyCertificate("NotConstant", obs, b3)


def check_constant(alpha: FormalSum) -> ConstancyCertificate:
    """Is the (Bloch-Wigner / Rogers / p-adic) dilogarithm of alpha constant?

    The symbolic criterion is the same for all three interpretations: the
    boundary's beta1 and beta2 must vanish.  Which numeric reading applies
    is a matter of where the arguments are admissible.
    """
    return _certificate(boundary(alpha))


def check_constant_real(alpha: FormalSum) -> ConstancyCertificate:
    """Constancy of the Bloch-Wigner dilogarithm on the real locus.

    Tests alpha minus its coefficientwise conjugate: D kills the conjugate
    on real points, so only the antisymmetric part has to be constant.
    """
    diff = alpha - conj_sum(alpha)
    return _certificate(boundary(diff))


def check_constant_cc(alpha: FormalSum, var_swap: dict[str, str]) -> ConstancyCertificate:
    """Constancy on the locus where paired variables are complex conjugates.

    The universe must be fully matched into pairs (z, zbar) by var_swap;
    treating the pairs as independent coordinates, the criterion is the
    beta-test on alpha minus its conjugate (coefficients conjugated too,
    paired variables swapped).
    """
    full = dict(var_swap)
    for a, b in list(var_swap.items()):
        full.setdefault(b, a)
    names = set(alpha.universe)
    covered = set(full) | set(full.values())
    if covered != names or any(full.get(full.get(v)) != v for v in full):
        raise UnpairedVariables(
            f"variable pairing {var_swap} does not match universe {alpha.universe}"
        )
    if any(full[v] == v for v in full):
        raise UnpairedVariables("a variable cannot pair with itself")
    diff = alpha - conj_sum(alpha, full)
    return _certificate(boundary(diff))


# ---------------------------------------------------------------------------
# valuation pairings
# ---------------------------------------------------------------------------


def t_pair(w: WedgeElement, b: MultiPoly, bprime: MultiPoly) -> Fraction:
    """The beta1 pairing against the double valuation at (b, b')."""
    i = w.basis.index_of(b)
    j = w.basis.index_of(bprime)
    if i is None:
        raise UnknownBasisElement(str(b))
    if j is None:
        raise UnknownBasisElement(str(bprime))
    if i == j:
        raise ValueError("t_pair needs two distinct basis elements")
    if i < j:
        return w.beta1.get((i, j), Fraction(0))
    return -w.beta1.get((j, i), Fraction(0))


def t_v(w: WedgeElement, b: MultiPoly) -> MultiPoly:
    """Tame symbol at the place of a univariate basis poly b.

    f /\ g maps to (-1)^{v(f)v(g)} f^{v(g)} g^{-v(f)} in (k[t]/(b))*,
    multiplied over the stored tensors.  Returns the reduced representative.
    """
    used = set(b.vars_used())
    for _, f, g in w.tensors:
        used |= set(f.vars_used()) | set(g.vars_used())
    if len(used) != 1:
        raise NotUnivariate(f"tame symbols need one variable, saw {sorted(used)}")
    var = next(iter(used))
    if b.is_constant():
        raise ValueError("the place must be a non-constant polynomial")
    basis = CoprimeBasis(w.universe)
    basis.add(b)
    for _, f, g in w.tensors:
        basis.add(f.num)
        basis.add(f.den)
        basis.add(g.num)
        basis.add(g.den)
    basis.freeze()
    ib = basis.index_of(b.primitive_monic()[1])
    if ib is None:
        raise UnknownBasisElement(
            f"{b} splits further over the joint basis; valuation is ambiguous"
        )

    def rf_residue(unit: FieldElement, exps: dict[int, int]) -> MultiPoly:
        res = MultiPoly.const(w.universe, unit)
        for k, e in exps.items():
            if k == ib:
                continue
            res = univar_rem(res * _pow_mod(basis.elements[k], e, b, var), b, var)
        return univar_rem(res, b, var)

    def _pow_mod(base: MultiPoly, e: int, mod: MultiPoly, var: str) -> MultiPoly:
        if e < 0:
            base = univar_inverse_mod(base, mod, var)
            e = -e
        out = MultiPoly.one(w.universe)
        base = univar_rem(base, mod, var)
        while e:
            if e & 1:
                out = univar_rem(out * base, mod, var)
            base = univar_rem(base * base, mod, var)
            e >>= 1
        return out

    total = MultiPoly.one(w.universe)
    for a, f, g in w.tensors:
        if a.denominator != 1:
            raise ValueError("tame symbols need integer coefficients")
        uf, ef = basis.factor_rf(f)
        ug, eg = basis.factor_rf(g)
        vf = ef.get(ib, 0)
        vg = eg.get(ib, 0)
        sign = ONE if (vf * vg) % 2 == 0 else -ONE
        contrib = MultiPoly.const(w.universe, sign)
        contrib = univar_rem(contrib * _pow_mod(rf_residue(uf, ef), vg, b, var), b, var)
        contrib = univar_rem(contrib * _pow_mod(rf_residue(ug, eg), -vf, b, var), b, var)
        total = univar_rem(total * _pow_mod(contrib, int(a), b, var), b, var)
    return total


# ---------------------------------------------------------------------------
# specialization on the wedge side
# ---------------------------------------------------------------------------


def wedge_specialize(w: WedgeElement, var: str, target) -> WedgeElement:
    """Push a wedge element along t -> target, normalizing with pi = t - b
    (finite b) or pi = 1/t (b = inf): each generator f maps to the value of
    pi^{-ord(f)} f at the target, which is a well-defined nonzero function
    of the remaining variables.
    """
    new_universe = tuple(v for v in w.universe if v != var)
    tensors = []
    for a, f, g in w.tensors:
        sf = _sp_generator(f, var, target)
        sg = _sp_generator(g, var, target)
        tensors.append((a, sf.with_universe(new_universe), sg.with_universe(new_universe)))
    return WedgeElement(new_universe, tensors, w.field_mode, w.coeff_mode)


def _sp_generator(f: RationalFunction, var: str, target) -> RationalFunction:
    if target is INF:
        # pi = 1/t strips the pole order, leaving the top-coefficient ratio
        return RationalFunction(f.num.lead_coeff_in(var), f.den.lead_coeff_in(var))
    if isinstance(target, FieldElement):
        target = RationalFunction.const(f.universe, target)
    if var in target.vars_used():
        raise ValueError(f"target must not involve {var}")
    # pi-tilde = den_b * t - num_b, a t-degree-1 poly; pi = pi-tilde / den_b
    tvar = MultiPoly.var(f.universe, var)
    pit = target.den * tvar - target.num
    kn, n0 = _strip(f.num, pit)
    kd, d0 = _strip(f.den, pit)
    ord_f = kn - kd
    stripped = RationalFunction(n0, d0)
    value = stripped.substitute(var, target)
    assert value is not INF and not value.is_zero()
    if ord_f:
        db = RationalFunction.from_poly(target.den)
        value = value * db**ord_f
    return value


def _strip(p: MultiPoly, pit: MultiPoly) -> tuple[int, MultiPoly]:
    k = 0
    while True:
        q = p.divide_exact(pit)
        if q is None:
            return k, p
        p = q
        k += 1
