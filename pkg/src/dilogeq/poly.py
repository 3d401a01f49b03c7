"""Sparse multivariate polynomials over Q / Q(i), with exact gcd.

Representation: a fixed, ordered tuple of variable names (the "universe")
plus a dict mapping exponent tuples to nonzero FieldElement coefficients.
The monomial order everywhere is graded lexicographic (total degree first,
then lexicographic on the exponent tuple), which is multiplicative, so
leading terms of products are products of leading terms.

Normal form for extracted factors: "primitive monic" means the graded-lex
leading coefficient is 1; over a field that also fixes the content.  Every
unit removed during normalization is handed back to the caller so nothing
is lost.

The gcd is computed by a primitive polynomial-remainder sequence with
content recursion, fronted by a cheap certified coprimality test: after
substituting integers for all but the main variable (at a point where both
leading coefficients survive), a constant univariate gcd proves the
primitive parts coprime, because a nontrivial common factor would keep
positive degree in the image.  Random inputs are almost always coprime, so
this path dominates in practice; the PRS only runs when a common factor is
actually plausible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .scalars import FieldElement, ONE, ZERO, fe


Exponents = tuple[int, ...]


def _grlex(exp: Exponents):
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("universe", "terms", "_hash", "_canon")

    def __init__(self, universe: tuple[str, ...], terms: dict[Exponents, FieldElement]):
        self.universe = tuple(universe)
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}
        self._hash = None
        self._canon = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(universe) -> "MultiPoly":
        return MultiPoly(universe, {})

    @staticmethod
    def const(universe, c: FieldElement) -> "MultiPoly":
        n = len(universe)
        if c.is_zero():
            return MultiPoly(universe, {})
        return MultiPoly(universe, {(0,) * n: c})

    @staticmethod
    def one(universe) -> "MultiPoly":
        return MultiPoly.const(universe, ONE)

    @staticmethod
    def var(universe, name: str) -> "MultiPoly":
        universe = tuple(universe)
        idx = universe.index(name)
        exp = tuple(1 if i == idx else 0 for i in range(len(universe)))
        return MultiPoly(universe, {exp: ONE})

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_one(self) -> bool:
        return self.is_constant() and self.constant_value().is_one()

    def constant_value(self) -> FieldElement:
        if not self.terms:
            return ZERO
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        if not self.terms:
            return -1
        idx = self.universe.index(var)
        return max(e[idx] for e in self.terms)

    def vars_used(self) -> tuple[str, ...]:
        used = [False] * len(self.universe)
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return tuple(v for v, u in zip(self.universe, used) if u)

    def lead_term(self) -> tuple[Exponents, FieldElement]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def lead_coeff(self) -> FieldElement:
        return self.lead_term()[1]

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.universe != other.universe:
            raise ValueError(
                f"universe mismatch: {self.universe} vs {other.universe}"
            )

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return MultiPoly(self.universe, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            out[e] = -c if s is None else s - c
        return MultiPoly(self.universe, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.universe, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out: dict[Exponents, FieldElement] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return MultiPoly(self.universe, out)

    def mul_term(self, exp: Exponents, coeff: FieldElement) -> "MultiPoly":
        if coeff.is_zero():
            return MultiPoly.zero(self.universe)
        return MultiPoly(
            self.universe,
            {
                tuple(a + b for a, b in zip(e, exp)): c * coeff
                for e, c in self.terms.items()
            },
        )

    def scale(self, coeff: FieldElement) -> "MultiPoly":
        zero_exp = (0,) * len(self.universe)
        return self.mul_term(zero_exp, coeff)

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.one(self.universe)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def map_coeffs(self, fn: Callable[[FieldElement], FieldElement]) -> "MultiPoly":
        return MultiPoly(self.universe, {e: fn(c) for e, c in self.terms.items()})

    def conjugate_coeffs(self) -> "MultiPoly":
        return self.map_coeffs(lambda c: c.conjugate())

    def derivative(self, var: str) -> "MultiPoly":
        idx = self.universe.index(var)
        out: dict[Exponents, FieldElement] = {}
        for e, c in self.terms.items():
            k = e[idx]
            if k:
                ne = tuple(x - 1 if i == idx else x for i, x in enumerate(e))
                nc = c.scale(Fraction(k))
                s = out.get(ne)
                out[ne] = nc if s is None else s + nc
        return MultiPoly(self.universe, out)

    # -- equality / hashing / ordering ---------------------------------

    def _canonical(self):
        if self._canon is None:
            self._canon = tuple(sorted(self.terms.items(), key=lambda t: _grlex(t[0])))
        return self._canon

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.universe == other.universe and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.universe, self._canonical()))
        return self._hash

    def sort_key(self):
        return (
            self.total_degree(),
            tuple(
                (e, c.sort_key())
                for e, c in sorted(
                    self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True
                )
            ),
        )

    # -- views ----------------------------------------------------------

    def coeffs_in(self, var: str) -> dict[int, "MultiPoly"]:
        """View the polynomial in `var` with coefficients free of `var`."""
        idx = self.universe.index(var)
        out: dict[int, dict[Exponents, FieldElement]] = {}
        for e, c in self.terms.items():
            k = e[idx]
            ne = tuple(0 if i == idx else x for i, x in enumerate(e))
            out.setdefault(k, {})[ne] = c
        return {k: MultiPoly(self.universe, d) for k, d in out.items()}

    def lead_coeff_in(self, var: str) -> "MultiPoly":
        idx = self.universe.index(var)
        d = self.degree_in(var)
        out = {
            tuple(0 if i == idx else x for i, x in enumerate(e)): c
            for e, c in self.terms.items()
            if e[idx] == d
        }
        return MultiPoly(self.universe, out)

    def shift_var(self, var: str, k: int) -> "MultiPoly":
        """Multiply by var**k (k >= 0)."""
        idx = self.universe.index(var)
        return MultiPoly(
            self.universe,
            {
                tuple(x + k if i == idx else x for i, x in enumerate(e)): c
                for e, c in self.terms.items()
            },
        )

    # -- evaluation / substitution ---------------------------------------

    def partial_eval(self, assignment: dict[str, FieldElement]) -> "MultiPoly":
        """Substitute exact constants for a subset of the variables."""
        idxs = {self.universe.index(v): c for v, c in assignment.items()}
        out: dict[Exponents, FieldElement] = {}
        for e, c in self.terms.items():
            factor = c
            ne = list(e)
            for i, val in idxs.items():
                if e[i]:
                    factor = factor * (val ** e[i])
                    ne[i] = 0
            if factor.is_zero():
                continue
            key = tuple(ne)
            s = out.get(key)
            out[key] = factor if s is None else s + factor
        return MultiPoly(self.universe, out)

    def evaluate(self, assignment: dict[str, FieldElement]) -> FieldElement:
        r = self.partial_eval(assignment)
        return r.constant_value()

    def eval_numeric(self, point: dict[str, complex]) -> complex:
        total = 0j
        for e, c in self.terms.items():
            v = c.to_complex()
            for name, k in zip(self.universe, e):
                if k:
                    v *= point[name] ** k
            total += v
        return total

    def with_universe(self, new_universe: tuple[str, ...]) -> "MultiPoly":
        """Re-express over a different universe; dropped vars must be unused."""
        new_universe = tuple(new_universe)
        pos = {v: i for i, v in enumerate(new_universe)}
        n = len(new_universe)
        out: dict[Exponents, FieldElement] = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for name, k in zip(self.universe, e):
                if k:
                    if name not in pos:
                        raise ValueError(f"variable {name} still used")
                    ne[pos[name]] = k
            key = tuple(ne)
            s = out.get(key)
            out[key] = c if s is None else s + c
        return MultiPoly(new_universe, out)

    def rename_vars(self, mapping: dict[str, str]) -> "MultiPoly":
        """Permute variables within the same universe (an involution swap)."""
        perm = []
        for v in self.universe:
            w = mapping.get(v, v)
            if w not in self.universe:
                raise ValueError(f"renamed variable {w} not in universe")
            perm.append(self.universe.index(w))
        out: dict[Exponents, FieldElement] = {}
        for e, c in self.terms.items():
            ne = [0] * len(e)
            for i, k in enumerate(e):
                ne[perm[i]] = k
            out[tuple(ne)] = c
        return MultiPoly(self.universe, out)

    # -- normal forms -----------------------------------------------------

    def primitive_monic(self) -> tuple[FieldElement, "MultiPoly"]:
        """Split into (unit, monic) with unit * monic == self.

        The unit is the graded-lex leading coefficient; the monic part has
        leading coefficient 1.  Zero splits as (1, 0).
        """
        if not self.terms:
            return ONE, self
        lc = self.lead_coeff()
        if lc.is_one():
            return ONE, self
        inv = lc.inverse()
        return lc, self.map_coeffs(lambda c: c * inv)

    def divide_exact(self, divisor: "MultiPoly") -> "MultiPoly | None":
        """Exact quotient, or None when the division does not come out even."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if divisor.is_constant():
            return self.scale(divisor.constant_value().inverse())
        if self.is_zero():
            return self
        dexp, dc = divisor.lead_term()
        dcinv = dc.inverse()
        rem = self
        out: dict[Exponents, FieldElement] = {}
        while not rem.is_zero():
            nexp, nc = rem.lead_term()
            qe = tuple(a - b for a, b in zip(nexp, dexp))
            if any(x < 0 for x in qe):
                return None
            qc = nc * dcinv
            s = out.get(qe)
            out[qe] = qc if s is None else s + qc
            rem = rem - divisor.mul_term(qe, qc)
        return MultiPoly(self.universe, out)

    # -- display ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in sorted(self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True):
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}")
                for v, k in zip(self.universe, e)
                if k
            )
            pieces.append(_format_term(c, mono))
        text = pieces[0]
        for p in pieces[1:]:
            if p.startswith("-"):
                text += " - " + p[1:]
            else:
                text += " + " + p
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _coeff_str(c: FieldElement) -> str:
    """Render a coefficient; mixed Gaussian values get parenthesized."""
    if c.is_rational():
        return str(c.re)
    if not c.re:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{c.im}*i"
    return f"({c})"


def _format_term(c: FieldElement, mono: str) -> str:
    if not mono:
        return _coeff_str(c)
    if c.is_one():
        return mono
    if c.re == -1 and not c.im:
        return "-" + mono
    return _coeff_str(c) + "*" + mono


# ---------------------------------------------------------------------------
# univariate helpers (dense lists keyed by degree)
# ---------------------------------------------------------------------------


def _to_univar(p: MultiPoly, var: str) -> list[FieldElement]:
    idx = p.universe.index(var)
    deg = p.degree_in(var)
    out = [ZERO] * (deg + 1)
    for e, c in p.terms.items():
        for i, k in enumerate(e):
            if k and i != idx:
                raise ValueError("polynomial is not univariate in " + var)
        out[e[idx]] = out[e[idx]] + c
    return out


def _from_univar(universe, var: str, coeffs: list[FieldElement]) -> MultiPoly:
    universe = tuple(universe)
    idx = universe.index(var)
    terms = {}
    for k, c in enumerate(coeffs):
        if not c.is_zero():
            e = tuple(k if i == idx else 0 for i in range(len(universe)))
            terms[e] = c
    return MultiPoly(universe, terms)


def _uv_trim(a: list[FieldElement]) -> list[FieldElement]:
    while a and a[-1].is_zero():
        a.pop()
    return a


def _uv_divmod(a, b):
    """Dense univariate division over the field; b nonzero."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1].inverse()
    q = [ZERO] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        f = a[-1] * lb
        q[da - db] = f
        for i in range(db + 1):
            a[da - db + i] = a[da - db + i] - f * b[i]
        _uv_trim(a)
        if not a:
            break
    return q, a


def _uv_monic(a):
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def _uv_gcd(a, b):
    a, b = list(a), list(b)
    _uv_trim(a)
    _uv_trim(b)
    while b:
        _, r = _uv_divmod(a, b)
        a, b = b, _uv_trim(r)
    return _uv_monic(a)


def _uv_ext_gcd(a, b):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = _uv_trim(list(a)), _uv_trim(list(b))
    s0, s1 = [ONE], []
    t0, t1 = [], [ONE]

    def sub_mul(x, q, y):
        # x - q*y as dense lists
        prod = [ZERO] * (len(q) + len(y) - 1) if q and y else []
        for i, qc in enumerate(q):
            if qc.is_zero():
                continue
            for j, yc in enumerate(y):
                prod[i + j] = prod[i + j] + qc * yc
        out = list(x) + [ZERO] * max(0, len(prod) - len(x))
        for i, pc in enumerate(prod):
            out[i] = out[i] - pc
        return _uv_trim(out)

    while r1:
        q, r = _uv_divmod(r0, r1)
        r0, r1 = r1, _uv_trim(r)
        s0, s1 = s1, sub_mul(s0, q, s1)
        t0, t1 = t1, sub_mul(t0, q, t1)
    if not r0:
        return [], [], []
    inv = r0[-1].inverse()
    scale = lambda xs: [c * inv for c in xs]
    return _uv_monic(r0), scale(s0), scale(t0)


def univar_gcd(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    g = _uv_gcd(_to_univar(p, var), _to_univar(q, var))
    return _from_univar(p.universe, var, g)


def univar_rem(p: MultiPoly, m: MultiPoly, var: str) -> MultiPoly:
    _, r = _uv_divmod(_to_univar(p, var), _to_univar(m, var))
    return _from_univar(p.universe, var, r)


def univar_inverse_mod(p: MultiPoly, m: MultiPoly, var: str) -> MultiPoly:
    """Inverse of p modulo m; raises ValueError when gcd(p, m) != 1."""
    g, s, _ = _uv_ext_gcd(_to_univar(p, var), _to_univar(m, var))
    if len(g) != 1:
        raise ValueError("element not invertible modulo " + str(m))
    _, r = _uv_divmod(s, _to_univar(m, var))
    return _from_univar(p.universe, var, r)


# ---------------------------------------------------------------------------
# gcd
# ---------------------------------------------------------------------------

_EVAL_SEEDS = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _content_pp(p: MultiPoly, var: str) -> tuple[MultiPoly, MultiPoly]:
    """p = content * pp with content free of `var`, pp primitive in `var`."""
    coeffs = list(p.coeffs_in(var).values())
    cont = coeffs[0]
    for c in coeffs[1:]:
        if cont.is_constant():
            break
        cont = poly_gcd(cont, c)
    if cont.is_constant():
        one = MultiPoly.one(p.universe)
        return one, p
    _, cont = cont.primitive_monic()
    pp = p.divide_exact(cont)
    assert pp is not None
    return cont, pp


def _prem(a: MultiPoly, b: MultiPoly, var: str) -> MultiPoly:
    db = b.degree_in(var)
    lb = b.lead_coeff_in(var)
    idx = a.universe.index(var)
    n = len(a.universe)
    while not a.is_zero() and a.degree_in(var) >= db:
        da = a.degree_in(var)
        la = a.lead_coeff_in(var)
        shift = tuple((da - db) if i == idx else 0 for i in range(n))
        a = lb * a - (la * b).mul_term(shift, ONE)
    return a


def _certified_coprime(a: MultiPoly, b: MultiPoly, var: str) -> bool:
    """True only when a, b are provably coprime as primitive polys in var.

    Substitutes integers for the other variables at a point keeping both
    leading coefficients nonzero; a constant univariate gcd then certifies
    that no common factor of positive var-degree exists, and primitivity in
    var rules out var-free common factors.
    """
    others = sorted((set(a.vars_used()) | set(b.vars_used())) - {var})
    if not others:
        return False
    la = a.lead_coeff_in(var)
    lb = b.lead_coeff_in(var)
    for attempt in range(4):
        assignment = {
            v: fe(_EVAL_SEEDS[(i + attempt) % len(_EVAL_SEEDS)] + attempt)
            for i, v in enumerate(others)
        }
        if la.partial_eval(assignment).is_zero():
            continue
        if lb.partial_eval(assignment).is_zero():
            continue
        ua = a.partial_eval(assignment)
        ub = b.partial_eval(assignment)
        g = _uv_gcd(_to_univar(ua, var), _to_univar(ub, var))
        if len(g) == 1:
            return True
        return False
    return False


def _pp_gcd(a: MultiPoly, b: MultiPoly, var: str) -> MultiPoly:
    """gcd of two polynomials primitive in var, both of positive var-degree."""
    used = set(a.vars_used()) | set(b.vars_used())
    if used == {var}:
        return univar_gcd(a, b, var)
    if _certified_coprime(a, b, var):
        return MultiPoly.one(a.universe)
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    while not b.is_zero():
        r = _prem(a, b, var)
        if not r.is_zero():
            _, r = _content_pp(r, var)
            _, r = r.primitive_monic()
        a, b = b, r
    if a.degree_in(var) == 0:
        return MultiPoly.one(a.universe)
    _, a = _content_pp(a, var)
    _, a = a.primitive_monic()
    return a


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Monic gcd; gcd(0, q) is the monic normal form of q."""
    if p.is_zero():
        return q.primitive_monic()[1]
    if q.is_zero():
        return p.primitive_monic()[1]
    if p.is_constant() or q.is_constant():
        return MultiPoly.one(p.universe)
    if p == q:
        return p.primitive_monic()[1]
    pv, qv = set(p.vars_used()), set(q.vars_used())
    var = next(v for v in p.universe if v in pv or v in qv)
    if var not in pv:
        cont, _ = _content_pp(q, var)
        return poly_gcd(p, cont)
    if var not in qv:
        cont, _ = _content_pp(p, var)
        return poly_gcd(cont, q)
    cp, ap = _content_pp(p, var)
    cq, aq = _content_pp(q, var)
    cg = poly_gcd(cp, cq)
    g = _pp_gcd(ap, aq, var)
    return (cg * g).primitive_monic()[1]


def gcd_many(polys: Iterable[MultiPoly]) -> MultiPoly:
    it = iter(polys)
    try:
        g = next(it)
    except StopIteration:
        raise ValueError("gcd of an empty collection")
    g = g.primitive_monic()[1]
    for p in it:
        if g.is_one():
            break
        g = poly_gcd(g, p)
    return g


def squarefree_parts(p: MultiPoly) -> list[tuple[MultiPoly, int]]:
    """Decompose a nonconstant p as unit * prod g_k^k.

    The g_k are monic, squarefree, pairwise coprime (characteristic-zero
    Musser loop, using the gcd of p with all its partial derivatives).
    """
    _, p = p.primitive_monic()
    if p.is_constant():
        return []
    g = p
    for v in p.vars_used():
        if g.is_constant():
            break
        g = poly_gcd(g, p.derivative(v))
    if g.is_constant():
        return [(p, 1)]
    b = p.divide_exact(g)
    assert b is not None
    _, b = b.primitive_monic()
    a = g
    out: list[tuple[MultiPoly, int]] = []
    k = 1
    while not b.is_constant():
        c = poly_gcd(a, b)
        part = b.divide_exact(c)
        assert part is not None
        _, part = part.primitive_monic()
        if not part.is_constant():
            out.append((part, k))
        b = c
        an = a.divide_exact(c)
        assert an is not None
        _, a = an.primitive_monic()
        k += 1
    return out
