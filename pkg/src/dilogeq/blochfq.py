"""Pre-Bloch and modified Bloch groups of small prime fields.

Everything is finite and exact: the generators are the field elements
F_p \\ {0, 1}, the relations are the five-term rows and inversion rows
evaluated in F_p, and group structure falls out of integer Smith and
Hermite normal forms.

The wedge square of F_p* is presented mechanically: F_p* is cyclic of
order m = p-1, its tensor square is Z/m via g^a (x) g^b -> a*b, and the
subgroup generated by (-x) (x) x is computed by direct enumeration.  No
closed-form description of the quotient is assumed anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .intmat import (
    HermiteForm,
    hnf,
    left_kernel,
    smith_invariant_factors,
    solve_integer,
)


class PrimeTooSmall(ValueError):
    """The construction needs at least four field elements, so p >= 5."""


def _require_prime(p: int):
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"{p!r} is not a prime")
    k = 2
    while k * k <= p:
        if p % k == 0:
            raise ValueError(f"{p} is not a prime")
        k += 1
    if p < 5:
        raise PrimeTooSmall(f"need p >= 5, got {p}")


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Generators F_p minus {0, 1} and integer relation rows over them."""

    p: int
    generators: tuple[int, ...]
    five_rows: tuple[tuple[int, ...], ...]
    inversion_rows: tuple[tuple[int, ...], ...]

    @property
    def relations(self) -> tuple[tuple[int, ...], ...]:
        return self.five_rows + self.inversion_rows

    def index_of(self, x: int) -> int:
        # generators are 2..p-1 in order
        if not 2 <= x < self.p:
            raise KeyError(x)
        return x - 2


@dataclass(frozen=True)
class InvariantFactors:
    """Divisibility chain d1 | d2 | ...; a trailing 0 is a free Z factor."""

    factors: tuple[int, ...]

    def __post_init__(self):
        nz = [f for f in self.factors if f != 0]
        assert all(f > 1 for f in nz), "trivial factors must be dropped"
        assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
        assert all(f == 0 for f in self.factors[len(nz):])

    @property
    def order(self) -> int:
        """Group order, or 0 when there is a free factor."""
        out = 1
        for f in self.factors:
            if f == 0:
                return 0
            out *= f
        return out

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return " + ".join("Z" if f == 0 else f"Z/{f}" for f in self.factors)


def _pack_factors(raw: list[int], ambient_rank: int) -> InvariantFactors:
    free = ambient_rank - len(raw)
    return InvariantFactors(tuple([f for f in raw if f > 1] + [0] * free))


def relations_matrix(p: int) -> AbelianGroupPresentation:
    """All five-term rows over ordered pairs x != y, plus all inversion rows.

    Over a prime field every ordered pair of distinct generators is
    admissible: each of the five arguments stays outside {0, 1} exactly
    because x, y are outside {0, 1} and distinct.
    """
    _require_prime(p)
    gens = tuple(range(2, p))
    n = len(gens)

    def inv(a: int) -> int:
        return pow(a, -1, p)

    five = []
    for x in gens:
        for y in gens:
            if x == y:
                continue
            row = [0] * n
            for val, coef in (
                (x, 1),
                (y, -1),
                (y * inv(x) % p, 1),
                ((1 - x) * inv(1 - y) % p, 1),
                ((1 - inv(x)) * inv(1 - inv(y)) % p, -1),
            ):
                row[val - 2] += coef
            five.append(tuple(row))

    inversion = []
    for x in gens:
        row = [0] * n
        row[x - 2] += 1
        row[inv(x) - 2] += 1
        inversion.append(tuple(row))

    return AbelianGroupPresentation(p, gens, tuple(five), tuple(inversion))


def wedge_square_order(p: int) -> tuple[int, int]:
    """(m, d) with F_p* of order m and the wedge square presented as Z/d.

    The tensor square of a cyclic group of order m is Z/m via
    g^a (x) g^b -> a*b; killing (-x) (x) x kills a*(a + m/2) for every a,
    since -1 = g^(m/2).
    """
    _require_prime(p)
    m = p - 1
    h = m // 2
    d = m
    for a in range(m):
        d = gcd(d, a * (a + h) % m)
    return m, d


def _primitive_root(p: int) -> int:
    m = p - 1
    prime_parts = []
    q, k = m, 2
    while k * k <= q:
        if q % k == 0:
            prime_parts.append(k)
            while q % k == 0:
                q //= k
        k += 1
    if q > 1:
        prime_parts.append(q)
    for g in range(2, p):
        if all(pow(g, m // q, p) != 1 for q in prime_parts):
            return g
    raise AssertionError("no primitive root found; p is not prime")


def boundary_vector(p: int) -> tuple[int, list[int]]:
    """(d, w) with w[i] the image of generator x_i under [x] -> x /\\ (1-x),
    as an element of the wedge square Z/d."""
    m, d = wedge_square_order(p)
    g = _primitive_root(p)
    dlog = {pow(g, k, p): k for k in range(m)}
    w = []
    for x in range(2, p):
        # 1-x mod p stays outside {0, 1} for x outside {0, 1}
        w.append(dlog[x] * dlog[(1 - x) % p] % d if d else dlog[x] * dlog[(1 - x) % p])
    return d, w


def kernel_lattice(p: int) -> list[list[int]]:
    """HNF basis of ker(boundary) inside Z^(p-2).

    The kernel is {v : sum v_i w_i = 0 mod d}, a full-rank sublattice; it
    is the projection of the integer kernel of the column (w_1..w_n, d).
    """
    d, w = boundary_vector(p)
    n = len(w)
    if d == 0:
        raise AssertionError("wedge square of a finite field is finite")
    rows = [[wi] for wi in w] + [[d]]
    proj = [b[:n] for b in left_kernel(rows)]
    basis = hnf(proj, n)
    assert len(basis) == n, "kernel of a map to a finite group has full rank"
    return basis


def pre_bloch(p: int, include_inversion: bool = True) -> InvariantFactors:
    """Invariant factors of Z[F_p_flat] modulo the relation rows."""
    pres = relations_matrix(p)
    rows = pres.relations if include_inversion else pres.five_rows
    n = len(pres.generators)
    raw = smith_invariant_factors([list(r) for r in rows], n)
    return _pack_factors(raw, n)


def modified_bloch(p: int) -> InvariantFactors:
    """Invariant factors of ker(boundary) modulo the relation lattice.

    Every relation row must land inside the kernel (the boundary kills
    five-term and inversion rows); a row that does not is a hard error.
    """
    pres = relations_matrix(p)
    basis = kernel_lattice(p)
    n = len(pres.generators)
    coords = []
    for row in pres.relations:
        x = solve_integer(basis, list(row))
        if x is None:
            raise AssertionError(f"relation row {row} falls outside ker(boundary)")
        coords.append(x)
    raw = smith_invariant_factors(coords, n)
    return _pack_factors(raw, n)


@dataclass(frozen=True)
class CElementReport:
    p: int
    class_independent_of_c: bool
    three_c_in_relations: bool
    c_values_checked: int

    @property
    def all_pass(self) -> bool:
        return self.class_independent_of_c and self.three_c_in_relations


def check_c_facts(p: int) -> CElementReport:
    """Exact span-membership checks for the [c] + [1-c] classes.

    First: the class of [c] + [1-c] modulo the five-term rows does not
    depend on c.  Checked against a fixed base point; equality against the
    base for every c gives all pairs by transitivity.  Second: three times
    the class dies modulo the full relation set.
    """
    pres = relations_matrix(p)
    n = len(pres.generators)

    five_span = HermiteForm(n)
    for row in pres.five_rows:
        five_span.insert(list(row))
    full_span = HermiteForm(n)
    for row in pres.relations:
        full_span.insert(list(row))

    def c_vec(c: int) -> list[int]:
        row = [0] * n
        row[c - 2] += 1
        row[(1 - c) % p - 2] += 1
        return row

    base = c_vec(2)
    indep = True
    three = True
    for c in pres.generators:
        vc = c_vec(c)
        if not five_span.contains([a - b for a, b in zip(vc, base)]):
            indep = False
        if not full_span.contains([3 * a for a in vc]):
            three = False
    return CElementReport(p, indep, three, len(pres.generators))
