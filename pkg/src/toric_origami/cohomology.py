"""Equivariant class spaces of a moment graph, over exact rationals.

A degree-d class assigns to every fixed point a homogeneous degree-d
polynomial in n variables such that along every graph edge the two
endpoint polynomials differ by a multiple of the edge weight (a linear
form).  This module computes the dimensions of those spaces (the Hilbert
function), derives even Betti numbers from them under the freeness
recursion, decides membership of explicit tuples with exact division,
and locates the degrees where new generators appear.

All linear algebra is over `fractions.Fraction`; divisibility tests are
exact polynomial division, never numerical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exceptions import FreenessViolation, InternalConsistency, ShapeError
from .gkm import MomentGraph
from .lattice import kernel_basis, kernel_dimension, rank


@lru_cache(maxsize=None)
def monomial_basis(variables: int, degree: int) -> tuple:
    """Exponent tuples of the degree-d monomials in n variables, lex-descending."""
    if variables < 0 or degree < 0:
        raise ShapeError("variables and degree must be nonnegative")
    if variables == 0:
        return ((),) if degree == 0 else ()
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), degree, variables)
    return tuple(out)


@dataclass(frozen=True)
class GradedPolySpace:
    """The space of homogeneous degree-d polynomials in n variables."""

    variables: int
    degree: int

    def __post_init__(self):
        if self.variables < 0 or self.degree < 0:
            raise ShapeError("variables and degree must be nonnegative")

    @property
    def basis(self) -> tuple:
        return monomial_basis(self.variables, self.degree)

    @property
    def dimension(self) -> int:
        if self.variables == 0:
            return 1 if self.degree == 0 else 0
        return math.comb(self.variables + self.degree - 1, self.variables - 1)

    def __len__(self):
        return self.dimension


@dataclass(frozen=True)
class HilbertFunction:
    """Class-space dimensions h_0, h_1, ..., h_D of a moment graph."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def __getitem__(self, d):
        return self.values[d]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __str__(self):
        return " ".join(f"h{d}={v}" for d, v in enumerate(self.values))


@dataclass(frozen=True)
class BettiVector:
    """Even Betti numbers b_0, b_2, ..., b_{2n}; entry i is b_{2i}."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)

    def __str__(self):
        return " ".join(f"b{2 * i}={v}" for i, v in enumerate(self.values))


@dataclass(frozen=True)
class ClassTuple:
    """A candidate class: one coefficient vector per fixed point.

    Coefficients are read against `monomial_basis(n, degree)` in order.
    """

    degree: int
    coefficients: tuple

    def __post_init__(self):
        if self.degree < 0:
            raise ShapeError("class degree must be nonnegative")
        coeffs = tuple(
            tuple(Fraction(c) for c in vec) for vec in self.coefficients
        )
        object.__setattr__(self, "coefficients", coeffs)


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of a membership check.

    On success `quotients` holds, per graph edge, the exact polynomial
    quotient (an exponent-tuple -> Fraction mapping) of the endpoint
    difference by the edge weight.  On failure `violating_edge` is the
    first edge whose divisibility fails.
    """

    ok: bool
    quotients: tuple | None
    violating_edge: object | None
    violating_index: int | None

    def __bool__(self):
        return self.ok


def _unit_exponent(n, j):
    return tuple(1 if i == j else 0 for i in range(n))


def _poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            c = out.get(e, Fraction(0)) + c1 * c2
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def _poly_sub(p, q):
    out = dict(p)
    for e, c in q.items():
        r = out.get(e, Fraction(0)) - c
        if r:
            out[e] = r
        elif e in out:
            del out[e]
    return out


def _pivot_index(alpha):
    for i, c in enumerate(alpha):
        if c:
            return i
    raise InternalConsistency("edge weight is the zero vector")


def _substitution_image(mono, k0, alpha):
    """Image of x^mono under x_k0 -> -(sum_{j != k0} alpha_j x_j) / alpha_k0."""
    n = len(alpha)
    rest = mono[:k0] + (0,) + mono[k0 + 1 :]
    acc = {rest: Fraction(1)}
    if mono[k0]:
        sub = {
            _unit_exponent(n, j): Fraction(-alpha[j], alpha[k0])
            for j in range(n)
            if j != k0 and alpha[j]
        }
        power = {tuple([0] * n): Fraction(1)}
        for _ in range(mono[k0]):
            power = _poly_mul(power, sub)
        acc = _poly_mul(acc, power)
    return acc


def _endpoint_indices(g: MomentGraph):
    index = {fp: i for i, fp in enumerate(g.fixed_points)}
    out = []
    for e in g.edges:
        a, b = e.endpoints
        if a not in index or b not in index:
            raise InternalConsistency("edge endpoint is not among the fixed points")
        if len(e.weight) != g.dimension:
            raise ShapeError(
                f"edge weight has {len(e.weight)} entries in rank-{g.dimension} graph"
            )
        out.append((index[a], index[b], e))
    return out


def _constraint_rows(g: MomentGraph, degree: int):
    """Rows of the divisibility system over unknowns (fixed point, monomial)."""
    n = g.dimension
    basis = monomial_basis(n, degree)
    block = len(basis)
    ncols = len(g.fixed_points) * block
    rows = []
    if ncols == 0:
        return rows, ncols
    for pi, qi, e in _endpoint_indices(g):
        k0 = _pivot_index(e.weight)
        images = [_substitution_image(m, k0, e.weight) for m in basis]
        residues = [m for m in basis if m[k0] == 0]
        for rm in residues:
            row = [Fraction(0)] * ncols
            hit = False
            for j, img in enumerate(images):
                c = img.get(rm)
                if c:
                    row[pi * block + j] += c
                    row[qi * block + j] -= c
                    hit = True
            if hit:
                rows.append(row)
    return rows, ncols


def gkm_dimension(g: MomentGraph, degree: int) -> int:
    """Dimension of the degree-d class space of a moment graph."""
    if degree < 0:
        raise ShapeError("degree must be nonnegative")
    rows, ncols = _constraint_rows(g, degree)
    if ncols == 0:
        return 0
    return kernel_dimension(rows, ncols)


def hilbert_function(g: MomentGraph, max_degree: int) -> HilbertFunction:
    """Class-space dimensions in degrees 0 through max_degree."""
    if max_degree < 0:
        raise ShapeError("max_degree must be nonnegative")
    return HilbertFunction(tuple(gkm_dimension(g, d) for d in range(max_degree + 1)))


def _series_coefficient(k, nvars):
    """Coefficient of s^k in (1 - s)^(-nvars)."""
    if nvars == 0:
        return 1 if k == 0 else 0
    return math.comb(k + nvars - 1, nvars - 1)


def betti_numbers(g: MomentGraph, n: int | None = None) -> BettiVector:
    """Even Betti numbers from the Hilbert function via the freeness recursion.

    Peels off one free module generator layer per degree:
    b_{2d} = h_d - sum_{j<d} b_{2j} * C(d-j+n-1, n-1).  A negative value
    or a total different from the number of fixed points contradicts
    freeness of the class module and raises FreenessViolation.
    """
    if n is None:
        n = g.dimension
    if n < 0:
        raise ShapeError("ambient rank must be nonnegative")
    h = [gkm_dimension(g, d) for d in range(n + 1)]
    b = []
    for d in range(n + 1):
        val = h[d] - sum(b[j] * _series_coefficient(d - j, n) for j in range(d))
        if val < 0:
            raise FreenessViolation(
                f"negative Betti number b_{2 * d} = {val}; module is not free"
            )
        b.append(val)
    if sum(b) != len(g.fixed_points):
        raise FreenessViolation(
            f"Betti numbers sum to {sum(b)}, expected {len(g.fixed_points)}"
        )
    return BettiVector(tuple(b))


def class_from_polynomials(g: MomentGraph, degree: int, polynomials) -> ClassTuple:
    """Build a ClassTuple from per-fixed-point exponent->coefficient mappings."""
    basis = monomial_basis(g.dimension, degree)
    polys = list(polynomials)
    if len(polys) != len(g.fixed_points):
        raise ShapeError(
            f"{len(polys)} polynomial(s) for {len(g.fixed_points)} fixed point(s)"
        )
    allowed = set(basis)
    for p in polys:
        for exp in p:
            if tuple(exp) not in allowed:
                raise ShapeError(f"monomial {exp} is not homogeneous of degree {degree}")
    coefficients = tuple(
        tuple(Fraction(p.get(m, 0)) for m in basis) for p in polys
    )
    return ClassTuple(degree=degree, coefficients=coefficients)


def _divide_by_linear(poly, alpha):
    """Exact quotient of a polynomial by a linear form, or None if not divisible."""
    if not poly:
        return {}
    k0 = _pivot_index(alpha)
    n = len(alpha)
    lead = Fraction(alpha[k0])
    divisor = {
        _unit_exponent(n, j): Fraction(alpha[j]) for j in range(n) if alpha[j]
    }
    remainder = dict(poly)
    quotient = {}
    while remainder:
        term = max(remainder, key=lambda m: (m[k0], m))
        if term[k0] == 0:
            return None
        qexp = term[:k0] + (term[k0] - 1,) + term[k0 + 1 :]
        qc = remainder[term] / lead
        quotient[qexp] = quotient.get(qexp, Fraction(0)) + qc
        for de, dc in divisor.items():
            e = tuple(a + b for a, b in zip(qexp, de))
            c = remainder.get(e, Fraction(0)) - qc * dc
            if c:
                remainder[e] = c
            elif e in remainder:
                del remainder[e]
    return {e: c for e, c in quotient.items() if c}


def check_membership(g: MomentGraph, c: ClassTuple) -> MembershipResult:
    """Decide whether a tuple satisfies every edge divisibility, exactly.

    Success carries the per-edge quotient polynomials as witnesses;
    failure names the first violating edge.  Shape mismatches between the
    tuple and the graph raise ShapeError.
    """
    n = g.dimension
    basis = monomial_basis(n, c.degree)
    if len(c.coefficients) != len(g.fixed_points):
        raise ShapeError(
            f"class has {len(c.coefficients)} component(s) for "
            f"{len(g.fixed_points)} fixed point(s)"
        )
    for i, vec in enumerate(c.coefficients):
        if len(vec) != len(basis):
            raise ShapeError(
                f"component {i} has {len(vec)} coefficient(s); degree-{c.degree} "
                f"basis has {len(basis)}"
            )
    polys = [
        {m: coef for m, coef in zip(basis, vec) if coef} for vec in c.coefficients
    ]
    quotients = []
    for idx, (pi, qi, e) in enumerate(_endpoint_indices(g)):
        diff = _poly_sub(polys[pi], polys[qi])
        q = _divide_by_linear(diff, e.weight)
        if q is None:
            return MembershipResult(
                ok=False, quotients=None, violating_edge=e, violating_index=idx
            )
        quotients.append(q)
    return MembershipResult(
        ok=True, quotients=tuple(quotients), violating_edge=None, violating_index=None
    )


def _shift_class_vector(vec, mono, n, from_degree, to_degree, points):
    """Multiply a class-space vector by a monomial, re-indexed to the new degree."""
    src = monomial_basis(n, from_degree)
    dst = monomial_basis(n, to_degree)
    dst_index = {m: i for i, m in enumerate(dst)}
    b_src, b_dst = len(src), len(dst)
    out = [Fraction(0)] * (points * b_dst)
    for p in range(points):
        for j, m in enumerate(src):
            c = vec[p * b_src + j]
            if c:
                target = tuple(a + b for a, b in zip(m, mono))
                out[p * b_dst + dst_index[target]] = c
    return out


def generator_degrees(g: MomentGraph, max_degree: int | None = None) -> tuple:
    """Degrees (with multiplicities) where new module generators appear.

    In each degree d the count is h_d minus the dimension spanned inside
    the degree-d class space by monomial multiples of lower-degree
    classes.  Only nonzero counts are reported, as (degree, count) pairs
    in increasing degree.
    """
    n = g.dimension
    if max_degree is None:
        max_degree = n
    if max_degree < 0:
        raise ShapeError("max_degree must be nonnegative")
    points = len(g.fixed_points)
    bases = {}
    out = []
    for d in range(max_degree + 1):
        rows, ncols = _constraint_rows(g, d)
        basis = kernel_basis(rows, ncols) if ncols else []
        bases[d] = basis
        products = []
        for d0 in range(d):
            for mono in monomial_basis(n, d - d0):
                for vec in bases[d0]:
                    products.append(
                        _shift_class_vector(vec, mono, n, d0, d, points)
                    )
        spanned = rank(products, ncols) if products else 0
        count = len(basis) - spanned
        if count < 0:
            raise InternalConsistency(
                f"degree-{d} products exceed the class space they live in"
            )
        if count:
            out.append((d, count))
    return tuple(out)
