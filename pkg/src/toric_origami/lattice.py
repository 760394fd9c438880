"""Exact lattice and rational linear algebra.

Everything here is computed over Python ints and `fractions.Fraction`; no
floating point is used anywhere in the package core.  Lattice vectors are
tuples of ints, rational points are tuples of Fractions, and matrices are
sequences of row tuples.  All functions are pure and their outputs are
deterministic (pivots are always the first nonzero entry in column order).
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

from .exceptions import DegenerateInput, DimensionError


def dot(a, x):
    """Exact inner product of two equal-length vectors."""
    return sum(ai * xi for ai, xi in zip(a, x, strict=True))


def primitive(v):
    """Divide an integer vector by the gcd of its entries.

    Keeps the direction: primitive((2, 4)) == (1, 2) and
    primitive((-3, 0)) == (-1, 0).  Raises DegenerateInput on the zero
    vector, which has no primitive representative.
    """
    g = math.gcd(*(abs(int(c)) for c in v)) if len(v) else 0
    if g == 0:
        raise DegenerateInput("zero vector has no primitive representative")
    return tuple(int(c) // g for c in v)


def lattice_determinant(rows):
    """Determinant of a square integer matrix by fraction-free (Bareiss) elimination.

    The empty 0x0 matrix has determinant 1.  Raises DimensionError unless
    exactly n vectors of length n are supplied.
    """
    n = len(rows)
    mat = []
    for r in rows:
        row = []
        for c in r:
            q = Fraction(c)
            if q.denominator != 1:
                raise DegenerateInput(f"integer determinant got non-integer entry {c}")
            row.append(q.numerator)
        mat.append(row)
    if any(len(r) != n for r in mat):
        raise DimensionError(f"determinant needs {n} vectors of length {n}")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if mat[i][k] != 0), None)
            if pivot is None:
                return 0
            mat[k], mat[pivot] = mat[pivot], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss: the division is exact by construction
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


def _reduced_echelon(rows, ncols):
    """Reduced row echelon form over Fraction; returns (rows, pivot_columns)."""
    mat = [[Fraction(c) for c in r] for r in rows]
    for r in mat:
        if len(r) != ncols:
            raise DimensionError(f"row of length {len(r)} in a {ncols}-column matrix")
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def _column_count(rows, ncols):
    if ncols is not None:
        return ncols
    if not rows:
        raise DimensionError("column count required for an empty matrix")
    return len(rows[0])


def rank(rows, ncols=None):
    """Rank of a rational matrix (exact)."""
    if not rows:
        return 0
    return len(_reduced_echelon(rows, _column_count(rows, ncols))[1])


def kernel_dimension(rows, ncols=None):
    """Nullity of a rational matrix.  An empty matrix has nullity ncols."""
    ncols = _column_count(rows, ncols) if rows or ncols is None else ncols
    return ncols - rank(rows, ncols)


def kernel_basis(rows, ncols):
    """Deterministic basis of the right kernel of a rational matrix.

    One basis vector per free column, with a 1 in the free column and the
    pivot columns back-substituted; the empty matrix yields the standard
    basis.
    """
    ech, pivots = _reduced_echelon(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pc in zip(ech, pivots):
            vec[pc] = -row[free]
        basis.append(tuple(vec))
    return basis


def solve_square(rows, rhs):
    """Solve the square rational system rows * x = rhs; None if singular."""
    n = len(rows)
    aug = [[Fraction(c) for c in row] + [Fraction(b)] for row, b in zip(rows, rhs, strict=True)]
    for r in aug:
        if len(r) != n + 1:
            raise DimensionError("solve_square needs an n x n matrix")
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            return None
        aug[c], aug[pivot] = aug[pivot], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(aug[i][n] for i in range(n))


def rational_to_primitive(vec):
    """Scale a nonzero rational vector to a primitive integer vector (same direction)."""
    fracs = [Fraction(c) for c in vec]
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    return primitive(tuple(int(f * lcm) for f in fracs))


def hermite_basis(rows, ncols):
    """Canonical (Hermite-reduced) basis of the lattice generated by integer rows.

    Row-style Hermite normal form: pivots positive, entries above each pivot
    reduced into [0, pivot).  The result depends only on the generated
    lattice, which makes it a deterministic normal form.
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    basis = []  # list of (pivot_col, row)
    for col in range(ncols):
        live = [r for r in work if r[col] != 0]
        if not live:
            continue
        # gcd-reduce this column down to a single nonzero row
        while True:
            live = [r for r in work if r[col] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda r: abs(r[col]))
            small = live[0]
            for r in live[1:]:
                q = r[col] // small[col]
                if q:
                    for j in range(ncols):
                        r[j] -= q * small[j]
        pivot_row = next((r for r in work if r[col] != 0), None)
        if pivot_row is None:
            continue
        work = [r for r in work if r is not pivot_row and any(r)]
        if pivot_row[col] < 0:
            pivot_row = [-x for x in pivot_row]
        basis.append((col, pivot_row))
    # reduce entries above each pivot
    for i in range(len(basis)):
        pc, prow = basis[i]
        for k in range(i):
            q = basis[k][1][pc] // prow[pc]
            if q:
                basis[k] = (basis[k][0], [a - q * b for a, b in zip(basis[k][1], prow)])
    return tuple(tuple(r) for _, r in basis)


def integer_kernel_basis(v):
    """Hermite-reduced basis of the integer vectors orthogonal to integer vector v.

    For a primitive v of length n the result has n - 1 rows and spans the
    full sublattice {w : <v, w> = 0} of Z^n (a direct summand).
    """
    n = len(v)
    pairs = [(int(v[j]), [1 if k == j else 0 for k in range(n)]) for j in range(n)]
    kernel = [vec for val, vec in pairs if val == 0]
    live = [(val, vec) for val, vec in pairs if val != 0]
    while len(live) > 1:
        live.sort(key=lambda t: abs(t[0]))
        g, gvec = live[0]
        nxt = [(g, gvec)]
        for val, vec in live[1:]:
            q = val // g
            nval = val - q * g
            nvec = [x - q * y for x, y in zip(vec, gvec)]
            if nval == 0:
                kernel.append(nvec)
            else:
                nxt.append((nval, nvec))
        live = nxt
    return hermite_basis(kernel, n)


def recession_direction(normals, n):
    """A nonzero primitive integer direction d with <a, d> <= 0 for every normal, or None.

    Detects unboundedness of {x : <a_i, x> <= b_i}: the recession cone is
    nontrivial iff it contains a line (rank deficiency) or an extreme ray,
    and every extreme ray of a pointed cone is cut out by n-1 of the
    inequalities.
    """
    if n == 0:
        return None
    rows = [tuple(Fraction(c) for c in a) for a in normals]
    if rank(rows, n) < n:
        return rational_to_primitive(kernel_basis(rows, n)[0])
    for subset in combinations(range(len(rows)), n - 1):
        ker = kernel_basis([rows[i] for i in subset], n)
        if len(ker) != 1:
            continue
        d = rational_to_primitive(ker[0])
        for cand in (d, tuple(-x for x in d)):
            if all(dot(a, cand) <= 0 for a in normals):
                return cand
    return None
