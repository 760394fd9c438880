"""Shared test utilities: independent oracles and seeded template generators.

Oracle code here deliberately avoids the package's own linear algebra:
rank/nullity use a local echelon reduction, determinants use permutation
expansion, hulls use a monotone chain, and smoothness solves integer
systems directly.  Agreement between these and the package is the point
of the dual-route tests.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from toric_origami import DelzantPolytope, HalfSpace, OrigamiTemplate, TemplateGraph
from toric_origami.gkm import FixedPoint, GkmEdge, MomentGraph

# ---------------------------------------------------------------------------
# independent linear algebra


def oracle_rank(rows, ncols):
    """Row-reduce with plain Gaussian elimination; count nonzero rows."""
    mat = [[Fraction(c) for c in row] for row in rows]
    rank = 0
    col = 0
    while rank < len(mat) and col < ncols:
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank][col]
        mat[rank] = [c / lead for c in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def oracle_nullity(rows, ncols):
    return ncols - oracle_rank(rows, ncols)


def oracle_det(rows):
    """Determinant by signed permutation expansion (fine for n <= 5)."""
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = Fraction(sign)
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


# ---------------------------------------------------------------------------
# independent polygon machinery


def convex_hull(points):
    """Monotone chain, strict turns only: collinear interior points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _gcd2(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _primitive2(v):
    g = _gcd2(v[0], v[1])
    return (v[0] // g, v[1] // g)


def polygon_from_hull(hull):
    """H-representation of a ccw hull: outward primitive normals and offsets."""
    halves = []
    m = len(hull)
    for i in range(m):
        px, py = hull[i]
        qx, qy = hull[(i + 1) % m]
        normal = _primitive2((qy - py, px - qx))
        offset = normal[0] * px + normal[1] * py
        halves.append(HalfSpace(normal=normal, offset=offset))
    return DelzantPolytope(2, halves)


def oracle_polygon_smooth(hull):
    """Decide smoothness by solving integer systems at every hull vertex.

    At each vertex the two primitive edge directions must generate all of
    Z^2, i.e. the system [d1 d2] a = e must have an integer solution for
    both unit vectors e.
    """
    m = len(hull)
    for i in range(m):
        v = hull[i]
        prev_pt = hull[(i - 1) % m]
        next_pt = hull[(i + 1) % m]
        d1 = _primitive2((prev_pt[0] - v[0], prev_pt[1] - v[1]))
        d2 = _primitive2((next_pt[0] - v[0], next_pt[1] - v[1]))
        det = d1[0] * d2[1] - d1[1] * d2[0]
        if det == 0:
            return False
        for e in ((1, 0), (0, 1)):
            a_num = e[0] * d2[1] - e[1] * d2[0]
            b_num = d1[0] * e[1] - d1[1] * e[0]
            if a_num % det or b_num % det:
                return False
    return True


def random_lattice_polygon(rng):
    """A random convex lattice polygon as (hull, DelzantPolytope)."""
    while True:
        count = rng.randint(3, 7)
        pts = {
            (rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(count)
        }
        hull = convex_hull(sorted(pts))
        if len(hull) >= 3:
            return hull, polygon_from_hull(hull)


# ---------------------------------------------------------------------------
# unimodular maps


def random_unimodular(rng, n):
    """A random element of GL_n(Z) built from shears, swaps, and sign flips."""
    mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(2, 6)):
        kind = rng.choice(("shear", "swap", "flip")) if n > 1 else "flip"
        if kind == "shear":
            i, j = rng.sample(range(n), 2)
            c = rng.choice((-2, -1, 1, 2))
            for col in range(n):
                mat[i][col] += c * mat[j][col]
        elif kind == "swap":
            i, j = rng.sample(range(n), 2)
            mat[i], mat[j] = mat[j], mat[i]
        else:
            i = rng.randrange(n)
            mat[i] = [-c for c in mat[i]]
    return mat


def apply_unimodular(polytope, mat, shift=None):
    """Image of a polytope under x -> M x + t, as a new DelzantPolytope.

    For {a . x <= b} the image is {a' . y <= b + a' . t} with a' = a M^{-1};
    passing the halfspaces through M^T on the *parametrization* side keeps
    everything integral: substituting x = M z gives normals a M.
    """
    n = polytope.dimension
    if shift is None:
        shift = (0,) * n
    halves = []
    for h in polytope.halfspaces:
        normal = tuple(
            sum(h.normal[i] * mat[i][j] for i in range(n)) for j in range(n)
        )
        offset = h.offset + sum(normal[j] * shift[j] for j in range(n))
        halves.append(HalfSpace(normal=normal, offset=offset))
    return DelzantPolytope(n, halves)


def transform_template(t, mat, shift=None):
    """Apply one unimodular change of coordinates to every polytope."""
    psi_v = {
        vid: apply_unimodular(t.polytope(vid), mat, shift)
        for vid in t.graph.vertices
    }
    return OrigamiTemplate(
        dimension=t.dimension,
        graph=t.graph,
        psi_v=psi_v,
        psi_e=dict(t.psi_e),
        polytope_ids=t.polytope_ids,
    )


# ---------------------------------------------------------------------------
# template builders


def build_template(dimension, vertex_polytopes, edge_list):
    """Assemble a template from {vid: polytope} and (eid, u, v, fu, fv) rows."""
    vertices = tuple(vertex_polytopes)
    edges = tuple(row[0] for row in edge_list)
    incidence = {row[0]: (row[1], row[2]) for row in edge_list}
    psi_e = {row[0]: (row[3], row[4]) for row in edge_list}
    graph = TemplateGraph(vertices=vertices, edges=edges, incidence=incidence)
    return OrigamiTemplate(
        dimension=dimension,
        graph=graph,
        psi_v=dict(vertex_polytopes),
        psi_e=psi_e,
    )


def box_polytope(bounds):
    """Axis box from ((lo, hi), ...); facet 2j is the min side of axis j."""
    n = len(bounds)
    halves = []
    for j, (lo, hi) in enumerate(bounds):
        if not lo < hi:
            raise ValueError("empty box side")
        minus = tuple(-1 if i == j else 0 for i in range(n))
        plus = tuple(1 if i == j else 0 for i in range(n))
        halves.append(HalfSpace(normal=minus, offset=-lo))
        halves.append(HalfSpace(normal=plus, offset=hi))
    return DelzantPolytope(n, halves)


def box_path_template(rng, n=None, length=None, twist=True):
    """The hypercube-doubling generator: a path of boxes glued along one axis.

    All boxes share their cross-section; along the glue axis consecutive
    boxes share alternating upper/lower bounds, so neighbors superimpose
    near each fold.  Facet 2k (min) or 2k+1 (max) is the fold on axis k.
    """
    if n is None:
        n = rng.randint(1, 3)
    if length is None:
        length = rng.randint(1, 6)
    axis = rng.randrange(n)
    section = []
    for j in range(n):
        lo = rng.randint(-3, 2)
        section.append((lo, lo + rng.randint(1, 3)))
    lo0 = rng.randint(-3, 2)
    ranges = [(lo0, lo0 + rng.randint(1, 3))]
    sides = []
    share_max = rng.random() < 0.5
    for _ in range(length - 1):
        prev_lo, prev_hi = ranges[-1]
        if share_max:
            ranges.append((prev_hi - rng.randint(1, 3), prev_hi))
        else:
            ranges.append((prev_lo, prev_lo + rng.randint(1, 3)))
        sides.append(share_max)
        share_max = not share_max
    vertex_polytopes = {}
    for i, rng_k in enumerate(ranges):
        bounds = list(section)
        bounds[axis] = rng_k
        vertex_polytopes[f"v{i}"] = box_polytope(bounds)
    edge_list = []
    for i in range(length - 1):
        facet = 2 * axis + 1 if sides[i] else 2 * axis
        edge_list.append((f"e{i}", f"v{i}", f"v{i + 1}", facet, facet))
    t = build_template(n, vertex_polytopes, edge_list)
    if twist and rng.random() < 0.5:
        mat = random_unimodular(rng, n)
        shift = tuple(rng.randint(-2, 2) for _ in range(n))
        t = transform_template(t, mat, shift)
    return t


HEXAGON_HALFSPACES = (
    HalfSpace(normal=(-1, 0), offset=0),
    HalfSpace(normal=(0, -1), offset=0),
    HalfSpace(normal=(1, 0), offset=2),
    HalfSpace(normal=(0, 1), offset=2),
    HalfSpace(normal=(-1, -1), offset=-1),
    HalfSpace(normal=(1, 1), offset=3),
)

# three pairwise disjoint facets of the hexagon, usable as folds at one vertex
HEXAGON_FOLD_CLASSES = (1, 5, 0)


def hexagon_polytope():
    return DelzantPolytope(2, HEXAGON_HALFSPACES)


def hexagon_cycle_template(length):
    """A cycle of identical smooth hexagons; works for even and odd lengths.

    Consecutive folds at one hexagon must be disjoint, i.e. distinct fold
    classes; the coloring 0,1,0,1,... patched to ...,2 at the closing edge
    is a proper edge coloring of any cycle of length >= 3.
    """
    if length < 3:
        raise ValueError("cycle needs at least 3 polytopes")
    colors = [i % 2 for i in range(length)]
    if length % 2:
        colors[-1] = 2
    hexagon = hexagon_polytope()
    vertex_polytopes = {f"v{i}": hexagon for i in range(length)}
    edge_list = []
    for i in range(length):
        facet = HEXAGON_FOLD_CLASSES[colors[i]]
        edge_list.append((f"e{i}", f"v{i}", f"v{(i + 1) % length}", facet, facet))
    return build_template(2, vertex_polytopes, edge_list)


def hexagon_tree_template(rng, size=None):
    """A random tree of identical hexagons with fold classes kept disjoint."""
    if size is None:
        size = rng.randint(1, 6)
    hexagon = hexagon_polytope()
    vertex_polytopes = {"v0": hexagon}
    used = {"v0": set()}
    edge_list = []
    for i in range(1, size):
        candidates = [v for v in used if len(used[v]) < 3]
        parent = rng.choice(candidates)
        color = rng.choice(sorted({0, 1, 2} - used[parent]))
        vid = f"v{i}"
        vertex_polytopes[vid] = hexagon
        used[parent].add(color)
        used[vid] = {color}
        facet = HEXAGON_FOLD_CLASSES[color]
        edge_list.append((f"e{i}", parent, vid, facet, facet))
    return build_template(2, vertex_polytopes, edge_list)


def box_even_cycle_template():
    """A fixed 4-cycle of boxes sharing alternate bounds along axis 0."""
    ranges = ((0, 2), (1, 2), (1, 3), (0, 3))
    vertex_polytopes = {
        f"v{i}": box_polytope((r, (0, 1))) for i, r in enumerate(ranges)
    }
    edge_list = [
        ("e0", "v0", "v1", 1, 1),
        ("e1", "v1", "v2", 0, 0),
        ("e2", "v2", "v3", 1, 1),
        ("e3", "v3", "v0", 0, 0),
    ]
    return build_template(2, vertex_polytopes, edge_list)


# ---------------------------------------------------------------------------
# synthetic moment graphs


def random_moment_graph(rng, n=None):
    """A synthetic moment graph with random endpoints and nonzero weights."""
    if n is None:
        n = rng.randint(1, 2)
    count = rng.randint(2, 5)
    fps = tuple(
        FixedPoint(
            vertex_id=f"p{i}",
            point=tuple(Fraction(i) for _ in range(n)),
            key=f"p{i}:0",
        )
        for i in range(count)
    )
    edges = []
    for j in range(rng.randint(1, 5)):
        a, b = rng.sample(range(count), 2)
        while True:
            weight = tuple(rng.randint(-3, 3) for _ in range(n))
            if any(weight):
                break
        edges.append(
            GkmEdge(
                endpoints=(fps[a], fps[b]),
                weight=weight,
                chain=(),
                folded=bool(rng.randint(0, 1)),
            )
        )
    return MomentGraph(fixed_points=fps, edges=tuple(edges), dimension=n)


def oracle_gkm_dimension(g, degree):
    """Dense divisibility solver: auxiliary quotient unknowns, no substitution.

    f_p - f_q is divisible by alpha iff f_p - f_q = alpha * g_e for some
    polynomial g_e of one degree less.  The joint (f, g) solution space
    has the same dimension as the f solution space, because each g_e is
    uniquely determined by f (a nonzero linear form is not a zero divisor),
    so the nullity of the joint system is the answer.
    """
    from toric_origami.cohomology import monomial_basis

    n = g.dimension
    basis_d = monomial_basis(n, degree)
    basis_lower = monomial_basis(n, degree - 1) if degree >= 1 else ()
    k = len(g.fixed_points)
    nf = k * len(basis_d)
    ng = len(g.edges) * len(basis_lower)
    ncols = nf + ng
    if ncols == 0:
        return 0
    index = {fp: i for i, fp in enumerate(g.fixed_points)}
    rows = []
    for ei, e in enumerate(g.edges):
        p, q = (index[fp] for fp in e.endpoints)
        for mi, mono in enumerate(basis_d):
            row = [Fraction(0)] * ncols
            row[p * len(basis_d) + mi] += 1
            row[q * len(basis_d) + mi] -= 1
            for ni, nu in enumerate(basis_lower):
                for axis, coeff in enumerate(e.weight):
                    if not coeff:
                        continue
                    shifted = tuple(
                        c + (1 if i == axis else 0) for i, c in enumerate(nu)
                    )
                    if shifted == mono:
                        row[nf + ei * len(basis_lower) + ni] -= coeff
            rows.append(row)
    return oracle_nullity(rows, ncols)


# ---------------------------------------------------------------------------
# tiny polynomial oracle (for membership verification)


def poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, Fraction(0)) + Fraction(c1) * Fraction(c2)
    return {e: c for e, c in out.items() if c}


def poly_sub(p, q):
    out = {e: Fraction(c) for e, c in p.items()}
    for e, c in q.items():
        out[e] = out.get(e, Fraction(0)) - Fraction(c)
    return {e: c for e, c in out.items() if c}


def linear_poly(alpha):
    n = len(alpha)
    return {
        tuple(1 if i == j else 0 for i in range(n)): Fraction(alpha[j])
        for j in range(n)
        if alpha[j]
    }
