"""Convex rational polytopes in halfspace representation.

A polytope here is the solution set of finitely many inequalities
``<normal, x> <= offset`` with primitive integer normals and rational
offsets.  Construction enforces the structural requirements — nonempty,
bounded, full-dimensional, no duplicate or redundant halfspace — while
simplicity and smoothness stay queryable predicates so that candidate
polytopes can be inspected and rejected with a reason.

All vertex coordinates are exact (`fractions.Fraction`).  A face is
identified by its vertex set, which determines it uniquely within its
polytope; two structurally identical polytopes produce equal faces, so
code that mixes several polytopes must key faces by (polytope id, face).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exceptions import (
    DegenerateInput,
    DimensionError,
    FaceMismatch,
    NotDelzant,
    NotSimple,
)
from .lattice import (
    dot,
    integer_kernel_basis,
    kernel_basis,
    lattice_determinant,
    rank,
    rational_to_primitive,
    recession_direction,
    solve_square,
)


@dataclass(frozen=True)
class HalfSpace:
    """One inequality <normal, x> <= offset with a primitive integer normal.

    The pair is normalized at construction: (2, 4) . x <= 6 is stored as
    (1, 2) . x <= 3.  Two HalfSpace values are equal exactly when they
    describe the same subset of the ambient space.
    """

    normal: tuple
    offset: Fraction

    def __post_init__(self):
        entries = []
        for c in self.normal:
            as_frac = Fraction(c)
            if as_frac.denominator != 1:
                raise DegenerateInput(
                    f"halfspace normal must have integer entries, got {self.normal}"
                )
            entries.append(int(as_frac))
        if not entries or all(c == 0 for c in entries):
            raise DegenerateInput("halfspace normal must be a nonzero integer vector")
        g = math.gcd(*(abs(c) for c in entries))
        object.__setattr__(self, "normal", tuple(c // g for c in entries))
        object.__setattr__(self, "offset", Fraction(self.offset) / g)

    def contains(self, point) -> bool:
        return dot(self.normal, point) <= self.offset

    def on_boundary(self, point) -> bool:
        return dot(self.normal, point) == self.offset

    def __repr__(self):
        return f"HalfSpace({list(self.normal)} . x <= {self.offset})"


def _as_halfspace(item) -> HalfSpace:
    if isinstance(item, HalfSpace):
        return item
    normal, offset = item
    return HalfSpace(tuple(normal), Fraction(offset))


@dataclass(frozen=True)
class Face:
    """A nonempty face of a polytope.

    `active` is maximal (every facet index whose facet contains the face)
    and `vertices` is sorted, so within one polytope equal Face values
    describe equal subsets of the ambient space.  `owner` is excluded from
    comparison; see the module docstring.
    """

    active: frozenset
    vertices: tuple
    dim: int
    owner: "DelzantPolytope" = field(compare=False, repr=False)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def __repr__(self):
        return f"Face(dim={self.dim}, active={sorted(self.active)}, vertices={list(self.vertices)})"


class DelzantPolytope:
    """A bounded full-dimensional polytope given by irredundant halfspaces.

    Raises NotDelzant at construction when the data is empty, unbounded,
    lower-dimensional, duplicated, or contains a halfspace that does not
    support a facet.  `is_simple`/`is_smooth` classify the polytope further;
    `is_delzant` is their conjunction.  Instances are immutable and safe to
    share between templates.
    """

    def __init__(self, dimension: int, halfspaces):
        if not isinstance(dimension, int) or dimension < 0:
            raise DimensionError(f"dimension must be a nonnegative int, got {dimension!r}")
        hs = tuple(_as_halfspace(h) for h in halfspaces)
        for h in hs:
            if len(h.normal) != dimension:
                raise DimensionError(
                    f"normal {h.normal} has length {len(h.normal)}, expected {dimension}"
                )
        if len(set(hs)) != len(hs):
            raise NotDelzant("duplicate halfspace in description")
        self._dim = dimension
        self._halfspaces = hs
        self._vertices = self._enumerate_vertices()
        if not self._vertices:
            raise NotDelzant("polytope is empty")
        ray = recession_direction([h.normal for h in hs], dimension)
        if ray is not None:
            raise NotDelzant(f"polytope is unbounded in direction {ray}")
        self._check_full_dimensional()
        self._facet_vertex_sets = tuple(
            frozenset(v for v in self._vertices if h.on_boundary(v)) for h in hs
        )
        self._check_irredundant()
        self._face_map = None
        self._simple = None

    # -- construction checks ---------------------------------------------

    def _enumerate_vertices(self):
        n = self._dim
        if n == 0:
            return ((),)
        hs = self._halfspaces
        points = set()
        for subset in combinations(range(len(hs)), n):
            sol = solve_square(
                [hs[i].normal for i in subset], [hs[i].offset for i in subset]
            )
            if sol is not None and all(h.contains(sol) for h in hs):
                points.add(sol)
        return tuple(sorted(points))

    def _check_full_dimensional(self):
        if self._dim == 0:
            return
        k = len(self._vertices)
        centroid = tuple(sum(v[i] for v in self._vertices) / k for i in range(self._dim))
        for h in self._halfspaces:
            if dot(h.normal, centroid) >= h.offset:
                raise NotDelzant("polytope is not full-dimensional")

    def _affine_rank(self, points) -> int:
        pts = sorted(points)
        if len(pts) <= 1:
            return 0
        base = pts[0]
        return rank(
            [tuple(p[j] - base[j] for j in range(self._dim)) for p in pts[1:]],
            self._dim,
        )

    def _check_irredundant(self):
        for i, tight in enumerate(self._facet_vertex_sets):
            if not tight or self._affine_rank(tight) != self._dim - 1:
                raise NotDelzant(
                    f"halfspace {self._halfspaces[i]!r} is redundant (does not support a facet)"
                )

    # -- basic accessors ---------------------------------------------------

    @property
    def dimension(self) -> int:
        return self._dim

    @property
    def halfspaces(self) -> tuple:
        return self._halfspaces

    @property
    def vertices(self) -> tuple:
        """All vertices, sorted lexicographically."""
        return self._vertices

    @property
    def facet_vertex_sets(self) -> tuple:
        """For each halfspace index, the frozenset of vertices on that facet."""
        return self._facet_vertex_sets

    def facet_vertices(self, i: int) -> tuple:
        return tuple(sorted(self._facet_vertex_sets[i]))

    def contains(self, point) -> bool:
        return all(h.contains(point) for h in self._halfspaces)

    def active_at(self, vertex) -> tuple:
        """Indices of halfspaces tight at a point of the polytope."""
        return tuple(i for i, h in enumerate(self._halfspaces) if h.on_boundary(vertex))

    # -- classification ------------------------------------------------------

    def is_simple(self) -> bool:
        """True when every vertex lies on exactly `dimension` facets."""
        if self._simple is None:
            self._simple = all(
                len(self.active_at(v)) == self._dim for v in self._vertices
            )
        return self._simple

    def vertex_edge_directions(self, vertex) -> tuple:
        """Primitive integer directions of the edges leaving a vertex.

        Defined for simple polytopes: for each facet through the vertex,
        the direction obtained by leaving that facet while staying on the
        others, oriented into the polytope.  Order matches `active_at`.
        """
        if not self.is_simple():
            raise NotSimple("edge directions at a vertex need a simple polytope")
        active = self.active_at(vertex)
        if len(active) != self._dim:
            raise FaceMismatch(f"{vertex} is not a vertex of this polytope")
        dirs = []
        for leave in active:
            others = [
                tuple(Fraction(c) for c in self._halfspaces[i].normal)
                for i in active
                if i != leave
            ]
            ker = kernel_basis(others, self._dim)
            if len(ker) != 1:
                raise NotSimple(f"degenerate facet normals at vertex {vertex}")
            d = rational_to_primitive(ker[0])
            if dot(self._halfspaces[leave].normal, d) > 0:
                d = tuple(-x for x in d)
            dirs.append(d)
        return tuple(dirs)

    def is_smooth(self) -> bool:
        """True when at each vertex the primitive edge directions form a lattice basis.

        Raises NotSimple for non-simple polytopes, where the criterion does
        not apply.
        """
        if not self.is_simple():
            raise NotSimple("smoothness is only defined for simple polytopes")
        for v in self._vertices:
            if abs(lattice_determinant(self.vertex_edge_directions(v))) != 1:
                return False
        return True

    def is_delzant(self) -> bool:
        return self.is_simple() and self.is_smooth()

    # -- face structure -----------------------------------------------------

    def faces(self) -> tuple:
        """All nonempty faces, the polytope itself included, sorted by (dim, vertices)."""
        return tuple(sorted(self._faces().values(), key=lambda f: (f.dim, f.vertices)))

    def _faces(self) -> dict:
        if self._face_map is not None:
            return self._face_map
        full = frozenset(self._vertices)
        seen = {full}
        queue = [full]
        while queue:
            current = queue.pop()
            for facet_set in self._facet_vertex_sets:
                meet = current & facet_set
                if meet and meet not in seen:
                    seen.add(meet)
                    queue.append(meet)
        faces = {}
        for vset in seen:
            active = frozenset(
                i for i, fs in enumerate(self._facet_vertex_sets) if vset <= fs
            )
            dim = (
                self._dim - rank([self._halfspaces[i].normal for i in active], self._dim)
                if active
                else self._dim
            )
            faces[vset] = Face(active=active, vertices=tuple(sorted(vset)), dim=dim, owner=self)
        self._face_map = faces
        return faces

    def face_with_vertices(self, vertex_set) -> Face:
        """The face whose vertex set is exactly `vertex_set`; FaceMismatch if absent."""
        try:
            return self._faces()[frozenset(vertex_set)]
        except KeyError:
            raise FaceMismatch(
                f"no face of this polytope has vertex set {sorted(vertex_set)}"
            ) from None

    def facet_face(self, i: int) -> Face:
        """Facet i as a Face value."""
        return self.face_with_vertices(self._facet_vertex_sets[i])

    def faces_meeting(self, face: Face) -> tuple:
        """Indices of the facets whose intersection with `face` is nonempty.

        Facets containing the face itself are included; two faces of one
        polytope meet exactly when they share a vertex.
        """
        if face.owner is not self:
            raise FaceMismatch("face does not belong to this polytope")
        vset = face.vertex_set
        return tuple(i for i, fs in enumerate(self._facet_vertex_sets) if vset & fs)

    def one_faces_at(self, vertex) -> tuple:
        """The edges (1-faces) of the polytope through a given vertex."""
        return tuple(f for f in self.faces() if f.dim == 1 and vertex in f.vertex_set)

    # -- equality -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, DelzantPolytope):
            return NotImplemented
        return self._dim == other._dim and set(self._halfspaces) == set(other._halfspaces)

    def __hash__(self):
        return hash((self._dim, frozenset(self._halfspaces)))

    def __repr__(self):
        return (
            f"DelzantPolytope(dim={self._dim}, facets={len(self._halfspaces)}, "
            f"vertices={len(self._vertices)})"
        )


def agree_near_facet(p1: DelzantPolytope, f1: int, p2: DelzantPolytope, f2: int) -> bool:
    """Do two polytopes coincide in a neighborhood of a shared facet?

    True when (a) facet f1 of p1 and facet f2 of p2 are the same subset of
    the ambient space, and (b) the supporting halfspaces of the p1-facets
    meeting that subset equal, as a set of halfspaces, those of the
    p2-facets meeting it.  This is the local compatibility condition for
    gluing two polytopes along a fold facet: near the fold the two
    polytopes must superimpose exactly.
    """
    if p1.dimension != p2.dimension:
        raise DimensionError(
            f"cannot compare facets across dimensions {p1.dimension} and {p2.dimension}"
        )
    set1 = p1.facet_vertex_sets[f1]
    set2 = p2.facet_vertex_sets[f2]
    if set1 != set2:
        return False
    near1 = {p1.halfspaces[i] for i, fs in enumerate(p1.facet_vertex_sets) if fs & set1}
    near2 = {p2.halfspaces[i] for i, fs in enumerate(p2.facet_vertex_sets) if fs & set2}
    return near1 == near2


def facet_as_polytope(p: DelzantPolytope, i: int) -> tuple:
    """Rewrite facet i of p as a full-dimensional polytope one dimension down.

    The facet's affine span is translated to put its lexicographically
    smallest vertex at the origin and coordinatized by the Hermite-reduced
    basis of the span's integer direction lattice, which makes the output
    canonical: point y in the new coordinates corresponds to
    base + sum(y[k] * basis[k]) in the old ones.  Returns
    (polytope, base_point, basis_rows).
    """
    n = p.dimension
    if n == 0:
        raise DimensionError("a 0-dimensional polytope has no facets")
    normal = p.halfspaces[i].normal
    basis = integer_kernel_basis(normal)
    facet_set = p.facet_vertex_sets[i]
    base = min(facet_set)
    cuts = []
    for j, h in enumerate(p.halfspaces):
        if j == i:
            continue
        shared = p.facet_vertex_sets[j] & facet_set
        # keep only the facets meeting facet i in one of facet i's own facets
        if not shared or p._affine_rank(shared) != n - 2:
            continue
        row = tuple(dot(h.normal, b) for b in basis)
        cuts.append(HalfSpace(row, h.offset - dot(h.normal, base)))
    return DelzantPolytope(n - 1, cuts), base, basis
