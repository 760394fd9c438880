"""The glued orbit space of a template: facets, face poset, face subgraphs.

The polytopes of a template overlap in the ambient space (neighbors
superimpose near folds), so the orbit space is never represented as a
global point set.  Every face is kept as a set of member pairs
(template vertex, polytope face) and two members are identified only
through fold facets, mirroring the quotient that defines the space.

Faces are the nonempty intersections of glued facets, plus the whole
space as top element.  A set-theoretic intersection of two faces can fall
apart into several connected components in the quotient; each component
is its own face, which keeps every face's template subgraph connected.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exceptions import FaceMismatch, InternalConsistency
from .template import OrigamiTemplate, TemplateGraph


@dataclass(frozen=True)
class GluedFacet:
    """One facet of the orbit space: an equivalence class of polytope facets.

    Members are (template vertex id, facet index) pairs, none of which is
    a fold facet; facets of different polytopes land in one class when the
    gluing identifies them along a fold.
    """

    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    def __repr__(self):
        return f"GluedFacet({list(self.members)})"


@dataclass(frozen=True)
class OrbitFace:
    """A face of the orbit space.

    `members` is a frozenset of (template vertex id, polytope Face) pairs
    — the pieces of the face inside each polytope; `defining` indexes the
    glued facets containing this face (empty for the top face); `subgraph`
    is the induced template subgraph of the face (vertices whose polytope
    meets it, edges whose fold meets it).
    """

    members: frozenset
    dimension: int
    defining: frozenset
    subgraph: TemplateGraph = field(compare=False)

    def member_vertices(self) -> tuple:
        return tuple(sorted({vid for vid, _ in self.members}))

    def sort_key(self):
        return (
            self.dimension,
            tuple(sorted((vid, f.vertices) for vid, f in self.members)),
        )

    def __repr__(self):
        pieces = ", ".join(
            f"{vid}:{list(f.vertices)}" for vid, f in sorted(self.members, key=lambda m: (m[0], m[1].vertices))
        )
        return f"OrbitFace(dim={self.dimension}, {pieces})"


@dataclass(frozen=True, eq=False)
class FacePoset:
    """All orbit-space faces ordered by inclusion, top element last."""

    faces: tuple
    top: OrbitFace

    def __iter__(self):
        return iter(self.faces)

    def __len__(self):
        return len(self.faces)

    def by_dimension(self, d: int) -> tuple:
        return tuple(f for f in self.faces if f.dimension == d)

    @staticmethod
    def leq(a: OrbitFace, b: OrbitFace) -> bool:
        """Inclusion order: every piece of `a` sits inside a piece of `b`."""
        for vid, f in a.members:
            if not any(
                vid == wid and f.vertex_set <= g.vertex_set for wid, g in b.members
            ):
                return False
        return True


def glued_facets(t: OrigamiTemplate) -> tuple:
    """The facets of the orbit space, as equivalence classes of polytope facets.

    Classes are computed by union-find: facets F at u and F' at v are
    joined whenever an edge e=(u,v) exists and F and F' cut the fold facet
    of e in the same nonempty set.  Fold facets themselves are excluded —
    they are interior to the orbit space, not part of its boundary.
    """
    t.require_valid()
    graph = t.graph
    nodes = []
    for vid in graph.vertices:
        folds = t.fold_facet_indices(vid)
        for fi in range(len(t.polytope(vid).halfspaces)):
            if fi not in folds:
                nodes.append((vid, fi))
    parent = {node: node for node in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for eid in graph.edges:
        u, v = graph.ends(eid)
        fold_vs = t.fold_vertex_set(eid)
        traces_u = {
            node: t.polytope(u).facet_vertex_sets[node[1]] & fold_vs
            for node in nodes
            if node[0] == u
        }
        traces_v = {
            node: t.polytope(v).facet_vertex_sets[node[1]] & fold_vs
            for node in nodes
            if node[0] == v
        }
        for nu, tu in traces_u.items():
            if not tu:
                continue
            for nv, tv in traces_v.items():
                if tu == tv:
                    union(nu, nv)

    classes = {}
    for node in nodes:
        classes.setdefault(find(node), []).append(node)
    return tuple(
        GluedFacet(tuple(sorted(members)))
        for _, members in sorted(classes.items())
    )


def _edge_data(t: OrigamiTemplate) -> tuple:
    """Per template edge: (edge id, end u, end v, fold facet vertex set)."""
    return tuple(
        (eid, *t.graph.ends(eid), t.fold_vertex_set(eid)) for eid in t.graph.edges
    )


def _link_components(pieces, edge_data) -> tuple:
    """Split a set of (vid, Face) pieces into glued connected components.

    Two pieces are linked when they live in one polytope and share a
    polytope vertex, or when they live at the two ends of a template edge
    and share a geometric vertex lying on that edge's fold facet.
    """
    items = sorted(pieces, key=lambda m: (m[0], m[1].vertices))
    unseen = set(items)
    components = []
    while unseen:
        seed = next(m for m in items if m in unseen)
        stack, comp = [seed], set()
        while stack:
            cur = stack.pop()
            if cur in comp:
                continue
            comp.add(cur)
            unseen.discard(cur)
            cvid, cface = cur
            for other in items:
                if other in comp:
                    continue
                ovid, oface = other
                linked = False
                if ovid == cvid:
                    linked = bool(cface.vertex_set & oface.vertex_set)
                else:
                    for _, eu, ev, fold_vs in edge_data:
                        if {eu, ev} == {cvid, ovid} and (
                            cface.vertex_set & oface.vertex_set & fold_vs
                        ):
                            linked = True
                            break
                if linked:
                    stack.append(other)
        components.append(frozenset(comp))
    return tuple(components)


def _face_subgraph(t: OrigamiTemplate, members, edge_data) -> TemplateGraph:
    vids = {vid for vid, _ in members}
    chosen = []
    for eid, eu, ev, fold_vs in edge_data:
        meets = any(
            wid in (eu, ev) and (f.vertex_set & fold_vs) for wid, f in members
        )
        if meets:
            if eu not in vids or ev not in vids:
                raise InternalConsistency(
                    f"fold of edge {eid} meets a face that misses one of its end polytopes"
                )
            chosen.append(eid)
    graph = t.graph
    sub_vertices = tuple(w for w in graph.vertices if w in vids)
    sub_edges = tuple(e for e in graph.edges if e in chosen)
    return TemplateGraph(
        sub_vertices, sub_edges, {e: graph.ends(e) for e in sub_edges}
    )


def face_poset(t: OrigamiTemplate) -> FacePoset:
    """All faces of the orbit space: glued facets, their intersections, and the top.

    Intersections are computed memberwise inside each polytope, then split
    into connected components of the quotient; the closure is iterated
    until no new face appears.  Deterministic: faces are sorted by
    (dimension, member vertex data).
    """
    t.require_valid()
    glued = glued_facets(t)
    edge_data = _edge_data(t)

    def face_from_members(members: frozenset) -> OrbitFace:
        dims = {f.dim for _, f in members}
        if len(dims) != 1:
            raise InternalConsistency(
                f"face members disagree on dimension: {sorted(dims)}"
            )
        defining = frozenset(
            gi
            for gi, g in enumerate(glued)
            if all(
                any(
                    vid == wid
                    and f.vertex_set <= t.polytope(wid).facet_vertex_sets[fi]
                    for wid, fi in g.members
                )
                for vid, f in members
            )
        )
        subgraph = _face_subgraph(t, members, edge_data)
        if not subgraph.is_connected():
            raise InternalConsistency("orbit face has a disconnected template subgraph")
        return OrbitFace(
            members=members, dimension=dims.pop(), defining=defining, subgraph=subgraph
        )

    top_members = frozenset(
        (vid, t.polytope(vid).face_with_vertices(t.polytope(vid).vertices))
        for vid in t.graph.vertices
    )
    faces = {}

    def add(members: frozenset):
        if members not in faces:
            faces[members] = face_from_members(members)
            return True
        return False

    add(top_members)
    for g in glued:
        add(
            frozenset(
                (vid, t.polytope(vid).facet_face(fi)) for vid, fi in g.members
            )
        )

    changed = True
    while changed:
        changed = False
        pool = sorted(faces.values(), key=OrbitFace.sort_key)
        for i, a in enumerate(pool):
            for b in pool[i + 1 :]:
                pieces = set()
                for vid, fa in a.members:
                    p = t.polytope(vid)
                    for wid, fb in b.members:
                        if wid != vid:
                            continue
                        common = fa.vertex_set & fb.vertex_set
                        if common:
                            pieces.add((vid, p.face_with_vertices(common)))
                for comp in _link_components(pieces, edge_data):
                    if add(comp):
                        changed = True

    ordered = tuple(sorted(faces.values(), key=OrbitFace.sort_key))
    return FacePoset(faces=ordered, top=faces[top_members])


def face_subgraph(t: OrigamiTemplate, face: OrbitFace) -> TemplateGraph:
    """The induced template subgraph of an orbit-space face.

    Vertices are the template vertices whose polytope meets the face;
    edges are the template edges whose fold facet meets it.  Raises
    FaceMismatch when the face's members do not belong to this template.
    """
    for vid, f in face.members:
        if vid not in t.graph.vertices:
            raise FaceMismatch(f"face member references unknown template vertex {vid!r}")
        p = t.polytope(vid)
        try:
            found = p.face_with_vertices(f.vertex_set)
        except FaceMismatch:
            raise FaceMismatch(
                f"face member at {vid} is not a face of that polytope"
            ) from None
        if found.dim != f.dim:
            raise FaceMismatch(f"face member at {vid} has inconsistent dimension")
    return _face_subgraph(t, face.members, _edge_data(t))


def is_face_acyclic(t: OrigamiTemplate) -> bool:
    """Is every orbit-space face's template subgraph a tree?

    Equivalent to template-graph acyclicity; both directions of that
    equivalence are exercised in the test suite.  Subgraph connectivity is
    asserted (a violation is a bug, not a property of the input).
    """
    poset = face_poset(t)
    for face in poset:
        if not face.subgraph.is_connected():
            raise InternalConsistency("orbit face has a disconnected template subgraph")
        if not face.subgraph.is_acyclic():
            return False
    return True
