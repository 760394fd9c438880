"""Origami templates: polytopes glued along shared fold facets.

A template is a finite connected multigraph whose vertices carry Delzant
polytopes (all of one dimension) and whose edges name one facet of each
endpoint polytope — the fold facet along which the two polytopes are glued.
Validity is the conjunction of two local conditions:

(1) for every edge, the two referenced facets are the same subset of the
    ambient space and the polytopes agree near it (they superimpose in a
    neighborhood of the fold);
(2) for every template vertex, the fold facets of distinct incident edges
    are pairwise disjoint.

Templates are immutable; `cut_leaf` and `radial_blow_up` return new
values.  Loop edges (both ends at one vertex) are allowed and model
non-coorientable folds; condition (1) forces a loop's two facet references
to coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exceptions import (
    ConditionOneViolation,
    ConditionTwoViolation,
    DimensionError,
    InvalidTemplate,
    MalformedTemplate,
    NotALeaf,
    NotSimple,
    Unsupported,
)
from .polytope import DelzantPolytope, agree_near_facet, facet_as_polytope


@dataclass(frozen=True, eq=False)
class TemplateGraph:
    """A finite multigraph with string-identified vertices and edges.

    `incidence` maps each edge id to its ordered pair of end vertex ids;
    the pair order only matters for aligning per-end data (fold facet
    references), not for the graph structure.  Loops are pairs with equal
    ends.
    """

    vertices: tuple
    edges: tuple
    incidence: dict

    def __post_init__(self):
        verts = tuple(str(v) for v in self.vertices)
        eids = tuple(str(e) for e in self.edges)
        if len(set(verts)) != len(verts):
            raise MalformedTemplate("duplicate vertex identifiers")
        if len(set(eids)) != len(eids):
            raise MalformedTemplate("duplicate edge identifiers")
        if set(self.incidence) != set(eids):
            raise MalformedTemplate("incidence must give exactly one end pair per edge")
        inc = {}
        vset = set(verts)
        for e in eids:
            ends = tuple(self.incidence[e])
            if len(ends) != 2:
                raise MalformedTemplate(f"edge {e}: incidence needs exactly two ends")
            for w in ends:
                if w not in vset:
                    raise MalformedTemplate(f"edge {e}: unknown end vertex {w!r}")
            inc[e] = ends
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", eids)
        object.__setattr__(self, "incidence", inc)

    def ends(self, eid: str) -> tuple:
        return self.incidence[eid]

    def incident_edges(self, vid: str) -> tuple:
        return tuple(e for e in self.edges if vid in self.incidence[e])

    def degree(self, vid: str) -> int:
        """Number of edge ends at the vertex; a loop counts twice."""
        return sum(self.incidence[e].count(vid) for e in self.edges)

    def loops(self) -> tuple:
        return tuple(e for e, (u, v) in self.incidence.items() if u == v)

    def connected_components(self) -> tuple:
        adjacency = {v: set() for v in self.vertices}
        for u, v in self.incidence.values():
            adjacency[u].add(v)
            adjacency[v].add(u)
        remaining = set(self.vertices)
        components = []
        while remaining:
            seed = min(remaining)
            stack, comp = [seed], set()
            while stack:
                w = stack.pop()
                if w in comp:
                    continue
                comp.add(w)
                stack.extend(adjacency[w] - comp)
            components.append(frozenset(comp))
            remaining -= comp
        return tuple(sorted(components, key=min))

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def is_acyclic(self) -> bool:
        """True iff the multigraph is a forest (loops and multi-edges are cycles)."""
        return len(self.edges) == len(self.vertices) - len(self.connected_components())

    def is_bipartite(self) -> bool:
        color = {}
        for seed in self.vertices:
            if seed in color:
                continue
            color[seed] = 0
            stack = [seed]
            while stack:
                w = stack.pop()
                for e in self.edges:
                    u, v = self.incidence[e]
                    if w == u:
                        other = v
                    elif w == v:
                        other = u
                    else:
                        continue
                    if other == w:
                        return False  # loop
                    if other not in color:
                        color[other] = 1 - color[w]
                        stack.append(other)
                    elif color[other] == color[w]:
                        return False
        return True


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of template validation, itemized per edge, vertex, and polytope.

    `valid` is the conjunction of all itemized checks.  The classification
    flags are informational and do not affect validity; `orientable` is
    None for non-coorientable (loop-carrying) templates, whose
    orientability this toolkit does not decide.
    """

    valid: bool
    edge_condition1: dict
    vertex_condition2: dict
    polytope_delzant: dict
    acyclic: bool
    coorientable: bool
    orientable: bool | None
    messages: tuple = ()

    def summary(self) -> str:
        lines = ["verdict: valid" if self.valid else "verdict: INVALID"]
        for vid in sorted(self.polytope_delzant):
            ok = self.polytope_delzant[vid]
            lines.append(f"polytope at {vid}: {'Delzant' if ok else 'NOT Delzant'}")
        for eid in sorted(self.edge_condition1):
            ok = self.edge_condition1[eid]
            lines.append(f"condition (1) at edge {eid}: {'ok' if ok else 'FAIL'}")
        for vid in sorted(self.vertex_condition2):
            ok = self.vertex_condition2[vid]
            lines.append(f"condition (2) at vertex {vid}: {'ok' if ok else 'FAIL'}")
        flags = (
            f"acyclic={'yes' if self.acyclic else 'no'} "
            f"coorientable={'yes' if self.coorientable else 'no'} "
            f"orientable="
            + ("n/a" if self.orientable is None else ("yes" if self.orientable else "no"))
        )
        lines.append(flags)
        lines.extend(self.messages)
        return "\n".join(lines)


@dataclass(frozen=True)
class CutResult:
    """Everything produced by cutting a leaf off a template.

    `c_minus` is the removed leaf polytope, `c_plus` the remaining
    template, and `b` the shared fold facet rewritten as a full-dimensional
    polytope one dimension down (`fold_base`/`fold_basis` give the affine
    chart: y corresponds to fold_base + sum(y[k] * fold_basis[k])).  The
    attachment data is exactly what `radial_blow_up` needs to rebuild the
    original template.
    """

    c_minus: DelzantPolytope
    c_plus: "OrigamiTemplate"
    b: DelzantPolytope
    leaf_vertex: str
    leaf_facet: int
    attach_vertex: str
    attach_facet: int
    fold_base: tuple
    fold_basis: tuple


class OrigamiTemplate:
    """An origami template: a connected graph of Delzant polytopes glued on folds.

    Construction checks only structural integrity (references resolve,
    dimensions agree, the graph is connected) and raises MalformedTemplate
    otherwise; the geometric gluing conditions are evaluated by
    `validate()`, so that invalid-but-well-formed templates can be
    inspected and reported.  `polytope_ids` optionally remembers the file
    identifiers polytopes were defined under, to keep serialization stable.
    """

    def __init__(self, dimension, graph, psi_v, psi_e, polytope_ids=None):
        if not isinstance(graph, TemplateGraph):
            graph = TemplateGraph(*graph)
        if not graph.vertices:
            raise MalformedTemplate("a template needs at least one vertex")
        psi_v = dict(psi_v)
        if set(psi_v) != set(graph.vertices):
            raise MalformedTemplate("psi_v must assign exactly one polytope per graph vertex")
        for vid, p in psi_v.items():
            if not isinstance(p, DelzantPolytope):
                raise MalformedTemplate(f"vertex {vid}: not a DelzantPolytope")
            if p.dimension != dimension:
                raise DimensionError(
                    f"vertex {vid}: polytope dimension {p.dimension} != template dimension {dimension}"
                )
        psi_e = {e: tuple(fs) for e, fs in dict(psi_e).items()}
        if set(psi_e) != set(graph.edges):
            raise MalformedTemplate("psi_e must assign exactly one facet pair per edge")
        for eid, facets in psi_e.items():
            u, v = graph.ends(eid)
            if len(facets) != 2:
                raise MalformedTemplate(f"edge {eid}: needs one facet index per end")
            for w, f in zip((u, v), facets):
                if not isinstance(f, int) or not 0 <= f < len(psi_v[w].halfspaces):
                    raise MalformedTemplate(
                        f"edge {eid}: facet index {f!r} out of range for vertex {w}"
                    )
        components = graph.connected_components()
        if len(components) > 1:
            hint = "; ".join("{" + ", ".join(sorted(c)) + "}" for c in components)
            raise MalformedTemplate(f"template graph is disconnected: components {hint}")
        self._dim = dimension
        self._graph = graph
        self._psi_v = psi_v
        self._psi_e = psi_e
        self._polytope_ids = dict(polytope_ids) if polytope_ids else {}
        self._report = None

    # -- accessors -----------------------------------------------------------

    @property
    def dimension(self) -> int:
        return self._dim

    @property
    def graph(self) -> TemplateGraph:
        return self._graph

    @property
    def psi_v(self) -> dict:
        return dict(self._psi_v)

    @property
    def psi_e(self) -> dict:
        return dict(self._psi_e)

    @property
    def polytope_ids(self) -> dict:
        return dict(self._polytope_ids)

    def polytope(self, vid: str) -> DelzantPolytope:
        try:
            return self._psi_v[vid]
        except KeyError:
            raise MalformedTemplate(f"unknown template vertex {vid!r}") from None

    def edge_facets(self, eid: str) -> tuple:
        """The (first-end, second-end) facet indices of an edge's fold."""
        try:
            return self._psi_e[eid]
        except KeyError:
            raise MalformedTemplate(f"unknown template edge {eid!r}") from None

    def fold_entries(self, vid: str) -> tuple:
        """All (edge id, facet index) pairs of fold facets at a vertex.

        A loop edge contributes each distinct facet reference once.
        """
        entries = []
        for eid in self._graph.incident_edges(vid):
            u, v = self._graph.ends(eid)
            facets = self._psi_e[eid]
            for end, f in zip((u, v), facets):
                if end == vid and (eid, f) not in entries:
                    entries.append((eid, f))
        return tuple(entries)

    def fold_facet_indices(self, vid: str) -> frozenset:
        return frozenset(f for _, f in self.fold_entries(vid))

    def fold_vertex_set(self, eid: str) -> frozenset:
        """The geometric vertex set of an edge's fold facet (first-end copy)."""
        u, _ = self._graph.ends(eid)
        fu, _ = self._psi_e[eid]
        return self._psi_v[u].facet_vertex_sets[fu]

    def distinct_polytopes(self) -> tuple:
        out = []
        for p in self._psi_v.values():
            if p not in out:
                out.append(p)
        return tuple(out)

    # -- validation -----------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check the gluing conditions and classify the template; cached."""
        if self._report is not None:
            return self._report
        messages = []
        delzant = {}
        for vid in self._graph.vertices:
            p = self._psi_v[vid]
            try:
                ok = p.is_delzant()
            except NotSimple:
                ok = False
            delzant[vid] = ok
            if not ok:
                messages.append(f"polytope at {vid} is not Delzant")
        cond1 = {}
        for eid in self._graph.edges:
            u, v = self._graph.ends(eid)
            fu, fv = self._psi_e[eid]
            ok = agree_near_facet(self._psi_v[u], fu, self._psi_v[v], fv)
            cond1[eid] = ok
            if not ok:
                messages.append(
                    f"edge {eid}: polytopes at {u} and {v} do not agree near the fold"
                )
        cond2 = {}
        for vid in self._graph.vertices:
            p = self._psi_v[vid]
            by_edge = {}
            for eid, f in self.fold_entries(vid):
                by_edge.setdefault(eid, set()).add(f)
            ok = True
            eids = sorted(by_edge)
            for i, e1 in enumerate(eids):
                for e2 in eids[i + 1 :]:
                    for f1 in by_edge[e1]:
                        for f2 in by_edge[e2]:
                            if p.facet_vertex_sets[f1] & p.facet_vertex_sets[f2]:
                                ok = False
                                messages.append(
                                    f"vertex {vid}: fold facets of edges {e1} and {e2} intersect"
                                )
            cond2[vid] = ok
        coorientable = not self._graph.loops()
        report = ValidationReport(
            valid=all(delzant.values()) and all(cond1.values()) and all(cond2.values()),
            edge_condition1=cond1,
            vertex_condition2=cond2,
            polytope_delzant=delzant,
            acyclic=self._graph.is_acyclic(),
            coorientable=coorientable,
            orientable=self._graph.is_bipartite() if coorientable else None,
            messages=tuple(messages),
        )
        self._report = report
        return report

    def require_valid(self):
        report = self.validate()
        if not report.valid:
            raise InvalidTemplate("; ".join(report.messages) or "template is invalid")

    # -- classification ---------------------------------------------------------

    def is_acyclic(self) -> bool:
        """True iff the template graph has no cycle (loops and multi-edges included)."""
        self.require_valid()
        return self._graph.is_acyclic()

    def is_coorientable(self) -> bool:
        """True iff the template graph has no loop edge."""
        self.require_valid()
        return not self._graph.loops()

    def is_orientable(self) -> bool:
        """True iff the template graph is bipartite (no odd cycle).

        Only defined for coorientable templates; raises Unsupported on
        loop-carrying input.
        """
        self.require_valid()
        if self._graph.loops():
            raise Unsupported("orientability of non-coorientable (loop) templates is not decided")
        return self._graph.is_bipartite()

    # -- surgery -----------------------------------------------------------------

    def cut_leaf(self, vid: str) -> CutResult:
        """Split off a degree-1 vertex, returning the two pieces and the fold.

        Needs a valid acyclic template; the remainder keeps all other
        vertices and edges unchanged.
        """
        self.require_valid()
        if vid not in self._psi_v:
            raise MalformedTemplate(f"unknown template vertex {vid!r}")
        if not self._graph.is_acyclic():
            raise Unsupported("cutting is defined for acyclic templates only")
        degree = self._graph.degree(vid)
        if degree != 1:
            raise NotALeaf(f"vertex {vid} has degree {degree}, expected 1")
        (eid,) = self._graph.incident_edges(vid)
        u, v = self._graph.ends(eid)
        fu, fv = self._psi_e[eid]
        if u == vid:
            neighbor, leaf_facet, attach_facet = v, fu, fv
        else:
            neighbor, leaf_facet, attach_facet = u, fv, fu
        leaf_polytope = self._psi_v[vid]
        fold_polytope, base, basis = facet_as_polytope(leaf_polytope, leaf_facet)
        rest_vertices = tuple(w for w in self._graph.vertices if w != vid)
        rest_edges = tuple(e for e in self._graph.edges if e != eid)
        remainder = OrigamiTemplate(
            self._dim,
            TemplateGraph(
                rest_vertices,
                rest_edges,
                {e: self._graph.ends(e) for e in rest_edges},
            ),
            {w: self._psi_v[w] for w in rest_vertices},
            {e: self._psi_e[e] for e in rest_edges},
            polytope_ids={
                w: pid for w, pid in self._polytope_ids.items() if w != vid
            },
        )
        return CutResult(
            c_minus=leaf_polytope,
            c_plus=remainder,
            b=fold_polytope,
            leaf_vertex=vid,
            leaf_facet=leaf_facet,
            attach_vertex=neighbor,
            attach_facet=attach_facet,
            fold_base=base,
            fold_basis=basis,
        )

    def _fresh_id(self, prefix: str, taken) -> str:
        k = 0
        while f"{prefix}{k}" in taken:
            k += 1
        return f"{prefix}{k}"

    def __repr__(self):
        return (
            f"OrigamiTemplate(dim={self._dim}, vertices={len(self._graph.vertices)}, "
            f"edges={len(self._graph.edges)})"
        )


def radial_blow_up(t: OrigamiTemplate, p: DelzantPolytope, vid: str, f_t: int, f_p: int) -> OrigamiTemplate:
    """Attach a polytope to a template along an agreeing facet.

    Adds one new vertex carrying `p` and one new edge gluing facet `f_t`
    of the polytope at `vid` to facet `f_p` of `p`.  Raises
    ConditionOneViolation when the polytopes do not agree near the shared
    facet and ConditionTwoViolation when the new fold would meet an
    existing fold facet at `vid`.  The result is validated before it is
    returned.  Inverse to `cut_leaf` up to isomorphism.
    """
    t.require_valid()
    host = t.polytope(vid)
    if not isinstance(p, DelzantPolytope):
        raise MalformedTemplate("radial_blow_up needs a DelzantPolytope to attach")
    if p.dimension != t.dimension:
        raise DimensionError(
            f"cannot attach a {p.dimension}-dimensional polytope to a {t.dimension}-dimensional template"
        )
    if not 0 <= f_t < len(host.halfspaces):
        raise MalformedTemplate(f"facet index {f_t} out of range for vertex {vid}")
    if not 0 <= f_p < len(p.halfspaces):
        raise MalformedTemplate(f"facet index {f_p} out of range for the attached polytope")
    if not agree_near_facet(host, f_t, p, f_p):
        raise ConditionOneViolation(
            f"attached polytope does not agree with the polytope at {vid} near facet {f_t}"
        )
    new_fold = host.facet_vertex_sets[f_t]
    for eid, f in t.fold_entries(vid):
        if host.facet_vertex_sets[f] & new_fold:
            raise ConditionTwoViolation(
                f"new fold facet at {vid} intersects the fold facet of edge {eid}"
            )
    graph = t.graph
    new_vid = t._fresh_id("bu", set(graph.vertices))
    new_eid = t._fresh_id("be", set(graph.edges))
    incidence = {e: graph.ends(e) for e in graph.edges}
    incidence[new_eid] = (vid, new_vid)
    psi_v = t.psi_v
    psi_v[new_vid] = p
    psi_e = t.psi_e
    psi_e[new_eid] = (f_t, f_p)
    result = OrigamiTemplate(
        t.dimension,
        TemplateGraph(graph.vertices + (new_vid,), graph.edges + (new_eid,), incidence),
        psi_v,
        psi_e,
        polytope_ids=t.polytope_ids,
    )
    result.require_valid()
    return result


def isomorphic(t1: OrigamiTemplate, t2: OrigamiTemplate) -> bool:
    """Are two templates the same up to renaming vertices and edges?

    A graph isomorphism must match polytopes exactly (equal halfspace
    sets) and fold facet references end-by-end.
    """
    if t1.dimension != t2.dimension:
        return False
    g1, g2 = t1.graph, t2.graph
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False

    def edge_keys(t, mapping):
        # identify a fold facet by its halfspace, not its index, so that
        # reordering a polytope's halfspace list does not break matching
        keys = []
        for eid in t.graph.edges:
            u, v = t.graph.ends(eid)
            fu, fv = t.edge_facets(eid)
            hu = t.polytope(u).halfspaces[fu]
            hv = t.polytope(v).halfspaces[fv]
            ends = sorted(
                ((mapping[u], hu.normal, hu.offset), (mapping[v], hv.normal, hv.offset))
            )
            keys.append(tuple(ends))
        return sorted(keys)

    target = edge_keys(t2, {w: w for w in g2.vertices})
    candidates = {
        v1: [v2 for v2 in g2.vertices if t1.polytope(v1) == t2.polytope(v2)]
        for v1 in g1.vertices
    }
    order = sorted(g1.vertices, key=lambda v: len(candidates[v]))

    def assign(i, mapping, used):
        if i == len(order):
            return edge_keys(t1, mapping) == target
        v1 = order[i]
        for v2 in candidates[v1]:
            if v2 in used:
                continue
            if g1.degree(v1) != g2.degree(v2):
                continue
            mapping[v1] = v2
            if assign(i + 1, mapping, used | {v2}):
                return True
            del mapping[v1]
        return False

    return assign(0, {}, set())
