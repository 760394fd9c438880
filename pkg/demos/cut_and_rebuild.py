"""Cut a leaf off the three-square chain, inspect the pieces, and rebuild.

Cutting a degree-1 template vertex yields the removed polytope, the
remaining template, and the shared fold facet as a polytope one
dimension down.  Radial blow-up is the inverse, up to isomorphism.

Run:  python3 demos/cut_and_rebuild.py
"""

from toric_origami import (
    fixed_points,
    isomorphic,
    load_corpus,
    radial_blow_up,
)

t = load_corpus("chain3")
print(f"start: {t!r}, fixed points: {len(fixed_points(t))}")

result = t.cut_leaf("v1")
print(f"cut leaf {result.leaf_vertex} (facet {result.leaf_facet}):")
print(f"  removed polytope: {len(result.c_minus.vertices)} vertices")
print(f"  remaining template: {result.c_plus!r}")
print(
    f"  fold facet as a {result.b.dimension}-dimensional polytope "
    f"with {len(result.b.vertices)} vertices"
)

# the count of fixed points is conserved by the surgery:
lhs = len(fixed_points(t))
rhs = (
    len(fixed_points(result.c_plus))
    + len(result.c_minus.vertices)
    - 2 * len(result.b.vertices)
)
print(f"fixed-point bookkeeping: {lhs} == {rhs}")

rebuilt = radial_blow_up(
    result.c_plus,
    result.c_minus,
    result.attach_vertex,
    result.attach_facet,
    result.leaf_facet,
)
print(f"blow-up restores the template: isomorphic={isomorphic(rebuilt, t)}")
