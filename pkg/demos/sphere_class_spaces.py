"""The folded-sphere family: graphs, Hilbert functions, and class membership.

Each template glues two copies of a simplex along their slanted facet.
The resulting class module is free on two generators — the constant
tuple and a top-degree tuple supported at one fixed point.

Run:  python3 demos/sphere_class_spaces.py
"""

from toric_origami import (
    ClassTuple,
    check_membership,
    class_from_polynomials,
    generator_degrees,
    hilbert_function,
    load_corpus,
    moment_graph,
)

for n, name in ((1, "s2"), (2, "s4"), (3, "s6")):
    g = moment_graph(load_corpus(name))
    print(f"{name} (rank {n}):")
    for e in g.edges:
        a, b = e.endpoints
        print(f"  edge {a.key} -- {b.key}, weight {e.weight}, folded={e.folded}")
    print(f"  {hilbert_function(g, n + 1)}")
    print(f"  generators appear in degrees {generator_degrees(g)}")

    ones = ClassTuple(0, ((1,), (1,)))
    top = class_from_polynomials(g, n, [{(1,) * n: 1}, {}])
    for label, c in (("constant tuple", ones), ("top-degree tuple", top)):
        verdict = "member" if check_membership(g, c) else "NOT a member"
        print(f"  {label}: {verdict}")

    # a near miss: the same degree concentrated on one variable fails
    if n >= 2:
        skew = class_from_polynomials(g, n, [{(n,) + (0,) * (n - 1): 1}, {}])
        result = check_membership(g, skew)
        print(
            "  skewed tuple rejected at edge index "
            f"{result.violating_index} (weight {result.violating_edge.weight})"
        )
    print()
