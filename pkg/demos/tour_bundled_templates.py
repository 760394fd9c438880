"""Walk the bundled templates and print each one's vital signs.

Run:  python3 demos/tour_bundled_templates.py
"""

from toric_origami import (
    NoFixedPoints,
    Unsupported,
    betti_numbers,
    corpus_names,
    load_corpus,
    moment_graph,
)

for name in corpus_names():
    t = load_corpus(name)
    report = t.validate()
    flags = []
    flags.append("tree" if report.acyclic else "cyclic")
    flags.append("coorientable" if report.coorientable else "has a loop fold")
    if report.orientable is not None:
        flags.append("orientable" if report.orientable else "non-orientable")
    print(f"{name}:")
    print(
        f"  dimension {t.dimension}, "
        f"{len(t.graph.vertices)} polytope(s), {len(t.graph.edges)} fold(s); "
        + ", ".join(flags)
    )
    try:
        g = moment_graph(t)
    except NoFixedPoints:
        print("  free torus action: no fixed points, nothing to anchor a graph")
        continue
    except Unsupported as exc:
        print(f"  refused: {exc}")
        continue
    folded = sum(1 for e in g.edges if e.folded)
    print(
        f"  moment graph: {len(g.fixed_points)} fixed point(s), "
        f"{len(g.edges)} edge(s) ({folded} folded)"
    )
    print(f"  {betti_numbers(g)}")
