"""Face posets of glued orbit spaces, and the acyclicity dichotomy.

A face of the orbit space is a compatible family of polytope faces,
identified across folds.  For tree templates every face's template
subgraph is again a tree; one cycle anywhere breaks that for the top
face.  The poset is also exported as DOT (covering relations only).

Run:  python3 demos/orbit_space_poset.py
"""

from pathlib import Path

from toric_origami import (
    face_poset,
    face_poset_dot,
    is_face_acyclic,
    load_corpus,
)

for name in ("hirzebruch", "torus", "oddcycle3"):
    t = load_corpus(name)
    poset = face_poset(t)
    print(f"{name}: {len(poset)} face(s)")
    for d in range(t.dimension + 1):
        row = poset.by_dimension(d)
        if not row:
            continue
        spans = ", ".join("+".join(f.member_vertices()) for f in row)
        print(f"  dim {d}: {len(row)} face(s) spanning {spans}")
    print(f"  every face subgraph a tree: {is_face_acyclic(t)}")
    print()

out_dir = Path(__file__).resolve().parent / "output"
out_dir.mkdir(exist_ok=True)
target = out_dir / "hirzebruch_poset.dot"
target.write_text(face_poset_dot(load_corpus("hirzebruch")), encoding="utf-8")
print(f"wrote {target} (render with: dot -Tsvg {target.name})")
