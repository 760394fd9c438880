"""Render every 2-dimensional bundled template to SVG via the CLI.

Polytopes are drawn superimposed at their true coordinates with fold
facets dashed; --explode pulls the copies apart for legibility.

Run:  python3 demos/render_gallery.py
"""

from pathlib import Path

from toric_origami import corpus_names, corpus_path, load_corpus
from toric_origami.cli import run

out_dir = Path(__file__).resolve().parent / "output"
out_dir.mkdir(exist_ok=True)

for name in corpus_names():
    t = load_corpus(name)
    if t.dimension != 2:
        print(f"{name}: skipped (dimension {t.dimension})")
        continue
    for explode, suffix in ((0.0, ""), (0.35, "_exploded")):
        target = out_dir / f"{name}{suffix}.svg"
        code = run(
            [
                "render",
                str(corpus_path(name)),
                "--svg",
                str(target),
                "--explode",
                str(explode),
            ]
        )
        assert code == 0, (name, code)
print(f"gallery in {out_dir}")
