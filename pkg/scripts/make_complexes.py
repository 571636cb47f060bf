#!/usr/bin/env python3
"""Write the bundled example complexes as JSON files (the format `spline-reg
analyze` reads) into the given directory."""
import argparse
import pathlib

from splinereg.geometry import (
    ce1_complex,
    one_edge_complex,
    single_triangle,
    square_with_diagonals,
    star_complex,
    two_triangles,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", nargs="?", default="complexes")
    args = ap.parse_args()
    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    named = {
        "triangle.json": single_triangle(),
        "two_triangles.json": two_triangles(),
        "star6.json": star_complex(),
        "square_diagonals.json": square_with_diagonals(),
        "two_edge_path.json": ce1_complex(),
    }
    for a in range(3, 9):
        for b in range(a, 9):
            named[f"one_edge_{a}{b}.json"] = one_edge_complex(a, b)
    for name, c in sorted(named.items()):
        (out / name).write_text(c.to_json() + "\n")
        print(f"wrote {out / name}")


if __name__ == "__main__":
    main()
