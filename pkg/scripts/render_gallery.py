#!/usr/bin/env python3
"""Solve and render a small gallery of instances to out/gallery/."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from twocenter.driver import two_center  # noqa: E402
from twocenter.instances import generate, load_instance  # noqa: E402
from twocenter.polygon import SimplePolygon  # noqa: E402
from twocenter.svg import render_svg  # noqa: E402

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")
OUT = os.path.join(ROOT, "out", "gallery")


def render_one(name, inst) -> None:
    poly = SimplePolygon(inst.polygon)
    sol = two_center(poly, inst.points)
    doc = render_svg(poly, inst.points, centers=(sol.c1, sol.c2),
                     radius=sol.radius)
    path = os.path.join(OUT, name + ".svg")
    with open(path, "w") as fh:
        fh.write(doc)
    print(f"{name:24} radius={sol.radius:.6f} -> {os.path.relpath(path)}")


def main() -> None:
    os.makedirs(OUT, exist_ok=True)
    for fix in ("sq4_qsym", "l6_arms", "rnd_seed7"):
        inst = load_instance(os.path.join(ROOT, "fixtures", fix + ".json"))
        render_one(fix, inst)
    for fam in ("convex", "star", "comb", "random"):
        for seed in (1, 2):
            render_one(f"{fam}_{seed}", generate(fam, 14, 7, seed))


if __name__ == "__main__":
    main()
