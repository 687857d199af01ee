#!/usr/bin/env python3
"""Regenerate the JSON fixtures under fixtures/.

The first three are hand-authored geometry; rnd_seed7 comes from the
instance generator so it stays in sync with `twocenter gen`.
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from twocenter.instances import dump_instance, generate  # noqa: E402

HERE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")


def write(name: str, text: str) -> None:
    path = os.path.join(HERE, name)
    with open(path, "w") as fh:
        fh.write(text)
    print("wrote", os.path.relpath(path))


def main() -> None:
    os.makedirs(HERE, exist_ok=True)
    write("sq4_qsym.json", json.dumps({
        "polygon": [[0, 0], [4, 0], [4, 4], [0, 4]],
        "points": [[1, 1], [1, 3], [3, 3], [3, 1]],
    }, indent=2) + "\n")
    write("l6_arms.json", json.dumps({
        "polygon": [[0, 0], [4, 0], [4, 2], [2, 2], [2, 4], [0, 4]],
        "points": [[3, 1], [3, 1.5], [1, 3], [1.5, 3]],
    }, indent=2) + "\n")
    # self-crossing quad; must be rejected by validation
    write("bowtie.json", json.dumps({
        "polygon": [[0, 0], [4, 4], [4, 0], [0, 4]],
        "points": [[1, 1]],
    }, indent=2) + "\n")
    write("rnd_seed7.json", dump_instance(generate("random", 14, 8, 7)) + "\n")


if __name__ == "__main__":
    main()
