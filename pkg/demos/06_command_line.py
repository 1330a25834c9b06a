"""The command-line front end on the bundled problem files.

Equivalent shell commands::

    zsemiring solve demos/data/example_7x7.json
    zsemiring spectrum demos/data/example_7x7.json --format json
    zsemiring decompose demos/data/example_7x7.json demos/data/y1.json
"""

import os
from pathlib import Path

from zsemiring.cli import run

DATA = Path(__file__).parent / "data"
problem = str(DATA / "example_7x7.json")

for argv in (
    ["solve", problem],
    ["fnf", problem],
    ["spectrum", problem],
    ["star", problem],
    ["decompose", problem, str(DATA / "y1.json")],
    ["solve", problem, "--lambda", "0.5"],
):
    print("$ zsemiring", " ".join(os.path.relpath(a) if a.endswith(".json") else a for a in argv))
    code = run(argv)
    print(f"[exit {code}]\n")
