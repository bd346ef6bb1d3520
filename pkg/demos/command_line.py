"""
The command-line tool on the bundled fixture files.  Equivalent shell
commands are printed before each run.

    python3 demos/command_line.py
"""

import tempfile

from functorhh.cli import run

with tempfile.TemporaryDirectory() as d:
    run(["fixtures", d])
    for argv in (
        ["hh", "--monoid", f"{d}/dual.json", "--bimodule", "self", "--max-degree", "3", "--at", "all"],
        ["separability", "--monoid", f"{d}/m2.json"],
        ["extension", "--monoid", f"{d}/dual.json", "--cocycle", f"{d}/dual_cocycle2.json"],
        ["les", "--monoid", f"{d}/dual.json", "--max-degree", "2"],
        ["validate", f"{d}/broken_category.json"],
    ):
        print("$ functorhh", " ".join(a.replace(d + "/", "") for a in argv))
        code = run(argv)
        print(f"(exit {code})\n")
