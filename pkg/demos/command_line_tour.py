"""
The command line in one sitting
===============================

Every subcommand emits deterministic JSON; checks signal through exit
codes (0 pass, 1 failed check, 2 bad input, 3 over budget).  This tour
drives the same entry point the console script uses.
"""

import json
import tempfile
from pathlib import Path

from qgrass.cli import main

work = Path(tempfile.mkdtemp(prefix="qgrass-tour-"))


def run(*argv):
    print("$ qgrass", " ".join(argv))
    rc = main(list(argv))
    print("  -> exit", rc)
    return rc


run("count", "--q", "2", "--m", "4", "--alpha", "2,4", "--polynomial")
run("alpha-nc", "--alpha", "1,3,4", "--m", "5")
run("dual-alpha", "--alpha", "1,2", "--m", "4")

# generated objects land in files and feed the comparison verbs
flag_a = str(work / "a.json")
flag_b = str(work / "b.json")
run("gen-flag", "--q", "2", "--m", "4", "--alpha", "1,4", "--seed", "2", "-o", flag_a)
run("gen-flag", "--q", "2", "--m", "4", "--alpha", "1,4", "--seed", "8", "-o", flag_b)
run("eq", flag_a, flag_b, "--witness")

smap = str(work / "map.json")
run("gen-map", "--q", "2", "--m", "4", "--seed", "4", "--dual", "-o", smap)
run("image", smap, flag_a)

# a small campaign and a census, both reading as machine-friendly JSON
run("verify", "redundancy", "--q", "2", "--m", "3", "--l", "1", "--flags-per-alpha", "3")
run("census", "--q", "2", "--m", "3", "--alpha", "1,3", "--oracle", "full")

# the budget guard refuses impossible enumerations with exit code 3
rc = run("points", "--q", "2", "--m", "30", "--l", "15")
assert rc == 3

# but the closed-form count of the same space is immediate
run("count", "--q", "2", "--m", "30", "--l", "15")
