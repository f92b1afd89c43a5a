#!/usr/bin/env python3
"""Complex files and the command-line interface.

Complexes travel as small line-oriented text files: one `gen` line per
generator with its bigrading, one `d` line per nonzero differential.  The
same operations are scriptable through the knotcalc CLI.
"""

import tempfile
from pathlib import Path

from knotcalc import parse_complex_file, serialize_complex, standard_rep
from knotcalc.cli import run

# A complex that is locally trivial even though it has five generators: a
# square of length-3 arrows plus an isolated dot carrying both towers.
TEXT = """\
# square plus dot
gen a 0 -6
gen b -5 -5
gen c -6 0
gen d -1 -1
gen e 0 0
d b = U^3 a + V^3 c
d a = V^3 d
d c = U^3 d
"""

c = parse_complex_file(TEXT)
print("parsed:", c)
print("standard representative:", standard_rep(c).params or "()")

print("\nserialized back (comments normalize away):")
print(serialize_complex(c))

# The CLI drives the same library; every command exits 0/1/2 for
# success / domain error / usage error.
with tempfile.TemporaryDirectory() as tmp:
    fig2 = Path(tmp) / "fig2.cx"
    fig2.write_text(TEXT)
    a = Path(tmp) / "a.cx"
    b = Path(tmp) / "b.cx"

    print("$ knotcalc validate fig2.cx")
    run(["validate", str(fig2)])

    print("\n$ knotcalc std 1,-2,2,-1 -o a.cx ; knotcalc std 1,-1 -o b.cx")
    run(["std", "1,-2,2,-1", "-o", str(a)])
    run(["std", "1,-1", "-o", str(b)])

    print("$ knotcalc cmp a.cx b.cx")
    run(["cmp", str(a), str(b)])

    print("\n$ knotcalc inv --expr 'T(3,4)' --json")
    run(["inv", "--expr", "T(3,4)", "--json"])

    print("\n$ knotcalc inv --expr 'Cable(D;3,4) - T(3,4)'")
    run(["inv", "--expr", "Cable(D;3,4) - T(3,4)"])

    print("\n$ knotcalc lspace 't^8-t^7+t^4-t+1'")
    run(["lspace", "t^8-t^7+t^4-t+1"])
