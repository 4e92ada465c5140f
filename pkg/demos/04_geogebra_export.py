"""Emit a GeoGebra command script for a walk.

Three lines: the digit list, the point list, and the Polyline command.
Paste them into GeoGebra's input bar (or load via a script) to rebuild the
trace there -- including expansions far longer than GeoGebra's own division
produces.
"""

import os

from huella import to_geogebra, walk_number

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

bundle = walk_number("1/14", n=7, vector_map="decagon")
script = to_geogebra(bundle)
print("--- 1/14, 7 digits ---")
print(script)

bundle = walk_number("sqrt(2)", n=2000, vector_map="decagon")
path = os.path.join(OUT, "sqrt2.ggb.txt")
with open(path, "w") as fh:
    fh.write(to_geogebra(bundle))
print(f"wrote a 2000-step script to {path}")

bundle = walk_number("e", n=500, vector_map="decagon")
lines = to_geogebra(bundle).splitlines()
print("e digit list starts:", lines[0][:60], "...")
print("last line:          ", lines[2])
