"""Overlay several walks in one picture.

Comparing traces is where the task becomes interesting: 1/14 and 1/7 share a
denominator structure and close up, 1/3 escapes in a straight line, and pi
never settles.  The overlay shares one viewport and writes a legend with
each classification.
"""

import os

from huella import overlay_svg, walk_number

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

bundles = [
    walk_number("1/14", n=240, vector_map="decagon"),
    walk_number("1/7", n=240, vector_map="decagon"),
    walk_number("1/3", n=240, vector_map="decagon"),
    walk_number("pi", n=240, vector_map="decagon"),
]
for bundle in bundles:
    print(f"{bundle.number:6s}", bundle.classification)

path = os.path.join(OUT, "compare.svg")
with open(path, "w") as fh:
    fh.write(overlay_svg(bundles))
print("wrote", path)
