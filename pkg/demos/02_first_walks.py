"""Build digit walks and render them as SVG.

Each digit 0-9 owns a fixed plane vector; the walk adds them in digit order.
The builtin "decagon" map uses ten unit vectors at 36-degree steps (opposite
digits cancel exactly); "lattice" uses integer vectors so every point is
exact.  The trace of a repeating decimal repeats; pi's trace wanders.
"""

import os

from huella import to_svg, walk_number

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

# The closed hexagonal orbit of 1/14 under the lattice map: drift over one
# period is exactly (0, 0), so the walk loops forever through 7 points.
bundle = walk_number("1/14", n=600, vector_map="lattice")
print("1/14:", bundle.classification)
with open(os.path.join(OUT, "huella_1_14.svg"), "w") as fh:
    fh.write(to_svg(bundle))

# 1/3 repeats digit 3 forever: a straight escape along v3.
bundle = walk_number("1/3", n=90, vector_map="decagon")
print("1/3: ", bundle.classification)
with open(os.path.join(OUT, "huella_1_3.svg"), "w") as fh:
    fh.write(to_svg(bundle))

# pi: ten thousand exact digits, no repetition found (which is a statement
# about the searched horizon, not a proof of irrationality).
bundle = walk_number("pi", n=10_000, vector_map="decagon")
print("pi:  ", bundle.classification)
with open(os.path.join(OUT, "huella_pi.svg"), "w") as fh:
    fh.write(to_svg(bundle))

print("wrote SVGs to", OUT)
