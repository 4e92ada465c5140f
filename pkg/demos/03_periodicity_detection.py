"""Translational-symmetry detection, with and without arithmetic help.

For rationals the period is known from the denominator and the detector is a
cross-check.  For everything else the detector works alone: digit-string
border analysis proposes candidate lags, a short exhaustive scan covers maps
where distinct digits share vectors, and each candidate is verified from
exact digit counts.
"""

from huella import (VectorMap, build_walk, builtin_map, classify_walk,
                    detect_translation, digit_stream, parse_number)

lattice = builtin_map("lattice")

# A rational with a closed orbit: lag 6, drift (0,0).
spec = parse_number("1/14")
path = build_walk(digit_stream(spec).take(600).digits, lattice)
print("1/14 detector:", detect_translation(path, max_lag=200))

# A drifting rational: 1/3 walks straight along v3 (lag 1).
spec = parse_number("1/3")
path = build_walk(digit_stream(spec).take(100).digits, lattice)
print("1/3 detector: ", detect_translation(path, max_lag=30))

# pi at a 10,000-digit horizon: conclusively no lag up to 2000.
spec = parse_number("pi")
path = build_walk(digit_stream(spec).take(10_000).digits, builtin_map("decagon"))
print("pi detector:  ", detect_translation(path, max_lag=2000))

# NoPeriodFound never claims irrationality -- it names its horizon:
print("pi class:     ", classify_walk(spec, path, max_lag=2000))

# A degenerate map: every digit moves by (1, 1), so even pi's walk is
# geometrically periodic with lag 1.  The short-lag scan catches this.
flat = VectorMap("flat", "exact", tuple([(1, 1)] * 10))
path = build_walk(digit_stream(spec).take(400).digits, flat)
print("pi on flat map:", detect_translation(path, max_lag=100))

# Too short a horizon is reported honestly as inconclusive, not negative.
path = build_walk(digit_stream(spec).take(120).digits, builtin_map("decagon"))
print("pi, 120 digits, max_lag 100:", detect_translation(path, max_lag=100))
