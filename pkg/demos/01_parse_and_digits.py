"""Exact decimal digits and period structure.

Every number enters as a plain expression: fractions, decimal literals,
sqrt(k), the constants pi and e, or a raw digit string.  Digits come from
exact integer arithmetic, so you can ask for as many as you like -- the
classic spreadsheet/CAS display limit does not apply here.
"""

from huella import digit_stream, parse_number, rational_period

# A fraction: 1/14 = 0.0714285714285..., one leading digit then a 6-cycle.
spec = parse_number("1/14")
print("1/14 ->", "".join(map(str, digit_stream(spec).take(30).digits)))

info = rational_period(spec)
print("preperiod:", info.preperiod, info.preperiod_digits)
print("period:   ", info.period_len, info.period_digits)

# The period length is the multiplicative order of 10 modulo the 2,5-free
# part of the denominator; 1/7 gives the famous 142857 cycle.
print("\n1/7 period:", rational_period(parse_number("1/7")).period_digits)

# Terminating expansions stop and say so.
batch = digit_stream(parse_number("1/8")).take(20)
print("\n1/8 ->", batch.digits, "terminated:", batch.terminated)

# Constants and roots stream exactly, resumably.
pi = digit_stream(parse_number("pi"))
print("\npi, first 20: ", "".join(map(str, pi.take(20).digits)))
print("pi, next 20:  ", "".join(map(str, pi.take(20).digits)))

root2 = digit_stream(parse_number("sqrt(2)"))
print("sqrt(2), 40:  ", "".join(map(str, root2.take(40).digits)))

# A long request is cheap: a million digits of 355/113 in well under a second.
batch = digit_stream(parse_number("355/113")).take(1_000_000)
print("\n355/113, digit #1,000,000 is", batch.digits[-1])
