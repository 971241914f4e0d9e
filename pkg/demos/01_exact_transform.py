"""Exact Fourier transforms on Z_p^d.

The transform of a rational-valued function lives in the cyclotomic field
Q(zeta_p), and charkit computes it there exactly: zero means zero, and
round trips reproduce the input bit for bit.
"""

from fractions import Fraction

from charkit import Ambient, GridFunction, convolve, forward, forward_naive, inverse

ambient = Ambient(3, 2)  # the 9-point grid Z_3 x Z_3

# The constant function transforms to a point mass at the origin.
f = GridFunction.constant(ambient, 1)
F = forward(f)
print("transform of the constant 1:")
for point, value in zip(ambient.points(), F.values):
    print(f"  F{point} = {value}")

# A point mass at (1,2) has a pure-phase spectrum; the value at (1,0) is
# zeta^2 / 9, an honest cyclotomic number with no floating error.
delta = GridFunction.delta(ambient, (1, 2))
D = forward(delta)
print("\nspectrum of a point mass at (1,2), sampled at (1,0):", D.value_at((1, 0)))

# Round trips are exact equality of fractions, not closeness.
g = GridFunction(ambient, "rational", [Fraction(k, 3) for k in range(9)])
assert inverse(forward(g)) == g
print("\ninverse(forward(g)) == g:", inverse(forward(g)) == g)

# The production transform factors into one pass per axis; the quadratic
# double loop stays around as an oracle and always agrees exactly.
assert forward(g).values == forward_naive(g).values
print("axis-pass transform == naive oracle:", True)

# Convolution turns into multiplication of spectra (with the p^d factor
# that this normalization carries).
h = convolve(g, delta)
print("\nconvolving with a point mass translates the function:")
print("  g(0,0) =", g.value_at((0, 0)), " (g * delta_(1,2))(1,2) =", h.value_at((1, 2)))
