"""Bandwidth and wavelet decompositions.

The coarse bandwidth cbw(f) counts the lines through the origin carrying
spectrum.  Every function splits into one wavelet per active line (a
combination of the p parallel hyperplanes perpendicular to the line) plus
a constant, and the split is computable in closed form from hyperplane
masses.
"""

from charkit import bandwidth, decompose, is_wavelet
from charkit.corpus import staircase_function

# The staircase set {(x,y) : x + y >= p} is the sharp planar example: only
# three of the p+1 lines are active no matter the prime.
for p in (3, 5, 7):
    f = staircase_function(p)
    report = bandwidth(f)
    print(f"p={p}: cbw={report.cbw}, bw={report.bw}, bwd={report.bwd:.4f}, "
          f"lines={[l.rep for l in report.lines]}")

# Its reduced decomposition is a three-term closed form: weight i/p on the
# hyperplanes x = i and y = i, weight -i/p on x + y = i.
f = staircase_function(5)
dec = decompose(f, form="reduced")
print("\nreduced decomposition at p=5 (constant", dec.constant, "):")
for w in dec.parts:
    print(f"  direction {w.direction.rep}: coefficients {[str(c) for c in w.coeffs]}")
assert dec.evaluate() == f

# The same function in massless form: every part sums to zero and the
# constant carries the full mass.
massless = decompose(f, form="massless")
print("\nmassless form: constant =", massless.constant,
      " part masses =", [w.mass for w in massless.parts])

# A single hyperplane indicator is itself a wavelet; the detector returns
# its line.
check = is_wavelet(dec.parts[0].evaluate())
print("\nfirst part is a wavelet in direction:", check.line.rep)
