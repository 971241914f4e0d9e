"""What spectral support says about spatial structure.

Four interlocking facts: a set with small bandwidth is a union of parallel
lines; spectra vanishing on a punctured subspace force equidistribution
over the perpendicular cosets; bandwidth and size obey an uncertainty
inequality; and a compass-set zero locus forces constancy.
"""

import itertools
from fractions import Fraction

from charkit import (
    Ambient,
    GridFunction,
    Subspace,
    classify_small_cbw_set,
    constancy_from_compass,
    equidistribution_check,
    uncertainty_check,
    vanishing_certificate,
)
from charkit.corpus import staircase_function, staircase_set

ambient = Ambient(3, 2)

# Dichotomy: a diagonal line has tiny bandwidth and a translation symmetry;
# the staircase has cbw = 3 > d = 2.
diagonal = {(t, (t + 1) % 3) for t in range(3)}
print("diagonal line:", classify_small_cbw_set(ambient, diagonal))
print("staircase:", classify_small_cbw_set(ambient, staircase_set(3)))

# Uncertainty: ((p-1) cbw + 1) |E| >= p^d for every nonempty set.
report = uncertainty_check(ambient, staircase_set(3))
print(f"\nuncertainty check: {report.lhs} >= {report.rhs} holds={report.holds}; "
      f"bwd + dim = {report.bwd:.3f} + {report.formal_dim:.3f} >= 2")

# Exhaustively at p=2, d=2 the bound holds for all 15 nonempty sets.
small = Ambient(2, 2)
holds = all(
    uncertainty_check(small, E).holds
    for r in range(1, 5)
    for E in itertools.combinations(small.points(), r)
)
print("holds for all 15 nonempty subsets of Z_2^2:", holds)

# Equidistribution: two full columns spread evenly over rows but not over
# columns, and the spectrum sees the difference.
E = {(0, y) for y in range(3)} | {(1, y) for y in range(3)}
f = GridFunction.indicator(ambient, E)
rows = equidistribution_check(f, Subspace.span(ambient, [(0, 1)]))
cols = equidistribution_check(f, Subspace.span(ambient, [(1, 0)]))
print(f"\nrow masses {rows.masses} equidistributed={rows.equidistributed}")
print(f"column masses {cols.masses} equidistributed={cols.equidistributed}")

# A certificate of vanishing: the staircase spectrum dies on the line (1,2).
W = vanishing_certificate(staircase_function(3))
print("\nvanishing certificate for the staircase:", W.basis)

# Compass criterion: if the zero set of the spectrum meets every line, the
# function must be constant.
print("constant detected from its compass zero set:",
      constancy_from_compass(GridFunction.constant(ambient, Fraction(1, 2))))
