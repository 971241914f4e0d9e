"""Eigenfunctions of the transform.

An indicator can be its own transform (up to a scalar) only for the empty
set or a Lagrangian subspace.  More generally every subspace V produces a
plus/minus eigenfunction pair, cosets produce eigenfunctions of the
conjugate transform, and any function expands over such pairs.
"""

import itertools
from fractions import Fraction

from charkit import (
    Ambient,
    GridFunction,
    Subspace,
    affine_eigenfunction_pair,
    eigen_expand,
    eigenfunction_pair,
    enumerate_lagrangian,
    self_dual_classify,
)
from charkit.eigen import eigen_residuals

a22 = Ambient(2, 2)

# Exhaustive scan of all 16 subsets of Z_2^2: only the empty set and the
# isotropic line {(0,0),(1,1)} are self-dual.
for r in range(5):
    for E in itertools.combinations(a22.points(), r):
        res = self_dual_classify(a22, E)
        if res.kind != "not_self_dual":
            print(f"self-dual: {set(E) or '{}'} -> {res.kind}, eigenvalue {res.eigenvalue}")

# Lagrangian subspaces exist only in even dimension; mod 5 the planar ones
# are spanned by (1,2) and (1,3) since 1 + 4 = 1 + 9 = 0.
print("\nLagrangian lines mod 5:", [L.basis for L in enumerate_lagrangian(Ambient(5, 2))])

# A plus/minus pair: forward(f+) = f+/p^{d/2} and forward(f-) = -f-/p^{d/2}.
a32 = Ambient(3, 2)
V = Subspace.span(a32, [(1, 0)])
pair = eigenfunction_pair(V)
print("\nplain pair residuals (exact path):", eigen_residuals(pair))
print("f+ values:", [str(v) for v in pair.plus.values])

# Shifting the subspace off the origin gives conjugate-transform
# eigenfunctions with cyclotomic phases.
shifted = affine_eigenfunction_pair(V, (1, 0))
print("conjugate pair residuals:", eigen_residuals(shifted))

# Any function is a combination of such pairs; the expansion of a rational
# function on an even-dimensional grid reassembles exactly.
f = GridFunction(a32, "rational", [Fraction(k * k, 4) for k in range(9)])
expansion = eigen_expand(f)
print(f"\nexpansion uses {len(expansion.terms)} pair terms; "
      f"exact reassembly: {expansion.evaluate() == f}")
