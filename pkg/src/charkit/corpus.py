"""Seed-driven test corpus shared by the verification suites and the tests.

One generator definition for everything: rational values are uniform
small-numerator fractions, indicator sets are uniform random subsets.
Seeding goes through ``rng_for`` so each suite draws from its own stream
and reports stay byte-identical for a fixed seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .fourier import COMPLEX, GridFunction
from .geometry import Ambient, Subspace
from .scalars import Cyclotomic

DENOMINATORS = (1, 2, 3)
NUMERATOR_BOUND = 9


def rng_for(seed: int, label: str) -> random.Random:
    """Independent deterministic stream per (seed, label)."""
    return random.Random(f"{seed}/{label}")


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(
        rng.randint(-NUMERATOR_BOUND, NUMERATOR_BOUND), rng.choice(DENOMINATORS)
    )


def random_rational_function(ambient, rng: random.Random) -> GridFunction:
    return GridFunction(
        ambient, "rational", [random_fraction(rng) for _ in range(ambient.size)]
    )


def random_cyclotomic_function(ambient, rng: random.Random) -> GridFunction:
    p, ell = ambient.p, ambient.ell
    degree = p ** (ell - 1) * (p - 1)
    vals = [
        Cyclotomic(p, [Fraction(rng.randint(-3, 3)) for _ in range(degree)], ell)
        for _ in range(ambient.size)
    ]
    return GridFunction(ambient, "cyclotomic", vals)


def random_complex_function(ambient, rng: random.Random) -> GridFunction:
    vals = [
        complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(ambient.size)
    ]
    return GridFunction(ambient, COMPLEX, vals)


def random_subset(ambient, rng: random.Random, nonempty: bool = False) -> frozenset:
    pts = ambient.points()
    while True:
        chosen = frozenset(x for x in pts if rng.random() < 0.5)
        if chosen or not nonempty:
            return chosen


def random_indicator(ambient, rng: random.Random, nonempty: bool = False):
    members = random_subset(ambient, rng, nonempty)
    return GridFunction.indicator(ambient, members), members


def random_point(ambient, rng: random.Random, nonzero: bool = False):
    m = ambient.modulus
    while True:
        pt = tuple(rng.randrange(m) for _ in range(ambient.d))
        if any(pt) or not nonzero:
            return pt


def random_subspace(ambient: Ambient, rng: random.Random, min_dim: int = 1) -> Subspace:
    target = rng.randint(min_dim, ambient.d)
    V = Subspace.zero(ambient)
    while V.dim < target:
        V = V.extend(random_point(ambient, rng, nonzero=True))
    return V


def random_density(ambient, rng: random.Random) -> GridFunction:
    """A probability density: nonnegative rational values of total mass 1."""
    raw = [Fraction(rng.randint(0, NUMERATOR_BOUND)) for _ in range(ambient.size)]
    if not any(raw):
        raw[rng.randrange(ambient.size)] = Fraction(1)
    total = sum(raw)
    return GridFunction(ambient, "rational", [v / total for v in raw])


def staircase_set(p: int) -> frozenset:
    """{(x, y) in {0..p-1}**2 : x + y >= p}, the sharp planar example with
    three active spectral lines."""
    return frozenset(
        (x, y) for x in range(p) for y in range(p) if x + y >= p
    )


def staircase_function(p: int) -> GridFunction:
    return GridFunction.indicator(Ambient(p, 2), staircase_set(p))
