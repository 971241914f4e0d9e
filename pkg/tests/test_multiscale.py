from fractions import Fraction

import pytest

from charkit.corpus import rng_for
from charkit.fourier import GridFunction
from charkit.multiscale import (
    RingAmbient,
    canonical_generator,
    enumerate_level_lines,
    forward_mod,
    hyperplane_mod,
    inverse_mod,
    is_level_l_wavelet,
    line_mod,
    multiscale_decompose,
    norm,
    unit_count,
    valuation,
    vector_valuation,
)
from charkit.scalars import Cyclotomic


def test_valuation_and_norm():
    a = RingAmbient(2, 2, 2)
    assert valuation(a, 2) == 1 and norm(a, 2) == Fraction(1, 2)
    assert valuation(a, 3) == 0 and norm(a, 3) == 1
    assert valuation(a, 0) == 2 and norm(a, 0) == 0  # sentinel for zero
    a9 = RingAmbient(3, 2, 1)
    assert valuation(a9, 6) == 1  # 6 = 3 * 2 with 2 a unit mod 9


def test_valuation_range_and_strata():
    for p in (2, 3):
        a = RingAmbient(p, 2, 1)
        q = p * p
        strata = {}
        for n in range(1, q):
            strata.setdefault(valuation(a, n), []).append(n)
        assert set(strata) == {0, 1}
        assert len(strata[0]) == q - p and len(strata[1]) == p - 1


def test_unit_count_matches_enumeration():
    for p, ell in [(2, 2), (3, 2), (2, 3)]:
        a = RingAmbient(p, ell, 1)
        enumerated = sum(1 for n in range(a.modulus) if valuation(a, n) == 0)
        assert enumerated == unit_count(a) == p ** ell - p ** (ell - 1)


def test_vector_valuation():
    a = RingAmbient(2, 2, 2)
    assert vector_valuation(a, (2, 1)) == 0
    assert vector_valuation(a, (2, 0)) == 1


def test_hyperplane_sizes_examples():
    a = RingAmbient(2, 2, 2)
    h = hyperplane_mod(a, (1, 0))
    assert len(h) == 4 and h == {(0, y) for y in range(4)}
    h2 = hyperplane_mod(a, (2, 0))
    assert len(h2) == 8 and h2 == {(x, y) for x in (0, 2) for y in range(4)}
    a9 = RingAmbient(3, 2, 2)
    assert len(hyperplane_mod(a9, (1, 3))) == 9


def test_hyperplane_sizes_all_nonzero_directions():
    a = RingAmbient(2, 2, 2)
    for v in a.points():
        if any(v):
            expected = 2 ** (2 * 1 + vector_valuation(a, v))
            assert len(hyperplane_mod(a, v)) == expected
    with pytest.raises(ValueError):
        hyperplane_mod(a, (0, 0))


def test_line_cardinality_and_levels():
    a = RingAmbient(2, 2, 2)
    for v in a.points():
        if any(v):
            line = line_mod(a, v)
            assert len(line.points()) == 2 ** line.level
            assert line.level == 2 - vector_valuation(a, v)


def test_canonical_generator_is_canonical():
    a = RingAmbient(2, 2, 2)
    for v in a.points():
        if not any(v):
            continue
        gen = canonical_generator(a, v)
        # same line, and every unit multiple canonicalizes identically
        assert line_mod(a, v).points() == line_mod(a, gen).points()
        for u in (1, 3):
            scaled = tuple(u * c % 4 for c in v)
            assert canonical_generator(a, scaled) == gen


def test_affine_line_nesting():
    # every affine level-2 line splits into 2 disjoint affine level-1 lines
    a = RingAmbient(2, 2, 2)
    q = 4
    level2 = [l for l in enumerate_level_lines(a) if l.level == 2]
    for line in level2:
        for w in a.points():
            affine = {tuple((c + s) % q for c, s in zip(x, w)) for x in line.points()}
            sub = line_mod(a, tuple(2 * c % q for c in line.generator))
            pieces = set()
            for x in affine:
                piece = frozenset(
                    tuple((c + s) % q for c, s in zip(y, x)) for y in sub.points()
                )
                pieces.add(piece)
            assert len(pieces) == 2
            assert set().union(*pieces) == affine
            assert sum(len(p) for p in pieces) == len(affine)


def test_transform_round_trip_exact():
    a = RingAmbient(2, 2, 2)
    for i in range(20):
        rng = rng_for(700, f"rt/{i}")
        vals = [Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))) for _ in range(16)]
        f = GridFunction(a, "rational", vals)
        F = forward_mod(f)
        assert inverse_mod(F) == f
        assert F.values[0].rational_part() == f.total() / 16


def test_transform_constant_and_delta():
    a = RingAmbient(2, 2, 2)
    Fc = forward_mod(GridFunction.constant(a, 1))
    assert Fc.values[0].rational_part() == 1
    assert all(v.is_zero() for v in Fc.values[1:])
    Fd = forward_mod(GridFunction.delta(a, a.origin()))
    assert all(v.rational_part() == Fraction(1, 16) for v in Fd.values)


def test_level_wavelet_from_hyperplane_family():
    a = RingAmbient(2, 2, 2)
    f = GridFunction.indicator(a, [x for x in a.points() if x[0] == 1])
    res = is_level_l_wavelet(f)
    assert res.is_wavelet and res.generator == (1, 0) and res.level == 2
    assert res.spatial_matches
    coeffs = dict(res.coeffs)
    assert coeffs[1] == 1 and coeffs[0] == 0
    # spectrum side: support inside the line through (1,0)
    F = forward_mod(f)
    line_pts = line_mod(a, (1, 0)).points()
    assert set(F.support()) <= set(line_pts)


def test_level_wavelet_absent_for_two_directions():
    a = RingAmbient(2, 2, 2)
    f1 = GridFunction.indicator(a, [x for x in a.points() if x[0] == 1])
    f2 = GridFunction.indicator(a, [x for x in a.points() if x[1] == 3])
    assert not is_level_l_wavelet(f1 + f2).is_wavelet


def test_level_wavelet_constant_flagged():
    a = RingAmbient(2, 2, 2)
    res = is_level_l_wavelet(GridFunction.constant(a, Fraction(3, 2)))
    assert res.is_wavelet and res.is_constant


def test_level_wavelet_modulated_offset_line():
    # spectrum on an affine line missing the origin: wavelet by the spectral
    # definition, but with no plain hyperplane form
    a = RingAmbient(2, 2, 2)
    vals = [Cyclotomic.zero(2, ell=2)] * 16
    vals[a.index_of((1, 1))] = Cyclotomic.one(2, ell=2)
    vals[a.index_of((1, 2))] = Cyclotomic.zeta(2, 1, ell=2)
    F = GridFunction(a, "cyclotomic", vals)
    f = inverse_mod(F)
    res = is_level_l_wavelet(f)
    assert res.is_wavelet and res.offset is not None and res.coeffs is None


def test_multiscale_constant():
    a = RingAmbient(2, 2, 2)
    c = GridFunction.constant(a, Fraction(7, 3))
    parts = multiscale_decompose(c)
    assert len(parts) == 1 and parts[0].is_constant
    assert parts[0].function == c


def test_multiscale_single_wavelet_returned_as_itself():
    a = RingAmbient(2, 2, 2)
    f = GridFunction.indicator(a, [x for x in a.points() if x[0] == 1])
    parts = multiscale_decompose(f)
    assert len(parts) == 1
    assert parts[0].function == f
    assert parts[0].level == 2 and parts[0].generator == (1, 0)


def test_multiscale_round_trip_2_2_2():
    a = RingAmbient(2, 2, 2)
    for i in range(100):
        rng = rng_for(701, f"ms/{i}")
        vals = [Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))) for _ in range(16)]
        f = GridFunction(a, "rational", vals)
        parts = multiscale_decompose(f)
        acc = None
        for part in parts:
            assert part.is_constant or part.level in (1, 2)
            acc = part.function if acc is None else acc + part.function
        assert acc == f


def test_multiscale_round_trip_3_2_1():
    a = RingAmbient(3, 2, 1)
    for i in range(100):
        rng = rng_for(702, f"ms91/{i}")
        vals = [Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))) for _ in range(9)]
        f = GridFunction(a, "rational", vals)
        parts = multiscale_decompose(f)
        acc = None
        for part in parts:
            acc = part.function if acc is None else acc + part.function
        assert acc == f


def test_multiscale_parts_are_level_wavelets():
    # every non-constant part has its spectrum inside one line through 0
    a = RingAmbient(2, 2, 2)
    rng = rng_for(703, "partcheck")
    vals = [Fraction(rng.randint(-9, 9)) for _ in range(16)]
    f = GridFunction(a, "rational", vals)
    for part in multiscale_decompose(f):
        if part.is_constant:
            continue
        F = forward_mod(part.function)
        line_pts = line_mod(a, part.generator).points()
        assert set(F.support()) <= set(line_pts)
        assert part.level == line_mod(a, part.generator).level


def test_exponent_three_smoke():
    # l = 3: three scales; transform and decomposition still exact
    a = RingAmbient(2, 3, 1)
    assert unit_count(a) == 4
    for v in range(1, 8):
        line = line_mod(a, (v,))
        assert len(line.points()) == 2 ** line.level
    rng = rng_for(704, "l3")
    vals = [Fraction(rng.randint(-9, 9), rng.choice((1, 2))) for _ in range(8)]
    f = GridFunction(a, "rational", vals)
    assert inverse_mod(forward_mod(f)) == f
    parts = multiscale_decompose(f)
    acc = None
    for part in parts:
        acc = part.function if acc is None else acc + part.function
    assert acc == f


def test_ring_ambient_validation():
    with pytest.raises(ValueError):
        RingAmbient(4, 2, 1)
    with pytest.raises(ValueError):
        RingAmbient(2, 0, 1)
    with pytest.raises(ValueError):
        RingAmbient(2, 2, 0)
