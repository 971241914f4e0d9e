"""Spectral-support analytics: line support, coarse bandwidth, vanishing
certificates, equidistribution, the support-size inequality, and the
structural dichotomy for sets of small bandwidth.

The coarse bandwidth cbw(f) counts the lines through the origin on which
the transform of f does not vanish identically; bw(f) rescales it into
[0, 1] and bwd(f) is the real solution of cbw = (p**bwd - 1)/(p - 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import TheoremViolation
from .fourier import (
    COMPLEX,
    CYCLOTOMIC,
    RATIONAL,
    GridFunction,
    Spectrum,
    forward,
    inverse,
)
from .geometry import (
    Ambient,
    ProjectiveLine,
    Subspace,
    avoid_lines_subspace,
    enumerate_lines,
    enumerate_subspaces,
    is_compass_set,
    line_count,
    perp,
    translate_set,
    vscale,
)
from .scalars import Cyclotomic

# Granularity for comparing bandwidth dimensions (a derived float).
BWD_EPS = 1e-12


@dataclass(frozen=True)
class LineSupportProfile:
    """Per-line activity flags of a spectrum, plus the DC flag."""

    ambient: Ambient
    active: tuple  # ProjectiveLine, canonical order
    dc_active: bool
    approximate: bool

    @property
    def cbw(self) -> int:
        return len(self.active)


@dataclass(frozen=True)
class BandwidthReport:
    cbw: int
    bw: Fraction
    bwd: float
    lines: tuple
    dc_active: bool
    approximate: bool


def _value_is_zero(v, approximate: bool, tol) -> bool:
    if approximate:
        return abs(v) <= tol
    if isinstance(v, Cyclotomic):
        return v.is_zero()
    return v == 0


def support_profile(F: Spectrum, source_kind: str | None = None, tol=None) -> LineSupportProfile:
    """Classify every line as active or vanishing on the given spectrum.

    The whole punctured line is inspected, never a single sample.  For
    rational sources a mixed line (some zeros, some not) contradicts the
    vanishing principle and raises TheoremViolation.
    """
    ambient = F.ambient
    approximate = F.kind == COMPLEX
    if tol is None:
        from .scalars import DEFAULT_TOL

        tol = DEFAULT_TOL
    active = []
    for line in enumerate_lines(ambient):
        flags = [
            _value_is_zero(F.values[ambient.index_of(pt)], approximate, tol)
            for pt in line.punctured(ambient)
        ]
        if source_kind == RATIONAL and not approximate and any(flags) and not all(flags):
            raise TheoremViolation(
                f"rational source has a mixed line through {line.rep}: "
                "zero and nonzero values on one punctured line"
            )
        if not all(flags):
            active.append(line)
    dc = not _value_is_zero(F.values[0], approximate, tol)
    return LineSupportProfile(ambient, tuple(active), dc, approximate)


def bwd_of_cbw(cbw: int, p: int) -> float:
    return math.log((p - 1) * cbw + 1, p)


def report_from_profile(profile: LineSupportProfile) -> BandwidthReport:
    ambient = profile.ambient
    cbw = profile.cbw
    return BandwidthReport(
        cbw=cbw,
        bw=Fraction(cbw * (ambient.p - 1), ambient.size - 1),
        bwd=bwd_of_cbw(cbw, ambient.p),
        lines=profile.active,
        dc_active=profile.dc_active,
        approximate=profile.approximate,
    )


def bandwidth(f: GridFunction, tol=None) -> BandwidthReport:
    """Bandwidth report of f.  cbw = 0 exactly when f is constant."""
    profile = support_profile(forward(f), source_kind=f.kind, tol=tol)
    return report_from_profile(profile)


def constancy_from_compass(f: GridFunction) -> bool:
    """If the zero set of the transform is a compass set, f must be constant.

    Returns True in that case (after asserting constancy), False when the
    zero set is not a compass set; no claim is made then.
    """
    if f.kind != RATIONAL:
        raise ValueError("the compass criterion applies to rational-valued functions")
    ambient = f.ambient
    F = forward(f)
    zero_set = [
        pt for pt, v in zip(ambient.points(), F.values) if v.is_zero()
    ]
    if not is_compass_set(ambient, zero_set):
        return False
    if not f.is_constant():
        raise TheoremViolation(
            "transform zero set is a compass set but the function is not constant"
        )
    return True


def vanishing_certificate(f: GridFunction) -> Subspace | None:
    """A punctured subspace on which the transform of f vanishes.

    Combines the guaranteed construction (avoid the cbw active lines inside
    a subspace of dimension d-k+1) with a direct exhaustive search for the
    largest vanishing subspace at d <= 3, and returns the larger of the two.
    Returns None when every line is active.
    """
    if f.is_zero():
        raise ValueError("certificate undefined for the zero function")
    ambient = f.ambient
    p, d = ambient.p, ambient.d
    F = forward(f)
    profile = support_profile(F, source_kind=f.kind)
    if profile.cbw == line_count(ambient):
        return None

    if profile.approximate:
        from .scalars import DEFAULT_TOL as _tol
    else:
        _tol = 0.0

    def spectrum_vanishes_on(W: Subspace) -> bool:
        return all(
            _value_is_zero(F.values[ambient.index_of(x)], profile.approximate, _tol)
            for x in W.nonzero_points()
        )

    cbw = profile.cbw
    k = 1
    while cbw >= (p ** k - 1) // (p - 1):
        k += 1
    best = avoid_lines_subspace(ambient, profile.active, d - k)
    if d <= 3:
        for dim in range(d, best.dim - 1, -1):
            found = next(
                (
                    W
                    for W in enumerate_subspaces(ambient, dim)
                    if spectrum_vanishes_on(W)
                ),
                None,
            )
            if found is not None:
                best = found if found.dim > best.dim else best
                break
    if not spectrum_vanishes_on(best):
        raise AssertionError("certificate construction produced a non-vanishing subspace")
    return best


@dataclass(frozen=True)
class EquidistributionResult:
    equidistributed: bool
    common_mass: object | None
    masses: tuple
    spectrum_vanishes: bool


def equidistribution_check(f: GridFunction, V: Subspace) -> EquidistributionResult:
    """Masses of f over the cosets of the perpendicular of V are all equal
    exactly when the transform of f vanishes on the punctured V.

    Both sides are computed independently; disagreement raises
    TheoremViolation because it would falsify the equidistribution theorem.
    """
    ambient = f.ambient
    if V.ambient != ambient:
        raise ValueError("subspace lives on a different grid")
    if V.dim == 0:
        raise ValueError("equidistribution requires a nonzero subspace")
    W = perp(V)
    buckets: dict = {}
    for pt, v in zip(ambient.points(), f.values):
        key = W.reduce(pt)
        if key in buckets:
            buckets[key] = buckets[key] + v
        else:
            buckets[key] = v
    masses = tuple(buckets[key] for key in sorted(buckets))
    if f.kind == COMPLEX:
        from .scalars import complex_close

        equal = all(complex_close(m, masses[0]) for m in masses)
    else:
        equal = all(m == masses[0] for m in masses)
    F = forward(f)
    if f.kind == COMPLEX:
        from .scalars import DEFAULT_TOL

        vanishes = all(
            abs(F.values[ambient.index_of(x)]) <= DEFAULT_TOL
            for x in V.nonzero_points()
        )
    else:
        vanishes = all(
            F.values[ambient.index_of(x)].is_zero() for x in V.nonzero_points()
        )
    if equal != vanishes:
        raise TheoremViolation(
            "equidistribution biconditional failed: "
            f"masses equal={equal}, punctured-subspace vanishing={vanishes}"
        )
    return EquidistributionResult(
        equidistributed=equal,
        common_mass=masses[0] if equal else None,
        masses=masses,
        spectrum_vanishes=vanishes,
    )


@dataclass(frozen=True)
class UncertaintyReport:
    size: int
    cbw: int
    lhs: int
    rhs: int
    holds: bool
    bwd: float
    formal_dim: float
    dim_bound_holds: bool


def uncertainty_check(ambient: Ambient, E) -> UncertaintyReport:
    """((p-1)*cbw(E) + 1) * |E| >= p**d, plus the dimension form
    bwd(E) + log_p|E| >= d."""
    members = frozenset(tuple(c % ambient.p for c in x) for x in E)
    if not members:
        raise ValueError("the inequality concerns nonempty sets")
    rep = bandwidth(GridFunction.indicator(ambient, members))
    lhs = ((ambient.p - 1) * rep.cbw + 1) * len(members)
    rhs = ambient.size
    formal_dim = math.log(len(members), ambient.p)
    return UncertaintyReport(
        size=len(members),
        cbw=rep.cbw,
        lhs=lhs,
        rhs=rhs,
        holds=lhs >= rhs,
        bwd=rep.bwd,
        formal_dim=formal_dim,
        dim_bound_holds=rep.bwd + formal_dim >= ambient.d - BWD_EPS,
    )


@dataclass(frozen=True)
class SetClassification:
    kind: str  # "union_of_parallel_lines" | "cbw_exceeds_d"
    cbw: int
    direction: tuple | None = None


def classify_small_cbw_set(ambient: Ambient, E) -> SetClassification:
    """Every set with cbw <= d is a union of parallel affine lines.

    The direction is found by translation invariance (E + u = E); failure
    for every direction while cbw <= d would falsify the dichotomy and
    raises TheoremViolation.
    """
    members = frozenset(tuple(c % ambient.p for c in x) for x in E)
    rep = bandwidth(GridFunction.indicator(ambient, members))
    if rep.cbw > ambient.d:
        return SetClassification(kind="cbw_exceeds_d", cbw=rep.cbw)
    for line in enumerate_lines(ambient):
        if translate_set(members, line.rep, ambient.p) == members:
            return SetClassification(
                kind="union_of_parallel_lines", cbw=rep.cbw, direction=line.rep
            )
    raise TheoremViolation(
        f"set with cbw={rep.cbw} <= d={ambient.d} is not a union of parallel lines"
    )


def inverse_phi(ambient: Ambient, dc, seeds) -> GridFunction:
    """Rebuild the unique rational function with the given average and one
    spectrum seed per line.

    ``seeds`` maps ProjectiveLine (canonical representatives) to Cyclotomic
    or rational values; absent lines default to zero.  The full spectrum is
    the equivariant extension F(r*m) = g_r(seed) and the result of
    inverting it is exactly rational.
    """
    p = ambient.p
    zero = Cyclotomic.zero(p)
    values = [zero] * ambient.size
    values[0] = Cyclotomic.from_rational(p, Fraction(dc))
    for line, seed in seeds.items():
        if not isinstance(line, ProjectiveLine):
            line = ProjectiveLine(tuple(line))
        z = seed if isinstance(seed, Cyclotomic) else Cyclotomic.from_rational(p, seed)
        for r in range(1, p):
            pt = vscale(r, line.rep, p)
            values[ambient.index_of(pt)] = z.galois(r)
    f = inverse(Spectrum(ambient, CYCLOTOMIC, values))
    if f.kind != RATIONAL:
        raise AssertionError("equivariant spectrum did not invert to a rational function")
    return f
