"""Wavelets, the three decomposition forms, and tomography from hyperplane masses.

A wavelet in direction s is a combination sum_t c_t 1_{H_{s,t}} of the p
parallel affine hyperplanes perpendicular to s; its transform lives on the
line through s.  Conversely the masses m_{s,t}(f) = sum over H_{s,t} of f
determine the transform of f on that line, which is why a function is
recoverable from its complete mass table (the sinogram).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bandwidth import support_profile
from .errors import SinogramError
from .scalars import complex_close
from .fourier import (
    COMPLEX,
    CYCLOTOMIC,
    RATIONAL,
    GridFunction,
    Spectrum,
    _join_kind,
    _kind_of_scalar,
    forward,
    inverse,
)
from .geometry import Ambient, ProjectiveLine, dot, enumerate_lines, line_through, vscale
from .scalars import Cyclotomic

FORMS = ("plain", "reduced", "massless")


def _scalar_is_zero(value) -> bool:
    if isinstance(value, (complex, float)):
        return complex_close(value, 0)
    return value == 0


@dataclass(frozen=True)
class Wavelet:
    """Direction plus the p coefficients over its parallel hyperplane family."""

    ambient: Ambient
    direction: ProjectiveLine
    coeffs: tuple
    form: str = "plain"

    def __post_init__(self):
        if self.form not in FORMS:
            raise ValueError(f"unknown wavelet form {self.form!r}")
        if len(self.coeffs) != self.ambient.p:
            raise ValueError(f"need {self.ambient.p} coefficients")
        if self.form == "reduced" and not _scalar_is_zero(self.coeffs[0]):
            raise ValueError("a reduced wavelet has c_0 = 0")
        if self.form == "massless" and not _scalar_is_zero(
            sum(self.coeffs[1:], self.coeffs[0])
        ):
            raise ValueError("a massless wavelet has coefficient sum 0")

    @property
    def mass(self):
        total = self.coeffs[0]
        for c in self.coeffs[1:]:
            total = total + c
        return self.ambient.p ** (self.ambient.d - 1) * total

    def evaluate(self) -> GridFunction:
        """The grid function x -> c_{x.s}."""
        p = self.ambient.p
        s = self.direction.rep
        kind = RATIONAL
        for c in self.coeffs:
            kind = _join_kind(kind, _kind_of_scalar(c))
        vals = [self.coeffs[dot(x, s, p)] for x in self.ambient.points()]
        return GridFunction(self.ambient, kind, vals)


def masses(f: GridFunction, s) -> tuple:
    """The p hyperplane masses m_{s,t}(f) = sum of f over {x : x.s = t}."""
    ambient = f.ambient
    p = ambient.p
    s = tuple(c % p for c in s)
    if not any(s):
        raise ValueError("mass direction must be nonzero")
    sums = [f.zero_scalar()] * p
    for x, v in zip(ambient.points(), f.values):
        t = dot(x, s, p)
        sums[t] = sums[t] + v
    return tuple(sums)


@dataclass(frozen=True)
class MassTable:
    """All hyperplane masses of a function, one row per canonical direction."""

    ambient: Ambient
    rows: tuple  # ((ProjectiveLine, (m_0, ..., m_{p-1})), ...) in canonical order

    def row(self, line: ProjectiveLine) -> tuple:
        for ln, ms in self.rows:
            if ln == line:
                return ms
        raise KeyError(line)

    def directions(self) -> tuple:
        return tuple(ln for ln, _ in self.rows)

    def totals(self) -> tuple:
        out = []
        for _, ms in self.rows:
            total = ms[0]
            for m in ms[1:]:
                total = total + m
            out.append(total)
        return tuple(out)

    def total(self):
        return self.totals()[0]

    def is_consistent(self) -> bool:
        totals = self.totals()
        if any(isinstance(t, (complex, float)) for t in totals):
            return all(complex_close(t, totals[0]) for t in totals)
        return all(t == totals[0] for t in totals)


def mass_table(f: GridFunction) -> MassTable:
    ambient = f.ambient
    rows = tuple((line, masses(f, line.rep)) for line in enumerate_lines(ambient))
    return MassTable(ambient, rows)


def associated_wavelet(f: GridFunction, s) -> Wavelet:
    """The unique wavelet whose transform agrees with that of f on the line
    through s; its coefficients are the normalized masses in the canonical
    direction of that line."""
    ambient = f.ambient
    line = line_through(ambient, s)
    ms = masses(f, line.rep)
    w = Fraction(1, ambient.p ** (ambient.d - 1))
    return Wavelet(ambient, line, tuple(w * m for m in ms), form="plain")


@dataclass(frozen=True)
class Decomposition:
    """A constant plus one wavelet per active line, reconstructing f exactly."""

    ambient: Ambient
    form: str
    constant: object
    parts: tuple

    @property
    def cbw(self) -> int:
        return len(self.parts)

    def evaluate(self) -> GridFunction:
        acc = GridFunction.constant(self.ambient, self.constant)
        for w in self.parts:
            acc = acc + w.evaluate()
        return acc


def decompose(f: GridFunction, form: str = "reduced") -> Decomposition:
    """Split f into one wavelet per active spectral line, plus a constant.

    plain:    coefficients m_{s,t}/p**(d-1), constant (1 - cbw) * m(f)/p**d
    reduced:  coefficients (m_{s,t} - m_{s,0})/p**(d-1), c_0 = 0
    massless: coefficients (p*m_{s,t} - m(f))/p**d, constant m(f)/p**d

    The massless constant is forced by mass balance: every massless part
    sums to zero, so the constant alone must carry m(f).
    """
    if form not in FORMS:
        raise ValueError(f"unknown decomposition form {form!r}")
    ambient = f.ambient
    p, d = ambient.p, ambient.d
    profile = support_profile(forward(f), source_kind=f.kind)
    total = f.total()
    cell = Fraction(1, p ** (d - 1))
    grid_inv = Fraction(1, ambient.size)
    parts = []
    plain_constant = (1 - profile.cbw) * grid_inv * total
    reduced_shift = f.zero_scalar()
    for line in profile.active:
        ms = masses(f, line.rep)
        if form == "plain":
            coeffs = tuple(cell * m for m in ms)
        elif form == "reduced":
            coeffs = tuple(cell * (m - ms[0]) for m in ms)
            reduced_shift = reduced_shift + cell * ms[0]
        else:
            coeffs = tuple(grid_inv * (p * m - total) for m in ms)
        parts.append(Wavelet(ambient, line, coeffs, form=form))
    if form == "plain":
        constant = plain_constant
    elif form == "reduced":
        constant = plain_constant + reduced_shift
    else:
        constant = grid_inv * total
    return Decomposition(ambient, form, constant, tuple(parts))


def reconstruct_from_masses(table: MassTable) -> GridFunction:
    """Tomography: rebuild the unique function with the given sinogram.

    The table must contain every canonical direction and all per-direction
    totals must agree (each hyperplane family partitions the grid, so they
    all sum to the same mass); violations raise SinogramError.
    """
    ambient = table.ambient
    p, d = ambient.p, ambient.d
    expected = enumerate_lines(ambient)
    present = set(table.directions())
    missing = [line.rep for line in expected if line not in present]
    if missing:
        raise SinogramError(f"sinogram is missing directions: {missing}")
    if not table.is_consistent():
        raise SinogramError(
            f"per-direction totals disagree: {[str(t) for t in table.totals()]}"
        )
    total = table.total()
    approximate = any(
        isinstance(m, complex) for _, ms in table.rows for m in ms
    )
    scale = Fraction(1, ambient.size)
    if approximate:
        from .fourier import _complex_roots

        roots = _complex_roots(p)
        values = [0j] * ambient.size
        values[0] = complex(total) / ambient.size
        for line, ms in table.rows:
            for k in range(1, p):
                acc = 0j
                for t, m in enumerate(ms):
                    acc += roots[-k * t % p] * complex(m)
                values[ambient.index_of(vscale(k, line.rep, p))] = acc / ambient.size
        return inverse(Spectrum(ambient, COMPLEX, values))
    zero = Cyclotomic.zero(p)
    values = [zero] * ambient.size
    values[0] = Cyclotomic.from_rational(p, scale * total) if not isinstance(
        total, Cyclotomic
    ) else total.scale(scale)
    for line, ms in table.rows:
        for k in range(1, p):
            acc = Cyclotomic.zero(p)
            for t, m in enumerate(ms):
                z = m if isinstance(m, Cyclotomic) else Cyclotomic.from_rational(p, m)
                acc = acc + z.mul_zeta(-k * t)
            values[ambient.index_of(vscale(k, line.rep, p))] = acc.scale(scale)
    return inverse(Spectrum(ambient, CYCLOTOMIC, values))


@dataclass(frozen=True)
class WaveletCheck:
    is_constant: bool
    line: ProjectiveLine | None


def is_wavelet(f: GridFunction) -> WaveletCheck:
    """The unique line carrying the spectrum when cbw(f) = 1.

    Constants are wavelets in every direction and come back flagged;
    cbw >= 2 yields no line.
    """
    profile = support_profile(forward(f), source_kind=f.kind)
    if profile.cbw == 0:
        return WaveletCheck(is_constant=True, line=None)
    if profile.cbw == 1:
        return WaveletCheck(is_constant=False, line=profile.active[0])
    return WaveletCheck(is_constant=False, line=None)
