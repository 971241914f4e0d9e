"""Grid functions on Z_m**d (m = p**ell) and the normalized Fourier transform.

The forward transform is

    F(m) = q**(-d) * sum_x chi(-x.m) f(x),      chi(u) = exp(2*pi*i*u/q),

and the inverse carries no normalization, so F(0) is the average of f and
the convolution theorem reads forward(f * g) = q**d * forward(f)*forward(g).

Rational and cyclotomic inputs take the exact path over Q(zeta_q); complex
inputs take a floating path.  The production transform runs one length-q
pass per axis (q**d * q * d scalar operations); ``forward_naive`` keeps the
quadratic double loop permanently as a differential-testing oracle.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .geometry import Point, Subspace, dot, perp, vsub
from .scalars import ZERO, Cyclotomic, complex_close

RATIONAL = "rational"
CYCLOTOMIC = "cyclotomic"
COMPLEX = "complex"

_KINDS = (RATIONAL, CYCLOTOMIC, COMPLEX)


def _coerce_value(kind: str, value, ambient):
    if kind == RATIONAL:
        return value if isinstance(value, Fraction) else Fraction(value)
    if kind == CYCLOTOMIC:
        if isinstance(value, Cyclotomic):
            if value.p != ambient.p or value.ell != ambient.ell:
                raise ValueError("cyclotomic value conductor does not match the grid")
            return value
        return Cyclotomic.from_rational(ambient.p, Fraction(value), ambient.ell)
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError("complex values must be finite")
    return z


class GridFunction:
    """A dense function on the points of the grid, in lexicographic order."""

    __slots__ = ("ambient", "kind", "values")

    def __init__(self, ambient, kind: str, values):
        if kind not in _KINDS:
            raise ValueError(f"unknown scalar kind {kind!r}")
        values = tuple(_coerce_value(kind, v, ambient) for v in values)
        if len(values) != ambient.size:
            raise ValueError(
                f"need {ambient.size} values for this grid, got {len(values)}"
            )
        self.ambient = ambient
        self.kind = kind
        self.values = values

    @classmethod
    def constant(cls, ambient, value) -> "GridFunction":
        kind = _kind_of_scalar(value)
        return cls(ambient, kind, (value,) * ambient.size)

    @classmethod
    def indicator(cls, ambient, points) -> "GridFunction":
        members = {tuple(c % ambient.modulus for c in x) for x in points}
        vals = [ONE_F if x in members else ZERO for x in ambient.points()]
        return cls(ambient, RATIONAL, vals)

    @classmethod
    def delta(cls, ambient, point: Point, value=1) -> "GridFunction":
        kind = _kind_of_scalar(value)
        idx = ambient.index_of(point)
        vals = [value if i == idx else 0 for i in range(ambient.size)]
        return cls(ambient, kind, vals)

    def value_at(self, point: Point):
        return self.values[self.ambient.index_of(point)]

    def support(self, tol: float | None = None) -> tuple:
        """Points where the value is nonzero (exact kinds) or exceeds tol."""
        pts = self.ambient.points()
        if self.kind == COMPLEX:
            from .scalars import DEFAULT_TOL

            t = DEFAULT_TOL if tol is None else tol
            return tuple(x for x, v in zip(pts, self.values) if abs(v) > t)
        return tuple(x for x, v in zip(pts, self.values) if v)

    def is_zero(self) -> bool:
        if self.kind == CYCLOTOMIC:
            return all(v.is_zero() for v in self.values)
        return not any(self.values)

    def is_constant(self) -> bool:
        return all(v == self.values[0] for v in self.values)

    def is_indicator(self) -> bool:
        if self.kind != RATIONAL:
            return False
        return all(v == 0 or v == 1 for v in self.values)

    def total(self):
        """Sum of all values (the mass of the function)."""
        acc = self.zero_scalar()
        for v in self.values:
            acc = acc + v
        return acc

    def zero_scalar(self):
        if self.kind == RATIONAL:
            return ZERO
        if self.kind == CYCLOTOMIC:
            return Cyclotomic.zero(self.ambient.p, self.ambient.ell)
        return 0j

    def to_cyclotomic(self) -> "GridFunction":
        if self.kind == CYCLOTOMIC:
            return self
        if self.kind == COMPLEX:
            raise ValueError("complex values cannot be promoted to cyclotomic")
        return type(self)(self.ambient, CYCLOTOMIC, self.values)

    def to_complex(self) -> "GridFunction":
        if self.kind == COMPLEX:
            return self
        if self.kind == RATIONAL:
            vals = [complex(v) for v in self.values]
        else:
            vals = [v.embed() for v in self.values]
        return type(self)(self.ambient, COMPLEX, vals)

    def __eq__(self, other):
        if not isinstance(other, GridFunction):
            return NotImplemented
        if self.ambient != other.ambient:
            return False
        if self.kind == other.kind:
            return self.values == other.values
        if COMPLEX in (self.kind, other.kind):
            return self.to_complex().values == other.to_complex().values
        return self.to_cyclotomic().values == other.to_cyclotomic().values

    def isclose(self, other: "GridFunction", tol: float | None = None) -> bool:
        if self.ambient != other.ambient:
            return False
        a = self.to_complex().values
        b = other.to_complex().values
        return all(complex_close(x, y, tol) for x, y in zip(a, b))

    def _binop(self, other, op):
        if isinstance(other, GridFunction):
            if self.ambient != other.ambient:
                raise ValueError("grid mismatch")
            kind = _join_kind(self.kind, other.kind)
            a = _promoted_values(self, kind)
            b = _promoted_values(other, kind)
            return GridFunction(self.ambient, kind, [op(x, y) for x, y in zip(a, b)])
        return NotImplemented

    def __add__(self, other):
        return self._binop(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._binop(other, lambda x, y: x - y)

    def __neg__(self):
        return GridFunction(self.ambient, self.kind, [-v for v in self.values])

    def scale(self, factor) -> "GridFunction":
        kind = _join_kind(self.kind, _kind_of_scalar(factor))
        vals = _promoted_values(self, kind)
        if kind == CYCLOTOMIC and not isinstance(factor, Cyclotomic):
            factor = Fraction(factor)
        return GridFunction(self.ambient, kind, [factor * v for v in vals])

    def __repr__(self):
        return (
            f"GridFunction(p={self.ambient.p}, d={self.ambient.d}, "
            f"kind={self.kind}, {self.ambient.size} values)"
        )


class Spectrum(GridFunction):
    """A GridFunction tagged as living in the frequency domain."""


ONE_F = Fraction(1)


def _kind_of_scalar(value) -> str:
    if isinstance(value, (int, Fraction)):
        return RATIONAL
    if isinstance(value, Cyclotomic):
        return CYCLOTOMIC
    return COMPLEX


def _join_kind(a: str, b: str) -> str:
    if COMPLEX in (a, b):
        return COMPLEX
    if CYCLOTOMIC in (a, b):
        return CYCLOTOMIC
    return RATIONAL


def _promoted_values(f: GridFunction, kind: str):
    if f.kind == kind:
        return f.values
    if kind == CYCLOTOMIC:
        return f.to_cyclotomic().values
    if kind == COMPLEX:
        return f.to_complex().values
    raise ValueError(f"cannot demote {f.kind} values to {kind}")


@lru_cache(maxsize=None)
def _complex_roots(q: int) -> tuple:
    return tuple(cmath.exp(2j * cmath.pi * e / q) for e in range(q))


def _exact_kernel(fiber, q: int, p: int, ell: int, sign: int):
    """Length-q character sum out[k] = sum_t zeta**(sign*k*t) * fiber[t]."""
    from .scalars import _reduce_ext

    out = [None] * q
    for k in range(q):
        ext = [ZERO] * q
        for t, v in enumerate(fiber):
            coeffs = v.coeffs
            e = sign * k * t % q
            for j, c in enumerate(coeffs):
                if c:
                    ext[(j + e) % q] += c
        out[k] = Cyclotomic._make(p, ell, _reduce_ext(p, ell, ext))
    return out


def _complex_kernel(fiber, q: int, sign: int):
    roots = _complex_roots(q)
    out = [0j] * q
    for k in range(q):
        acc = 0j
        for t, v in enumerate(fiber):
            if v:
                acc += roots[sign * k * t % q] * v
        out[k] = acc
    return out


def _axis_passes(values, ambient, sign: int, exact: bool):
    q = ambient.modulus
    d = ambient.d
    vals = list(values)
    for axis in range(d):
        stride = q ** (d - 1 - axis)
        block = stride * q
        out = [None] * len(vals)
        for hi in range(q ** axis):
            base0 = hi * block
            for lo in range(stride):
                base = base0 + lo
                fiber = [vals[base + t * stride] for t in range(q)]
                if exact:
                    col = _exact_kernel(fiber, q, ambient.p, ambient.ell, sign)
                else:
                    col = _complex_kernel(fiber, q, sign)
                for k in range(q):
                    out[base + k * stride] = col[k]
        vals = out
    return vals


def forward(f: GridFunction) -> Spectrum:
    """The normalized transform; exact over Q(zeta) for exact inputs."""
    ambient = f.ambient
    if f.kind == COMPLEX:
        vals = _axis_passes(f.values, ambient, -1, exact=False)
        scale = 1.0 / ambient.size
        return Spectrum(ambient, COMPLEX, [v * scale for v in vals])
    vals = _axis_passes(f.to_cyclotomic().values, ambient, -1, exact=True)
    scale = Fraction(1, ambient.size)
    return Spectrum(ambient, CYCLOTOMIC, [v.scale(scale) for v in vals])


def forward_naive(f: GridFunction) -> Spectrum:
    """Quadratic reference transform, kept as the differential-testing oracle."""
    ambient = f.ambient
    q = ambient.modulus
    pts = ambient.points()
    if f.kind == COMPLEX:
        roots = _complex_roots(q)
        out = []
        for m in pts:
            acc = 0j
            for x, v in zip(pts, f.values):
                if v:
                    acc += roots[-dot(x, m, q) % q] * v
            out.append(acc / ambient.size)
        return Spectrum(ambient, COMPLEX, out)
    src = f.to_cyclotomic().values
    scale = Fraction(1, ambient.size)
    out = []
    for m in pts:
        acc = Cyclotomic.zero(ambient.p, ambient.ell)
        for x, v in zip(pts, src):
            if not v.is_zero():
                acc = acc + v.mul_zeta(-dot(x, m, q))
        out.append(acc.scale(scale))
    return Spectrum(ambient, CYCLOTOMIC, out)


def inverse(F: GridFunction) -> GridFunction:
    """Inverse transform; the result is demoted to rational scalars exactly
    when every cyclotomic coordinate above degree zero cancels."""
    ambient = F.ambient
    if F.kind == COMPLEX:
        vals = _axis_passes(F.values, ambient, +1, exact=False)
        return GridFunction(ambient, COMPLEX, vals)
    vals = _axis_passes(F.to_cyclotomic().values, ambient, +1, exact=True)
    rationals = [v.rational_part() for v in vals]
    if all(r is not None for r in rationals):
        return GridFunction(ambient, RATIONAL, rationals)
    return GridFunction(ambient, CYCLOTOMIC, vals)


def convolve(f: GridFunction, g: GridFunction) -> GridFunction:
    """(f * g)(x) = sum_y f(y) g(x - y)."""
    if f.ambient != g.ambient:
        raise ValueError("grid mismatch")
    ambient = f.ambient
    q = ambient.modulus
    kind = _join_kind(f.kind, g.kind)
    a = _promoted_values(f, kind)
    b = _promoted_values(g, kind)
    pts = ambient.points()
    out = []
    for x in pts:
        acc = None
        for y, fy in zip(pts, a):
            if isinstance(fy, Cyclotomic):
                if fy.is_zero():
                    continue
            elif not fy:
                continue
            term = fy * b[ambient.index_of(vsub(x, y, q))]
            acc = term if acc is None else acc + term
        if acc is None:
            acc = ZERO if kind == RATIONAL else (
                Cyclotomic.zero(ambient.p, ambient.ell) if kind == CYCLOTOMIC else 0j
            )
        out.append(acc)
    return GridFunction(ambient, kind, out)


def phase(ambient, x: Point) -> GridFunction:
    """The phase function m -> chi(-x.m), exact over Q(zeta)."""
    q = ambient.modulus
    vals = [
        Cyclotomic.zeta(ambient.p, -dot(x, m, q) % q, ambient.ell)
        for m in ambient.points()
    ]
    return GridFunction(ambient, CYCLOTOMIC, vals)


def transform_subspace(V: Subspace) -> Spectrum:
    """Closed form: the transform of 1_V is (|V|/q**d) * 1_{V perp}."""
    ambient = V.ambient
    w = Fraction(ambient.p ** V.dim, ambient.size)
    Vp = perp(V)
    vals = [
        Cyclotomic.from_rational(ambient.p, w if Vp.contains(m) else ZERO, ambient.ell)
        for m in ambient.points()
    ]
    return Spectrum(ambient, CYCLOTOMIC, vals)


def transform_affine(V: Subspace, x: Point) -> Spectrum:
    """Closed form: the transform of 1_{V+x} is (|V|/q**d) * chi(-x.m) * 1_{V perp}."""
    ambient = V.ambient
    q = ambient.modulus
    w = Fraction(ambient.p ** V.dim, ambient.size)
    Vp = perp(V)
    zero = Cyclotomic.zero(ambient.p, ambient.ell)
    vals = [
        Cyclotomic.zeta(ambient.p, -dot(x, m, q) % q, ambient.ell).scale(w)
        if Vp.contains(m)
        else zero
        for m in ambient.points()
    ]
    return Spectrum(ambient, CYCLOTOMIC, vals)
