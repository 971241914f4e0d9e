"""Combinatorial geometry of Z_p**d: points, lines through the origin,
affine hyperplanes, subspaces in reduced echelon form, perpendiculars,
compass sets, and quadratic-residue utilities.

Points are plain tuples of residues.  The lexicographic index of a point
(x_0, ..., x_{d-1}) is sum(x_i * p**(d-1-i)), a bijection with
range(p**d); every dense array in the package uses this order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError
from .scalars import is_prime

Point = tuple[int, ...]

# Capacity guards for dense enumerations; generous for desk scale.
MAX_GRID_POINTS = 1 << 22
MAX_LINE_ENUMERATION = 1 << 20
MAX_SUBSPACE_ENUMERATION = 1 << 20


@dataclass(frozen=True)
class Ambient:
    """The grid Z_p**d for a prime p and dimension d >= 1."""

    p: int
    d: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus must be prime, got {self.p}")
        if self.d < 1:
            raise ValueError(f"dimension must be >= 1, got {self.d}")
        if self.p ** self.d > MAX_GRID_POINTS:
            raise CapacityError(
                f"grid of {self.p}**{self.d} points exceeds the enumeration limit"
            )

    @property
    def ell(self) -> int:
        return 1

    @property
    def modulus(self) -> int:
        return self.p

    @property
    def size(self) -> int:
        return self.p ** self.d

    def points(self) -> tuple:
        return _points_of(self.modulus, self.d)

    def index_of(self, point: Point) -> int:
        m = self.modulus
        idx = 0
        for c in point:
            idx = idx * m + c % m
        return idx

    def point_at(self, index: int) -> Point:
        m = self.modulus
        coords = [0] * self.d
        for i in range(self.d - 1, -1, -1):
            index, coords[i] = divmod(index, m)
        return tuple(coords)

    def origin(self) -> Point:
        return (0,) * self.d


@lru_cache(maxsize=None)
def _points_of(m: int, d: int) -> tuple:
    return tuple(itertools.product(range(m), repeat=d))


def vadd(u: Point, v: Point, m: int) -> Point:
    return tuple((a + b) % m for a, b in zip(u, v))


def vsub(u: Point, v: Point, m: int) -> Point:
    return tuple((a - b) % m for a, b in zip(u, v))


def vscale(c: int, u: Point, m: int) -> Point:
    return tuple(c * a % m for a in u)


def dot(u: Point, v: Point, m: int) -> int:
    return sum(a * b for a, b in zip(u, v)) % m


def translate_set(points, u: Point, m: int) -> frozenset:
    return frozenset(vadd(x, u, m) for x in points)


@dataclass(frozen=True)
class ProjectiveLine:
    """A line through the origin, named by its canonical representative.

    The representative is the unique generator whose first nonzero
    coordinate equals 1; this fixes a deterministic enumeration order.
    """

    rep: Point

    def points(self, ambient: Ambient) -> tuple:
        p = ambient.p
        return tuple(vscale(t, self.rep, p) for t in range(p))

    def punctured(self, ambient: Ambient) -> tuple:
        p = ambient.p
        return tuple(vscale(t, self.rep, p) for t in range(1, p))


def line_through(ambient: Ambient, v: Point) -> ProjectiveLine:
    """Canonical line containing the nonzero vector v."""
    p = ambient.p
    v = tuple(c % p for c in v)
    if not any(v):
        raise ValueError("the zero vector spans no line")
    first = next(c for c in v if c)
    inv = pow(first, p - 2, p)
    return ProjectiveLine(vscale(inv, v, p))


def line_count(ambient: Ambient) -> int:
    return (ambient.p ** ambient.d - 1) // (ambient.p - 1)


@lru_cache(maxsize=None)
def _enumerate_lines(p: int, d: int) -> tuple:
    reps = []
    for lead in range(d - 1, -1, -1):
        for tail in itertools.product(range(p), repeat=d - 1 - lead):
            reps.append((0,) * lead + (1,) + tail)
    return tuple(ProjectiveLine(r) for r in reps)


def enumerate_lines(ambient: Ambient, limit: int | None = None) -> tuple:
    """All lines through the origin, ordered lexicographically by representative."""
    count = line_count(ambient)
    cap = MAX_LINE_ENUMERATION if limit is None else limit
    if count > cap:
        raise CapacityError(f"{count} lines exceed the enumeration limit {cap}")
    return _enumerate_lines(ambient.p, ambient.d)


def hyperplane_points(ambient: Ambient, s: Point, t: int) -> frozenset:
    """The affine hyperplane {x : x.s = t}; the p values of t partition the grid."""
    p = ambient.p
    if not any(c % p for c in s):
        raise ValueError("hyperplane direction must be nonzero")
    t %= p
    return frozenset(x for x in ambient.points() if dot(x, s, p) == t)


def rref(rows, p: int):
    """Reduced row echelon form mod p.

    Returns (rows, pivot_columns) with zero rows dropped; the output is the
    canonical representative of the row space.
    """
    mat = [list(tuple(c % p for c in r)) for r in rows]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = pow(mat[r][col], p - 2, p)
        mat[r] = [c * inv % p for c in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace given by its reduced-echelon basis rows.

    Echelon form is canonical, so two subspaces are equal exactly when
    their row spaces coincide.
    """

    ambient: Ambient
    basis: tuple

    @classmethod
    def span(cls, ambient: Ambient, vectors) -> "Subspace":
        rows, _ = rref(vectors, ambient.p)
        return cls(ambient, rows)

    @classmethod
    def zero(cls, ambient: Ambient) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: Ambient) -> "Subspace":
        eye = tuple(
            tuple(1 if j == i else 0 for j in range(ambient.d)) for i in range(ambient.d)
        )
        return cls(ambient, eye)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(row.index(1) for row in self.basis)

    def reduce(self, point: Point) -> Point:
        """Canonical coset representative of point + self."""
        p = self.ambient.p
        x = [c % p for c in point]
        for row in self.basis:
            piv = row.index(1)
            f = x[piv]
            if f:
                x = [(a - f * b) % p for a, b in zip(x, row)]
        return tuple(x)

    def contains(self, point: Point) -> bool:
        return not any(self.reduce(point))

    def points(self) -> tuple:
        p = self.ambient.p
        d = self.ambient.d
        pts = []
        for coeffs in itertools.product(range(p), repeat=self.dim):
            v = [0] * d
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [(a + c * b) % p for a, b in zip(v, row)]
            pts.append(tuple(v))
        return tuple(pts)

    def nonzero_points(self) -> tuple:
        return tuple(x for x in self.points() if any(x))

    def extend(self, vector: Point) -> "Subspace":
        return Subspace.span(self.ambient, self.basis + (tuple(vector),))

    def __contains__(self, point) -> bool:
        return self.contains(point)


@dataclass(frozen=True)
class AffineSubspace:
    """A coset anchor + direction; the anchor is reduced against the direction
    so that equality of cosets is syntactic equality."""

    direction: Subspace
    anchor: Point

    def __post_init__(self):
        object.__setattr__(self, "anchor", self.direction.reduce(self.anchor))

    def points(self) -> tuple:
        m = self.direction.ambient.modulus
        return tuple(vadd(self.anchor, v, m) for v in self.direction.points())

    def contains(self, point: Point) -> bool:
        return self.direction.reduce(point) == self.anchor


def perp(V: Subspace) -> Subspace:
    """Dot-product orthocomplement {x : x.v = 0 for all v in V}."""
    ambient = V.ambient
    p, d = ambient.p, ambient.d
    if V.dim == 0:
        return Subspace.full(ambient)
    rows = V.basis
    pivots = V.pivots
    free_cols = [c for c in range(d) if c not in pivots]
    kernel = []
    for j in free_cols:
        vec = [0] * d
        vec[j] = 1
        for row, piv in zip(rows, pivots):
            vec[piv] = (-row[j]) % p
        kernel.append(tuple(vec))
    return Subspace.span(ambient, kernel)


def is_compass_set(ambient: Ambient, points) -> bool:
    """True when every vector of the grid is a scalar multiple of a member.

    Equivalently the set meets every line through the origin; the empty set
    is never a compass set for d >= 1.
    """
    pts = list(points)
    if not pts:
        return False
    covered = {line_through(ambient, x) for x in pts if any(c % ambient.p for c in x)}
    return len(covered) == line_count(ambient)


def quadratic_class(a: int, p: int) -> str:
    """Euler's criterion: "zero", "residue", or "non-residue"."""
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    a %= p
    if a == 0:
        return "zero"
    if p == 2 or pow(a, (p - 1) // 2, p) == 1:
        return "residue"
    return "non-residue"


def sqrt_minus_one(p: int) -> int:
    """The smaller square root of -1 mod p; requires p = 1 mod 4."""
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"-1 is not a square mod {p}")
    for i in range(2, p):
        if i * i % p == p - 1:
            return i
    raise AssertionError("unreachable: a root exists for p = 1 mod 4")


def avoid_lines_subspace(ambient: Ambient, lines, k: int) -> Subspace:
    """A (k+1)-dimensional subspace whose nonzero points miss every given line.

    Requires 0 <= k < d and len(lines) < (p**(d-k) - 1) / (p - 1); a valid
    subspace then always exists and is found by growing a chain of
    subspaces, taking the first viable extension at every step.
    """
    p, d = ambient.p, ambient.d
    avoid = set(lines)
    if not 0 <= k < d:
        raise ValueError(f"need 0 <= k < d, got k={k}, d={d}")
    bound = (p ** (d - k) - 1) // (p - 1)
    if len(avoid) >= bound:
        raise ValueError(
            f"{len(avoid)} lines leave no guaranteed (k+1)-dim subspace "
            f"(bound {bound})"
        )
    current = Subspace.zero(ambient)
    for _ in range(k + 1):
        for cand in enumerate_lines(ambient):
            if current.contains(cand.rep):
                continue
            ext = current.extend(cand.rep)
            if all(
                line_through(ambient, x) not in avoid for x in ext.nonzero_points()
            ):
                current = ext
                break
        else:
            raise AssertionError("unreachable under the size precondition")
    return current


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over Z_p."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def enumerate_subspaces(ambient: Ambient, k: int, limit: int | None = None):
    """Yield every k-dimensional subspace, via echelon forms with fixed pivots."""
    p, d = ambient.p, ambient.d
    cap = MAX_SUBSPACE_ENUMERATION if limit is None else limit
    total = gaussian_binomial(d, k, p)
    if total > cap:
        raise CapacityError(f"{total} subspaces exceed the enumeration limit {cap}")
    if k == 0:
        yield Subspace.zero(ambient)
        return
    for pivots in itertools.combinations(range(d), k):
        pivot_set = set(pivots)
        free_cells = [
            (r, c)
            for r, pc in enumerate(pivots)
            for c in range(pc + 1, d)
            if c not in pivot_set
        ]
        for values in itertools.product(range(p), repeat=len(free_cells)):
            rows = [[0] * d for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), v in zip(free_cells, values):
                rows[r][c] = v
            yield Subspace(ambient, tuple(tuple(row) for row in rows))


def all_subspaces(ambient: Ambient, limit: int | None = None):
    for k in range(ambient.d + 1):
        yield from enumerate_subspaces(ambient, k, limit)
