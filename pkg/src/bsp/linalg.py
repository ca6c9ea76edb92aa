"""Exact rational vectors and matrices.

Vectors are plain tuples of ``fractions.Fraction`` (hashable, so families
can live in sets); matrices are tuples of row tuples.  Everything here is
exact: no floating point is allowed anywhere near a predicate.  Rank uses
fraction-free (Bareiss) elimination on integer-scaled rows; the remaining
operations run ordinary Gaussian elimination on Fractions, which is exact
as well.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionMismatchError, SingularBasisError

Vec = tuple[Fraction, ...]
Matrix = tuple[Vec, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value) -> Fraction:
    """Coerce ints, Fractions or "p/q" strings to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def format_rat(q: Fraction) -> str:
    """Serialize as "p/q", or integer shorthand "n" when the denominator is 1."""
    return str(q)


def vec(coords: Iterable) -> Vec:
    return tuple(rat(c) for c in coords)


def zero_vec(dim: int) -> Vec:
    return (ZERO,) * dim


def unit_vec(dim: int, i: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(dim))


def dot(u: Vec, v: Vec) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatchError(f"dot: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def scale(u: Vec, s: Fraction) -> Vec:
    return tuple(a * s for a in u)


def is_zero(u: Vec) -> bool:
    return all(a == 0 for a in u)


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(vec(r) for r in rows)
    if m:
        width = len(m[0])
        for r in m:
            if len(r) != width:
                raise DimensionMismatchError("ragged matrix")
    return m


def _integer_rows(rows: Sequence[Vec]) -> list[list[int]]:
    out = []
    for r in rows:
        lcm = 1
        for c in r:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        out.append([int(c * lcm) for c in r])
    return out


def rank(rows: Sequence[Vec]) -> int:
    """Exact rank over the rationals via fraction-free (Bareiss) elimination."""
    if not rows:
        return 0
    m = _integer_rows(rows)
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    prev = 1
    for col in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, n_rows):
            for j in range(col + 1, n_cols):
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) // prev
            m[i][col] = 0
        prev = m[r][col]
        r += 1
        if r == n_rows:
            break
    return r


class SolveResult(NamedTuple):
    """Outcome of solving A x = rhs.  ``solution`` is None iff inconsistent
    (not a fault); ``unique`` is False when the system is underdetermined."""

    solution: Vec | None
    unique: bool


def solve(a: Sequence[Vec], rhs: Vec) -> SolveResult:
    """Exact solution of a linear system, if one exists.

    Returns one exact solution (free variables pinned to zero) plus a
    uniqueness flag; ``SolveResult(None, False)`` signals inconsistency.
    """
    n_rows = len(a)
    if len(rhs) != n_rows:
        raise DimensionMismatchError("rhs length != row count")
    n_cols = len(a[0]) if n_rows else 0
    aug = [list(row) + [rhs[i]] for i, row in enumerate(a)]
    piv_cols: list[int] = []
    r = 0
    for col in range(n_cols):
        piv = next((i for i in range(r, n_rows) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n_rows):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(col)
        r += 1
    for i in range(r, n_rows):
        if aug[i][n_cols] != 0:
            return SolveResult(None, False)
    x = [ZERO] * n_cols
    for row_idx, col in enumerate(piv_cols):
        x[col] = aug[row_idx][n_cols]
    return SolveResult(tuple(x), unique=(len(piv_cols) == n_cols))


def dual_basis(basis: Sequence[Vec]) -> list[Vec]:
    """Vectors b_i* with <b_i, b_j*> = delta_ij, exactly.

    Raises SingularBasisError when the input is not a basis.
    """
    d = len(basis)
    if d == 0 or any(len(b) != d for b in basis):
        raise SingularBasisError("need d vectors of length d")
    duals = []
    for i in range(d):
        res = solve(tuple(basis), unit_vec(d, i))
        if res.solution is None or not res.unique:
            raise SingularBasisError("vectors are linearly dependent")
        duals.append(res.solution)
    return duals


def project_onto_span(x: Vec, spanning: Sequence[Vec]) -> Vec:
    """Exact orthogonal projection of x onto span(spanning).

    Gram-matrix method, so the result stays rational; the projection of
    anything onto the zero span is the zero vector.
    """
    dim = len(x)
    base: list[Vec] = []
    for s in spanning:
        if len(s) != dim:
            raise DimensionMismatchError("span vector of wrong length")
        if rank(base + [s]) > len(base):
            base.append(s)
    if not base:
        return zero_vec(dim)
    gram = tuple(tuple(dot(u, v) for v in base) for u in base)
    rhs = tuple(dot(u, x) for u in base)
    coeffs = solve(gram, rhs).solution
    assert coeffs is not None  # Gram matrix of independent vectors is invertible
    y = zero_vec(dim)
    for c, u in zip(coeffs, base):
        y = add(y, scale(u, c))
    return y


def affine_dim(points: Sequence[Vec]) -> int:
    """Affine dimension of a point set (-1 for the empty set)."""
    if not points:
        return -1
    p0 = points[0]
    return rank([sub(p, p0) for p in points[1:]])
