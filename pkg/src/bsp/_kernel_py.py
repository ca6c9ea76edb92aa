"""Pure-Python kernel: hot loops behind enumeration and facet scanning.

This module is the fallback twin of the compiled ``bsp._kernel`` extension;
both expose the same functions with identical outputs, and the active one
is chosen in :mod:`bsp.kernel`.

Everything here works on bit-packed data.  A subset of the 0/1 cube in
dimension d is an integer whose bit m is the cube point with coordinate
vector (m & 1, m >> 1 & 1, ...); the zero point (bit 0) is an implicit
member of every family and is never stored.  All arithmetic is integer:
for a basis matrix M chosen inside the family, products with the solution
of M x = sigma are evaluated as cofactor sums and compared against det(M),
which avoids rationals in the inner loop.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd

BACKEND = "python"

_MAX_CACHED_BASES = 60000


def _det(rows: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a small integer matrix."""
    m = [row[:] for row in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _cofactor_matrix(m: list[list[int]]) -> list[list[int]]:
    n = len(m)
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [m[r][c] for c in range(n) if c != j] for r in range(n) if r != i
            ]
            sign = -1 if (i + j) & 1 else 1
            cof[i][j] = sign * (_det(minor) if minor else 1)
    return cof


class _BasisTables:
    """Per-basis precomputation shared by every family with the same
    greedy basis: determinant, cofactors, and the cofactor sums that turn
    closure checks into integer comparisons."""

    __slots__ = ("det", "rank", "cof", "w", "t")

    def __init__(self, d: int, basis: tuple[int, ...], helpers: tuple[int, ...]):
        rows = [[(m >> i) & 1 for i in range(d)] for m in basis]
        for h in helpers:
            rows.append([1 if i == h else 0 for i in range(d)])
        self.rank = len(basis)
        self.det = _det(rows)
        self.cof = _cofactor_matrix(rows)
        # w[y][i] = sum over set bits j of y of cof[i][j]
        w = [[0] * d for _ in range(1 << d)]
        for y in range(1, 1 << d):
            low = y & -y
            idx = low.bit_length() - 1
            prev = w[y ^ low]
            cof_col = [self.cof[i][idx] for i in range(d)]
            w[y] = [prev[i] + cof_col[i] for i in range(d)]
        self.w = w
        # t[y][sigma] = sum over set bits i of sigma of w[y][i],
        # sigma ranging over subsets of the basis positions 0..rank-1
        r = self.rank
        t = [[0] * (1 << r) for _ in range(1 << d)]
        for y in range(1 << d):
            wy = self.w[y]
            ty = t[y]
            for sigma in range(1, 1 << r):
                low = sigma & -sigma
                ty[sigma] = ty[sigma ^ low] + wy[low.bit_length() - 1]
        self.t = t


_tables_cache: dict[tuple[int, tuple[int, ...]], _BasisTables] = {}


def _greedy_basis(d: int, members: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """First linearly independent members in ascending mask order, plus the
    unit coordinates completing them to a basis of R^d."""
    ech: list[tuple[int, list[int]]] = []
    basis: list[int] = []

    def reduce_add(v: list[int]) -> bool:
        for piv, row in ech:
            if v[piv]:
                a, b = row[piv], v[piv]
                v = [a * x - b * y for x, y in zip(v, row)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        ech.append((piv, v))
        return True

    for m in members:
        if len(basis) == d:
            break
        if reduce_add([(m >> i) & 1 for i in range(d)]):
            basis.append(m)
    helpers = []
    for i in range(d):
        if len(basis) + len(helpers) == d:
            break
        if reduce_add([1 if j == i else 0 for j in range(d)]):
            helpers.append(i)
    return tuple(basis), tuple(helpers)


def _tables(d: int, basis: tuple[int, ...], helpers: tuple[int, ...]) -> _BasisTables:
    key = (d, basis)
    tab = _tables_cache.get(key)
    if tab is None:
        if len(_tables_cache) >= _MAX_CACHED_BASES:
            _tables_cache.clear()
        tab = _BasisTables(d, basis, helpers)
        _tables_cache[key] = tab
    return tab


def _closure_data(d: int, sset: int):
    """Closure of the family {0} + set bits of sset inside the cube.

    Returns (closed bitset, rank, valid sigma list, tables).  The valid
    sigmas, in increasing order, enumerate the partner family A of the
    closed set (for spanning input each sigma is one A vector).
    """
    members = [m for m in range(1, 1 << d) if (sset >> m) & 1]
    basis, helpers = _greedy_basis(d, members)
    tab = _tables(d, basis, helpers)
    det = tab.det
    r = tab.rank
    t = tab.t
    valid = []
    for sigma in range(1 << r):
        ok = True
        for m in members:
            v = t[m][sigma]
            if v != 0 and v != det:
                ok = False
                break
        if ok:
            valid.append(sigma)
    w = tab.w
    closed = 0
    for y in range(1, 1 << d):
        wy = w[y]
        ok = True
        for i in range(r, d):
            if wy[i] != 0:
                ok = False
                break
        if ok:
            ty = t[y]
            for sigma in valid:
                v = ty[sigma]
                if v != 0 and v != det:
                    ok = False
                    break
        if ok:
            closed |= 1 << y
    return closed, r, valid, tab


def closure_and_rank(d: int, sset: int) -> tuple[int, int]:
    closed, r, _, _ = _closure_data(d, sset)
    return closed, r


def pair_rows(d: int, closed: int) -> tuple[list[int], int]:
    """Product-matrix rows of the maximal pair of a closed spanning set.

    Columns are the family members (zero first, then ascending masks); bit
    2^(n-1-j) of a row is the product with column j.  Rows are ordered by
    increasing sigma, the level pattern on the greedy basis.
    """
    _, r, valid, tab = _closure_data(d, closed)
    members = [0] + [m for m in range(1, 1 << d) if (closed >> m) & 1]
    n = len(members)
    det = tab.det
    rows = []
    for sigma in valid:
        row = 0
        for j, m in enumerate(members):
            if tab.t[m][sigma] == det:
                row |= 1 << (n - 1 - j)
        rows.append(row)
    return rows, n


def a_vector_data(d: int, closed: int) -> tuple[int, list[tuple[int, ...]]]:
    """Exact partner vectors of a closed set: (denominator, numerators)."""
    _, r, valid, tab = _closure_data(d, closed)
    nums = []
    for sigma in valid:
        coord = [0] * d
        for i in range(r):
            if (sigma >> i) & 1:
                row = tab.cof[i]
                coord = [a + b for a, b in zip(coord, row)]
        nums.append(tuple(coord))
    return tab.det, nums


def next_closed(d: int, current: int) -> int:
    """Lectically smallest closed set greater than ``current`` (-1 at the
    end).  The lectic order on ground bitsets is plain integer order."""
    for i in range((1 << d) - 1, 0, -1):
        bit = 1 << i
        if current & bit:
            continue
        below = bit - 1
        cand = (current & below) | bit
        closed, _, _, _ = _closure_data(d, cand)
        if (closed & below) == (current & below):
            return closed
    return -1


def _transpose(rows: list[int], m: int, n: int) -> list[int]:
    cols = []
    for j in range(n):
        col = 0
        jbit = 1 << (n - 1 - j)
        for i in range(m):
            if rows[i] & jbit:
                col |= 1 << (m - 1 - i)
        cols.append(col)
    return cols


def heuristic_form(rows: list[int], n: int) -> bytes:
    """Cheap permutation-stable signature: alternately sort rows and
    columns until stable.  Equal signatures imply permutation-equivalent
    matrices (the converse is handled later by exact canonicalization)."""
    m = len(rows)
    cur = sorted(rows)
    for _ in range(6):
        cols = sorted(_transpose(cur, m, n))
        nxt = sorted(_transpose(cols, n, m))
        if nxt == cur:
            break
        cur = nxt
    width = (n + 7) // 8
    return b"%d,%d:" % (m, n) + b"".join(r.to_bytes(width, "big") for r in cur)


def enum_branch(d: int, top_count: int, p_index: int):
    """All closed sets whose membership pattern on the ``top_count``
    lectically most significant cube points (masks 1..top_count) equals
    ``p_index``, visited in lectic order.

    In the lectic order the smallest ground element is the most
    significant, so sets with a fixed pattern on masks 1..top_count form a
    contiguous run and each branch can be enumerated independently.

    Returns (visited closed sets, spanning closed sets, items) where items
    are sorted (heuristic form, smallest representative bitset) pairs for
    the spanning ones.
    """
    top_elems = [t + 1 for t in range(top_count)]
    top_bits = 0
    for e in top_elems:
        top_bits |= 1 << e
    p_bits = 0
    for t in range(top_count):
        if (p_index >> t) & 1:
            p_bits |= 1 << top_elems[t]

    out: dict[bytes, int] = {}
    visited = 0
    spanning = 0

    def process(a: int) -> None:
        nonlocal visited, spanning
        visited += 1
        rows, n = pair_rows(d, a)
        _, r, _, _ = _closure_data(d, a)
        if r != d:
            return
        spanning += 1
        hb = heuristic_form(rows, n)
        prev = out.get(hb)
        if prev is None or a < prev:
            out[hb] = a

    a = p_bits
    closed, _, _, _ = _closure_data(d, a)
    if closed == a:
        process(a)
    while True:
        a = next_closed(d, a)
        if a < 0 or (a & top_bits) != p_bits:
            break
        process(a)
    return visited, spanning, sorted(out.items())


# ---------------------------------------------------------------------------
# exact facet scan (brute force over vertex d-subsets)
# ---------------------------------------------------------------------------


def _minor_det(rows: list[list[int]], skip_col: int, dim: int) -> int:
    sub = [[row[c] for c in range(dim) if c != skip_col] for row in rows]
    return _det(sub) if sub else 1


def facet_scan(dim: int, verts: list[tuple[int, ...]]) -> list[tuple[tuple[int, ...], int]]:
    """Supporting hyperplanes spanned by d-subsets of integer points.

    Returns sorted (primitive normal, offset) pairs with every point on
    the <normal, x> <= offset side.  The caller guarantees the point set is
    full-dimensional.
    """
    n = len(verts)
    found: set[tuple[tuple[int, ...], int]] = set()
    for combo in combinations(range(n), dim):
        base = verts[combo[0]]
        rows = [
            [verts[c][j] - base[j] for j in range(dim)] for c in combo[1:]
        ]
        normal = []
        all_zero = True
        for j in range(dim):
            v = _minor_det(rows, j, dim)
            if j & 1:
                v = -v
            if v:
                all_zero = False
            normal.append(v)
        if all_zero:
            continue
        c = sum(normal[j] * base[j] for j in range(dim))
        hi = lo = False
        for v in verts:
            s = sum(normal[j] * v[j] for j in range(dim))
            if s > c:
                hi = True
            elif s < c:
                lo = True
            if hi and lo:
                break
        if hi and lo:
            continue
        if hi:
            normal = [-x for x in normal]
            c = -c
        g = 0
        for x in normal:
            g = gcd(g, x)
        g = gcd(g, c)
        found.add((tuple(x // g for x in normal), c // g))
    return sorted(found)
