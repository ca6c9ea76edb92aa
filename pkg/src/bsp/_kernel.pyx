# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel: hot loops behind enumeration and facet scanning.

Mirrors bsp._kernel_py exactly (same functions, same outputs); see that
module for the algorithm notes.  Everything runs on C integers; the
intermediate values are cofactor sums of tiny 0/1 matrices (d <= 6), far
inside int64 range.
"""

from libc.stdlib cimport free, malloc

BACKEND = "c"

DEF MAXD = 6
DEF MAXP = 64            # 2**MAXD cube points
_MAX_CACHED_BASES = 60000


cdef long long _det_inplace(long long *m, int n) nogil:
    """Bareiss determinant; m is n x n row major and is destroyed."""
    cdef int k, i, j, piv
    cdef long long sign = 1, prev = 1, tmp
    if n == 0:
        return 1
    for k in range(n - 1):
        if m[k * n + k] == 0:
            piv = -1
            for i in range(k + 1, n):
                if m[i * n + k] != 0:
                    piv = i
                    break
            if piv < 0:
                return 0
            for j in range(n):
                tmp = m[k * n + j]
                m[k * n + j] = m[piv * n + j]
                m[piv * n + j] = tmp
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i * n + j] = (m[i * n + j] * m[k * n + k] -
                                m[i * n + k] * m[k * n + j]) // prev
        prev = m[k * n + k]
    return sign * m[(n - 1) * n + (n - 1)]


cdef class _Tables:
    """Per-basis tables: det, cofactors, and the cofactor sums w and t
    (see the pure twin for their definitions)."""

    cdef int d, rank
    cdef long long det
    cdef long long *cof     # d * d
    cdef long long *w       # (1<<d) * d
    cdef long long *t       # (1<<d) * (1<<rank)

    def __cinit__(self, int d, tuple basis, tuple helpers):
        cdef int i, j, r, c, y, idx, sigma, low, n = d
        cdef long long rows[MAXD * MAXD]
        cdef long long sub[MAXD * MAXD]
        cdef int nb = len(basis)
        self.d = d
        self.rank = nb
        for i in range(nb):
            m = basis[i]
            for j in range(d):
                rows[i * d + j] = (m >> j) & 1
        for i in range(len(helpers)):
            idx = helpers[i]
            for j in range(d):
                rows[(nb + i) * d + j] = 1 if j == idx else 0
        for i in range(d * d):
            sub[i] = rows[i]
        self.det = _det_inplace(sub, d)
        self.cof = <long long *> malloc(d * d * sizeof(long long))
        self.w = <long long *> malloc((1 << d) * d * sizeof(long long))
        self.t = <long long *> malloc((1 << d) * (1 << nb) * sizeof(long long))
        # cofactors
        cdef int rr, cc, si
        cdef long long sgn
        for i in range(d):
            for j in range(d):
                si = 0
                for rr in range(d):
                    if rr == i:
                        continue
                    for cc in range(d):
                        if cc == j:
                            continue
                        sub[si] = rows[rr * d + cc]
                        si += 1
                sgn = -1 if (i + j) & 1 else 1
                self.cof[i * d + j] = sgn * _det_inplace(sub, d - 1) if d > 1 else sgn
        # w via subset DP over cube points
        for j in range(d):
            self.w[j] = 0
        for y in range(1, 1 << d):
            low = y & (-y)
            idx = 0
            while not (low >> idx) & 1:
                idx += 1
            for i in range(d):
                self.w[y * d + i] = self.w[(y ^ low) * d + i] + self.cof[i * d + idx]
        # t via subset DP over sigma patterns
        cdef int nr = 1 << nb
        for y in range(1 << d):
            self.t[y * nr] = 0
            for sigma in range(1, nr):
                low = sigma & (-sigma)
                idx = 0
                while not (low >> idx) & 1:
                    idx += 1
                self.t[y * nr + sigma] = (self.t[y * nr + (sigma ^ low)] +
                                          self.w[y * d + idx])

    def __dealloc__(self):
        if self.cof != NULL:
            free(self.cof)
        if self.w != NULL:
            free(self.w)
        if self.t != NULL:
            free(self.t)


_tables_cache = {}


cdef _Tables _tables(int d, tuple basis, tuple helpers):
    key = (d, basis)
    tab = _tables_cache.get(key)
    if tab is None:
        if len(_tables_cache) >= _MAX_CACHED_BASES:
            _tables_cache.clear()
        tab = _Tables(d, basis, helpers)
        _tables_cache[key] = tab
    return <_Tables> tab


cdef tuple _greedy_basis(int d, unsigned long long sset):
    """(basis masks, helper coordinates), as in the pure twin."""
    cdef long long ech[MAXD][MAXD]
    cdef int piv[MAXD]
    cdef long long v[MAXD]
    cdef long long a, b
    cdef int nech = 0, m, i, j, p
    basis = []
    helpers = []
    for m in range(1, 1 << d):
        if nech == d:
            break
        if not (sset >> m) & 1:
            continue
        for j in range(d):
            v[j] = (m >> j) & 1
        for i in range(nech):
            p = piv[i]
            if v[p] != 0:
                a = ech[i][p]
                b = v[p]
                for j in range(d):
                    v[j] = a * v[j] - b * ech[i][j]
        p = -1
        for j in range(d):
            if v[j] != 0:
                p = j
                break
        if p >= 0:
            piv[nech] = p
            for j in range(d):
                ech[nech][j] = v[j]
            nech += 1
            basis.append(m)
    for m in range(d):
        if nech == d:
            break
        for j in range(d):
            v[j] = 1 if j == m else 0
        for i in range(nech):
            p = piv[i]
            if v[p] != 0:
                a = ech[i][p]
                b = v[p]
                for j in range(d):
                    v[j] = a * v[j] - b * ech[i][j]
        p = -1
        for j in range(d):
            if v[j] != 0:
                p = j
                break
        if p >= 0:
            piv[nech] = p
            for j in range(d):
                ech[nech][j] = v[j]
            nech += 1
            helpers.append(m)
    return tuple(basis), tuple(helpers)


cdef unsigned long long _closure_valid(int d, unsigned long long sset,
                                       _Tables tab, int *out_nvalid,
                                       int *valid) :
    """Fill valid sigmas, return closed bitset."""
    cdef int r = tab.rank
    cdef int nr = 1 << r
    cdef long long det = tab.det
    cdef int sigma, ok, i, y, m, nvalid = 0
    cdef long long val
    cdef long long *t = tab.t
    cdef long long *w = tab.w
    for sigma in range(nr):
        ok = 1
        for m in range(1, 1 << d):
            if not (sset >> m) & 1:
                continue
            val = t[m * nr + sigma]
            if val != 0 and val != det:
                ok = 0
                break
        if ok:
            valid[nvalid] = sigma
            nvalid += 1
    out_nvalid[0] = nvalid
    cdef unsigned long long closed = 0
    for y in range(1, 1 << d):
        ok = 1
        for i in range(r, d):
            if w[y * d + i] != 0:
                ok = 0
                break
        if ok:
            for i in range(nvalid):
                val = t[y * nr + valid[i]]
                if val != 0 and val != det:
                    ok = 0
                    break
        if ok:
            closed |= (<unsigned long long> 1) << y
    return closed


def closure_and_rank(int d, sset):
    cdef unsigned long long ss = sset
    cdef int valid[MAXP]
    cdef int nvalid
    basis, helpers = _greedy_basis(d, ss)
    tab = _tables(d, basis, helpers)
    closed = _closure_valid(d, ss, tab, &nvalid, valid)
    return closed, len(basis)


def pair_rows(int d, closed):
    cdef unsigned long long ss = closed
    cdef int valid[MAXP]
    cdef int nvalid, j, i, n, m
    cdef long long det
    basis, helpers = _greedy_basis(d, ss)
    cdef _Tables tab = _tables(d, basis, helpers)
    _closure_valid(d, ss, tab, &nvalid, valid)
    det = tab.det
    cdef int members[MAXP]
    n = 0
    members[n] = 0
    n += 1
    for m in range(1, 1 << d):
        if (ss >> m) & 1:
            members[n] = m
            n += 1
    cdef int nr = 1 << tab.rank
    rows = []
    cdef unsigned long long row
    for i in range(nvalid):
        row = 0
        for j in range(n):
            if tab.t[members[j] * nr + valid[i]] == det:
                row |= (<unsigned long long> 1) << (n - 1 - j)
        rows.append(row)
    return rows, n


def a_vector_data(int d, closed):
    cdef unsigned long long ss = closed
    cdef int valid[MAXP]
    cdef int nvalid, i, j, k
    basis, helpers = _greedy_basis(d, ss)
    cdef _Tables tab = _tables(d, basis, helpers)
    _closure_valid(d, ss, tab, &nvalid, valid)
    cdef long long coord[MAXD]
    nums = []
    for i in range(nvalid):
        for j in range(d):
            coord[j] = 0
        for k in range(tab.rank):
            if (valid[i] >> k) & 1:
                for j in range(d):
                    coord[j] += tab.cof[k * d + j]
        nums.append(tuple(coord[j] for j in range(d)))
    return tab.det, nums


cdef unsigned long long _next_closed_c(int d, unsigned long long current,
                                        int *found):
    # found is an out-flag because bit 63 (the all-ones cube point at
    # d=6) makes the bitset itself unusable as a signed sentinel
    cdef int i
    cdef unsigned long long bit, below, cand, closed
    cdef int valid[MAXP]
    cdef int nvalid
    for i in range((1 << d) - 1, 0, -1):
        bit = (<unsigned long long> 1) << i
        if current & bit:
            continue
        below = bit - 1
        cand = (current & below) | bit
        basis, helpers = _greedy_basis(d, cand)
        tab = _tables(d, basis, helpers)
        closed = _closure_valid(d, cand, <_Tables> tab, &nvalid, valid)
        if (closed & below) == (current & below):
            found[0] = 1
            return closed
    found[0] = 0
    return 0


def next_closed(int d, current):
    cdef unsigned long long cur = current
    cdef int found
    res = _next_closed_c(d, cur, &found)
    if not found:
        return -1
    return res


def heuristic_form(rows, int n):
    cdef int m = len(rows)
    cdef unsigned long long cur[MAXP]
    cdef unsigned long long cols[MAXP]
    cdef unsigned long long nxt[MAXP]
    cdef int i, j, it, changed
    cdef unsigned long long jbit
    for i in range(m):
        cur[i] = rows[i]
    _sort_u64(cur, m)
    for it in range(6):
        for j in range(n):
            cols[j] = 0
            jbit = (<unsigned long long> 1) << (n - 1 - j)
            for i in range(m):
                if cur[i] & jbit:
                    cols[j] |= (<unsigned long long> 1) << (m - 1 - i)
        _sort_u64(cols, n)
        for i in range(m):
            nxt[i] = 0
            jbit = (<unsigned long long> 1) << (m - 1 - i)
            for j in range(n):
                if cols[j] & jbit:
                    nxt[i] |= (<unsigned long long> 1) << (n - 1 - j)
        _sort_u64(nxt, m)
        changed = 0
        for i in range(m):
            if nxt[i] != cur[i]:
                changed = 1
            cur[i] = nxt[i]
        if not changed:
            break
    cdef int width = (n + 7) // 8
    out = bytearray(b"%d,%d:" % (m, n))
    cdef int b
    for i in range(m):
        for b in range(width - 1, -1, -1):
            out.append(<unsigned char> ((cur[i] >> (8 * b)) & 0xFF))
    return bytes(out)


cdef void _sort_u64(unsigned long long *a, int n) nogil:
    # insertion sort; n <= 64
    cdef int i, j
    cdef unsigned long long key
    for i in range(1, n):
        key = a[i]
        j = i - 1
        while j >= 0 and a[j] > key:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = key


def enum_branch(int d, int top_count, int p_index):
    cdef unsigned long long top_bits = 0, p_bits = 0
    cdef int t
    for t in range(top_count):
        top_bits |= (<unsigned long long> 1) << (t + 1)
        if (p_index >> t) & 1:
            p_bits |= (<unsigned long long> 1) << (t + 1)

    out = {}
    cdef long long visited = 0, spanning = 0
    cdef unsigned long long a = p_bits
    cdef int found
    cdef int valid[MAXP]
    cdef int nvalid

    basis, helpers = _greedy_basis(d, a)
    tab = _tables(d, basis, helpers)
    closed = _closure_valid(d, a, <_Tables> tab, &nvalid, valid)
    if closed == a:
        visited += 1
        if len(basis) == d:
            spanning += 1
            _record(d, a, out)
    while True:
        a = _next_closed_c(d, a, &found)
        if not found:
            break
        if (a & top_bits) != p_bits:
            break
        visited += 1
        basis, helpers = _greedy_basis(d, a)
        if len(basis) == d:
            spanning += 1
            _record(d, a, out)
    return visited, spanning, sorted(out.items())


cdef _record(int d, unsigned long long a, dict out):
    rows, n = pair_rows(d, a)
    hb = heuristic_form(rows, n)
    prev = out.get(hb)
    if prev is None or a < <unsigned long long> prev:
        out[hb] = a


# ---------------------------------------------------------------------------
# exact facet scan (brute force over vertex d-subsets)
# ---------------------------------------------------------------------------


cdef long long _llabs(long long x) nogil:
    return -x if x < 0 else x


cdef long long _gcd_ll(long long a, long long b) nogil:
    cdef long long t
    a = _llabs(a)
    b = _llabs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


def facet_scan(int dim, verts):
    cdef int n = len(verts)
    cdef long long *pts = <long long *> malloc(n * dim * sizeof(long long))
    cdef int i, j, k, lvl, hi, lo, all_zero
    cdef long long c, s, g
    cdef long long rows[MAXD * MAXD]
    cdef long long sub[MAXD * MAXD]
    cdef long long normal[MAXD]
    cdef int combo[MAXD]
    try:
        for i in range(n):
            v = verts[i]
            for j in range(dim):
                pts[i * dim + j] = v[j]
        found = set()
        if n < dim:
            return []
        for j in range(dim):
            combo[j] = j
        while True:
            # normal of the hyperplane through the combo points
            for i in range(1, dim):
                for j in range(dim):
                    rows[(i - 1) * dim + j] = (pts[combo[i] * dim + j] -
                                               pts[combo[0] * dim + j])
            all_zero = 1
            for j in range(dim):
                k = 0
                for i in range(dim - 1):
                    for lvl in range(dim):
                        if lvl == j:
                            continue
                        sub[k] = rows[i * dim + lvl]
                        k += 1
                normal[j] = _det_inplace(sub, dim - 1)
                if j & 1:
                    normal[j] = -normal[j]
                if normal[j] != 0:
                    all_zero = 0
            if not all_zero:
                c = 0
                for j in range(dim):
                    c += normal[j] * pts[combo[0] * dim + j]
                hi = lo = 0
                for i in range(n):
                    s = 0
                    for j in range(dim):
                        s += normal[j] * pts[i * dim + j]
                    if s > c:
                        hi = 1
                    elif s < c:
                        lo = 1
                    if hi and lo:
                        break
                if not (hi and lo):
                    if hi:
                        for j in range(dim):
                            normal[j] = -normal[j]
                        c = -c
                    g = 0
                    for j in range(dim):
                        g = _gcd_ll(g, normal[j])
                    g = _gcd_ll(g, c)
                    found.add((tuple(normal[j] // g for j in range(dim)), c // g))
            # next combination
            i = dim - 1
            while i >= 0 and combo[i] == n - dim + i:
                i -= 1
            if i < 0:
                break
            combo[i] += 1
            for j in range(i + 1, dim):
                combo[j] = combo[j - 1] + 1
        return sorted(found)
    finally:
        free(pts)
