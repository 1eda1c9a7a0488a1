# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled jet-counting kernel; same algorithm and signature as ``_kernel_py``."""

from libc.stdlib cimport calloc, free
from libc.stdint cimport int64_t

ctypedef int64_t i64


cdef struct State:
    int g, m, q, h, local, width, ntail, nfixed
    i64 budget, ops
    int *nexp          # [g+1]
    int *b             # [(g+1)*(g+1)], b[k*(g+1)+j]
    int *maxe          # [g+1]
    int *fixed         # [nfixed]
    i64 *X             # [(g+1)*(m+1)]
    i64 *pw            # concatenated per variable
    int *pw_off        # [g+1]
    i64 *Q             # concatenated per equation
    int *q_off         # [g+1]
    i64 *inv           # [q]
    i64 *hist          # [ntail+1]
    i64 *rows          # [g*width*(ntail+1)]
    i64 *R             # [(g+1)*width]
    i64 *ser           # [width]
    i64 *tmp           # [width]


cdef inline i64* PW(State *s, int i, int e) noexcept nogil:
    return s.pw + s.pw_off[i] + e * (s.m + 1)


cdef inline i64* QR(State *s, int k, int r) noexcept nogil:
    return s.Q + s.q_off[k] + r * (s.m + 1)


cdef void set_coord(State *s, int i, int l, i64 v) noexcept nogil:
    cdef int e, t
    cdef i64 acc
    cdef i64 *xi = s.X + i * (s.m + 1)
    cdef i64 *prev
    xi[l] = v
    for e in range(1, s.maxe[i] + 1):
        prev = PW(s, i, e - 1)
        acc = 0
        for t in range(l + 1):
            acc = (acc + xi[t] * prev[l - t]) % s.q
        PW(s, i, e)[l] = acc
    s.ops += s.maxe[i] * (l + 1)


cdef i64 prod_at(State *s, int k, int l) noexcept nogil:
    cdef int r, t
    cdef i64 acc
    cdef int G = s.g + 1
    cdef i64 *col
    cdef i64 *prev
    QR(s, k, 0)[l] = PW(s, 0, s.b[k * G])[l]
    for r in range(1, k):
        col = PW(s, r, s.b[k * G + r])
        prev = QR(s, k, r - 1)
        acc = 0
        for t in range(l + 1):
            acc = (acc + prev[t] * col[l - t]) % s.q
        QR(s, k, r)[l] = acc
    s.ops += k * (l + 1)
    return QR(s, k, k - 1)[l]


cdef inline i64 F(State *s, int k, int l) noexcept nogil:
    return (PW(s, k, s.nexp[k])[l] - prod_at(s, k, l) + s.q) % s.q


cdef int eliminate(State *s, int nrows) noexcept nogil:
    cdef int ncols = s.ntail
    cdef int W = ncols + 1
    cdef int rank = 0, col, r, c, piv
    cdef i64 f, a, tmpv
    cdef i64 *rows = s.rows
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if rows[r * W + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(W):
                tmpv = rows[piv * W + c]
                rows[piv * W + c] = rows[rank * W + c]
                rows[rank * W + c] = tmpv
        f = s.inv[rows[rank * W + col]]
        for c in range(col, W):
            rows[rank * W + c] = rows[rank * W + c] * f % s.q
        for r in range(nrows):
            if r != rank and rows[r * W + col] != 0:
                a = rows[r * W + col]
                for c in range(col, W):
                    rows[r * W + c] = (rows[r * W + c] - a * rows[rank * W + c] % s.q + s.q) % s.q
        rank += 1
    for r in range(rank, nrows):
        if rows[r * W + ncols] != 0:
            return -1
    return rank


cdef void leaf(State *s) noexcept nogil:
    cdef int g = s.g, m = s.m, q = s.q, h = s.h, width = s.width
    cdef int G = g + 1, W = s.ntail + 1
    cdef int i, t, k, j, e, u, nk, nrows, rank
    cdef i64 acc
    cdef i64 *dk
    cdef i64 *col
    cdef i64 *row
    if h > m:
        s.hist[0] += 1
        return
    for i in range(G):
        for t in range(h, m + 1):
            set_coord(s, i, t, 0)
    for k in range(1, G):
        for t in range(h, m + 1):
            prod_at(s, k, t)
    nrows = 0
    for k in range(1, G):
        nk = s.nexp[k]
        dk = PW(s, k, nk - 1)
        for j in range(k):
            if s.b[k * G + j] == 0:
                continue
            for t in range(width):
                s.ser[t] = 1 if t == 0 else 0
            for i in range(k):
                e = s.b[k * G + i] - 1 if i == j else s.b[k * G + i]
                col = PW(s, i, e)
                for t in range(width):
                    acc = 0
                    for u in range(t + 1):
                        acc = (acc + s.ser[u] * col[t - u]) % q
                    s.tmp[t] = acc
                for t in range(width):
                    s.ser[t] = s.tmp[t]
            for t in range(width):
                s.R[j * width + t] = s.b[k * G + j] * s.ser[t] % q
        for t in range(h, m + 1):
            row = s.rows + nrows * W
            for u in range(W):
                row[u] = 0
            for u in range(h, t + 1):
                row[k * width + u - h] = nk * dk[t - u] % q
                for j in range(k):
                    if s.b[k * G + j] != 0:
                        row[j * width + u - h] = (row[j * width + u - h] - s.R[j * width + t - u] + q) % q
            row[s.ntail] = (PW(s, k, nk)[t] - QR(s, k, k - 1)[t] + q) % q
            nrows += 1
    rank = eliminate(s, nrows)
    s.ops += nrows * W * (rank if rank > 1 else 1)
    if rank >= 0:
        s.hist[s.ntail - rank] += 1

cdef void level(State *s, int l, int x0) noexcept nogil:
    cdef int v
    if s.ops > s.budget:
        return
    if l == s.h:
        leaf(s)
        return
    if l == 0 and s.local:
        set_coord(s, 0, 0, 0)
        var(s, 0, 1)
    elif x0 >= 0:
        set_coord(s, 0, l, x0)
        var(s, l, 1)
    else:
        for v in range(s.q):
            set_coord(s, 0, l, v)
            var(s, l, 1)


cdef void var(State *s, int l, int k) noexcept nogil:
    cdef int v, q = s.q
    cdef i64 base, coef
    if k > s.g:
        level(s, l + 1, s.fixed[l + 1] if l + 1 < s.nfixed else -1)
        return
    if l == 0:
        if s.local:
            set_coord(s, k, 0, 0)
            if F(s, k, 0) == 0:
                var(s, 0, k + 1)
            return
        for v in range(q):
            set_coord(s, k, 0, v)
            if F(s, k, 0) == 0:
                var(s, 0, k + 1)
        return
    set_coord(s, k, l, 0)
    base = F(s, k, l)
    coef = s.nexp[k] * PW(s, k, s.nexp[k] - 1)[0] % q
    if coef != 0:
        set_coord(s, k, l, (q - base) % q * s.inv[coef] % q)
        var(s, l, k + 1)
    elif base == 0:
        for v in range(q):
            set_coord(s, k, l, v)
            var(s, l, k + 1)


def count_task(int g, int m, int q, int h, bint local, nexp, b, fixed, budget):
    """Histogram of free tail dimensions over head leaves with ``x_0^(l) = fixed[l]``."""
    cdef State s
    cdef int i, k, j, e, total, G = g + 1
    s.g = g; s.m = m; s.q = q; s.h = h; s.local = local
    s.width = m + 1 - h if m + 1 > h else 0
    s.ntail = G * s.width
    s.nfixed = len(fixed)
    s.budget = budget
    s.ops = 0
    s.nexp = <int *> calloc(G, sizeof(int))
    s.b = <int *> calloc(G * G, sizeof(int))
    s.maxe = <int *> calloc(G, sizeof(int))
    s.fixed = <int *> calloc(s.nfixed + 1, sizeof(int))
    s.X = <i64 *> calloc(G * (m + 1), sizeof(i64))
    s.pw_off = <int *> calloc(G, sizeof(int))
    s.q_off = <int *> calloc(G, sizeof(int))
    s.inv = <i64 *> calloc(q, sizeof(i64))
    s.hist = <i64 *> calloc(s.ntail + 1, sizeof(i64))
    s.rows = <i64 *> calloc(g * s.width * (s.ntail + 1) + 1, sizeof(i64))
    s.R = <i64 *> calloc(G * s.width + 1, sizeof(i64))
    s.ser = <i64 *> calloc(s.width + 1, sizeof(i64))
    s.tmp = <i64 *> calloc(s.width + 1, sizeof(i64))
    s.pw = NULL
    s.Q = NULL
    try:
        for i in range(G):
            s.nexp[i] = nexp[i]
        for k in range(1, G):
            for j in range(k):
                s.b[k * G + j] = b[k][j]
        for i in range(s.nfixed):
            s.fixed[i] = fixed[i]
        for i in range(1, q):
            s.inv[i] = pow(i, q - 2, q)
        total = 0
        for i in range(G):
            e = s.nexp[i] if i else 0
            for k in range(i + 1, G):
                if s.b[k * G + i] > e:
                    e = s.b[k * G + i]
            s.maxe[i] = e
            s.pw_off[i] = total
            total += (e + 1) * (m + 1)
        s.pw = <i64 *> calloc(total, sizeof(i64))
        for i in range(G):
            s.pw[s.pw_off[i]] = 1
        total = 0
        for k in range(G):
            s.q_off[k] = total
            total += k * (m + 1)
        s.Q = <i64 *> calloc(total + 1, sizeof(i64))
        with nogil:
            level(&s, 0, s.fixed[0] if s.nfixed > 0 else -1)
        hist = [s.hist[i] for i in range(s.ntail + 1)]
        return hist, s.ops
    finally:
        free(s.nexp); free(s.b); free(s.maxe); free(s.fixed); free(s.X)
        free(s.pw_off); free(s.q_off); free(s.inv); free(s.hist); free(s.rows)
        free(s.R); free(s.ser); free(s.tmp); free(s.pw); free(s.Q)
