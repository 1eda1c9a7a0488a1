"""Pure-Python jet-counting kernel; mirrors ``_kernel.pyx`` line for line.

The search enumerates the head levels ``0..h-1`` (``h = m//2 + 1``)
level-major.  At level ``l >= 1`` the coordinate ``x_k^(l)`` enters
``F_k^(l)`` linearly with coefficient ``n_k (x_k^(0))^(n_k - 1)``, so it is
solved for whenever that coefficient is a unit and enumerated otherwise.
Every tail coordinate (level ``>= h``) enters the remaining equations
linearly because two of them already multiply past ``t^m``; each head leaf
therefore contributes ``q^(free dims)`` solutions of an affine system.
"""

from __future__ import annotations

from typing import Sequence


class _Search:
    def __init__(self, g, m, q, h, local, nexp, b, budget):
        self.g, self.m, self.q, self.h, self.local = g, m, q, h, local
        self.nexp = nexp
        self.b = b
        self.budget = budget
        self.ops = 0
        self.maxe = [max([nexp[i] if i else 0] + [b[k][i] for k in range(i + 1, g + 1)]) for i in range(g + 1)]
        self.X = [[0] * (m + 1) for _ in range(g + 1)]
        # pw[i][e][t]: t-coefficient of x_i(t)^e
        self.pw = [[[1 if (e == 0 and t == 0) else 0 for t in range(m + 1)] for e in range(self.maxe[i] + 1)] for i in range(g + 1)]
        # Q[k][r][t]: t-coefficient of prod_{j<=r} x_j^{b_kj}
        self.Q = [[[0] * (m + 1) for _ in range(k)] for k in range(g + 1)]
        self.ntail = (g + 1) * (m + 1 - h)
        self.hist = [0] * (self.ntail + 1)
        self.inv = [0] + [pow(a, -1, q) for a in range(1, q)]

    def set_coord(self, i: int, l: int, v: int) -> None:
        q, X, pw = self.q, self.X, self.pw[i]
        X[i][l] = v
        xi = X[i]
        for e in range(1, self.maxe[i] + 1):
            prev = pw[e - 1]
            acc = 0
            for s in range(l + 1):
                acc += xi[s] * prev[l - s]
            pw[e][l] = acc % q
        self.ops += self.maxe[i] * (l + 1)

    def prod_at(self, k: int, l: int) -> int:
        """Fill ``Q[k][*][l]`` (all ``j < k`` must be set at level ``l``) and return the product coefficient."""
        q, b, Qk = self.q, self.b[k], self.Q[k]
        Qk[0][l] = self.pw[0][b[0]][l]
        for r in range(1, k):
            col = self.pw[r][b[r]]
            prev = Qk[r - 1]
            acc = 0
            for s in range(l + 1):
                acc += prev[s] * col[l - s]
            Qk[r][l] = acc % q
        self.ops += k * (l + 1)
        return Qk[k - 1][l]

    def F(self, k: int, l: int) -> int:
        return (self.pw[k][self.nexp[k]][l] - self.prod_at(k, l)) % self.q

    # -- head search
    def level(self, l: int, x0_fixed: int) -> None:
        if self.ops > self.budget:
            return
        if l == self.h:
            self.leaf()
            return
        if l == 0 and self.local:
            vals = (0,)
        elif x0_fixed >= 0:
            vals = (x0_fixed,)
        else:
            vals = range(self.q)
        for v in vals:
            self.set_coord(0, l, v)
            self.var(l, 1)

    def var(self, l: int, k: int) -> None:
        if k > self.g:
            nxt = self.fixed[l + 1] if l + 1 < len(self.fixed) else -1
            self.level(l + 1, nxt)
            return
        q = self.q
        if l == 0:
            for v in (0,) if self.local else range(q):
                self.set_coord(k, 0, v)
                if self.F(k, 0) == 0:
                    self.var(0, k + 1)
            return
        self.set_coord(k, l, 0)
        base = self.F(k, l)
        coef = self.nexp[k] * self.pw[k][self.nexp[k] - 1][0] % q
        if coef:
            self.set_coord(k, l, (-base * self.inv[coef]) % q)
            self.var(l, k + 1)
        elif base == 0:
            for v in range(q):
                self.set_coord(k, l, v)
                self.var(l, k + 1)

    # -- linear tail
    def leaf(self) -> None:
        g, m, q, h = self.g, self.m, self.q, self.h
        if h > m:
            self.hist[0] += 1
            return
        for i in range(g + 1):
            for t in range(h, m + 1):
                self.set_coord(i, t, 0)
        width = m + 1 - h
        rows = []
        for k in range(1, g + 1):
            for t in range(h, m + 1):
                self.prod_at(k, t)
        for k in range(1, g + 1):
            nk, bk = self.nexp[k], self.b[k]
            dk = self.pw[k][nk - 1]
            # R[j]: d/dx_j of prod_{i<k} x_i^{b_ki}, truncated at degree m - h
            R = {}
            for j in range(k):
                if bk[j] == 0:
                    continue
                ser = [1] + [0] * (width - 1)
                for i in range(k):
                    col = self.pw[i][bk[i] - 1 if i == j else bk[i]]
                    ser = [sum(ser[s] * col[t - s] for s in range(t + 1)) % q for t in range(width)]
                R[j] = [bk[j] * x % q for x in ser]
            for t in range(h, m + 1):
                row = [0] * (self.ntail + 1)
                for s in range(h, t + 1):
                    row[k * width + s - h] = nk * dk[t - s] % q
                    for j, ser in R.items():
                        row[j * width + s - h] = (row[j * width + s - h] - ser[t - s]) % q
                row[-1] = (self.pw[k][nk][t] - self.Q[k][k - 1][t]) % q
                rows.append(row)
        rank = _eliminate(rows, self.ntail, q, self.inv)
        self.ops += len(rows) * (self.ntail + 1) * max(rank, 1)
        if rank >= 0:
            self.hist[self.ntail - rank] += 1


def _eliminate(rows: list[list[int]], ncols: int, q: int, inv: Sequence[int]) -> int:
    """Row-reduce ``[A | c]`` in place; rank of ``A`` if consistent, else ``-1``."""
    rank = 0
    nrows = len(rows)
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        f = inv[pr[col]]
        for c in range(col, ncols + 1):
            pr[c] = pr[c] * f % q
        for r in range(nrows):
            if r != rank and rows[r][col]:
                a = rows[r][col]
                row = rows[r]
                for c in range(col, ncols + 1):
                    row[c] = (row[c] - a * pr[c]) % q
        rank += 1
    for r in range(rank, nrows):
        if rows[r][ncols]:
            return -1
    return rank


def count_task(
    g: int,
    m: int,
    q: int,
    h: int,
    local: bool,
    nexp: Sequence[int],
    b: Sequence[Sequence[int]],
    fixed: Sequence[int],
    budget: int,
) -> tuple[list[int], int]:
    """Histogram of free tail dimensions over head leaves with ``x_0^(l) = fixed[l]``.

    Returns ``(hist, ops)``; the caller treats ``ops > budget`` as an overrun.
    """
    s = _Search(g, m, q, h, local, list(nexp), [list(r) for r in b], budget)
    s.fixed = list(fixed)
    s.level(0, s.fixed[0] if s.fixed else -1)
    return s.hist, s.ops
