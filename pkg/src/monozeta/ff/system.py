"""Truncated jet equations of the monomial curve over a prime field."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import BadCharacteristic
from ..semigroup import SemigroupData

__all__ = ["JetSystem", "build_jet_system", "evaluate", "is_prime"]

MAX_Q = 1 << 16


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class JetSystem:
    """``f_k = x_k^{n_k} - prod_{j<k} x_j^{b_kj}`` for ``k = 1..g`` on ``(m+1)``-jets over ``F_q``.

    ``exps[k-1] = (n_k, (b_k0, ..., b_k(k-1)))``. The coordinates are
    ``x_i^(j)`` for ``i = 0..g`` and ``j = 0..m``; the equations ``F_k^(l)``
    are the ``t^l`` coefficients of ``f_k(x(t))`` and are evaluated on demand.
    """

    S: SemigroupData
    m: int
    q: int

    @property
    def g(self) -> int:
        return self.S.g

    @property
    def nvars(self) -> int:
        return (self.g + 1) * (self.m + 1)

    @property
    def exps(self) -> list[tuple[int, tuple[int, ...]]]:
        return self.S.equations()


def build_jet_system(S: SemigroupData, m: int, q: int) -> JetSystem:
    if m < 0:
        raise ValueError("m must be >= 0")
    if not is_prime(q) or q >= MAX_Q:
        raise BadCharacteristic(f"q = {q} must be a prime below {MAX_Q}")
    bad = [i for i, n in enumerate(S.n_all) if n % q == 0]
    if bad:
        raise BadCharacteristic(f"q = {q} divides n_{bad[0]} = {S.n_(bad[0])}")
    return JetSystem(S, m, q)


def _series_mul(a: Sequence[int], b: Sequence[int], m: int, q: int) -> list[int]:
    out = [0] * (m + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(m + 1 - i):
                out[i + j] += x * b[j]
    return [v % q for v in out]


def _series_pow(a: Sequence[int], e: int, m: int, q: int) -> list[int]:
    out = [1] + [0] * m
    for _ in range(e):
        out = _series_mul(out, a, m, q)
    return out


def evaluate(system: JetSystem, point: Sequence[Sequence[int]]) -> list[list[int]]:
    """``F_k^(l)`` for ``k = 1..g`` (rows) and ``l = 0..m`` (columns) at ``point[i][j] = x_i^(j)``."""
    m, q = system.m, system.q
    out = []
    for k, (nk, row) in enumerate(system.exps, start=1):
        lhs = _series_pow(point[k], nk, m, q)
        rhs = [1] + [0] * m
        for j, b in enumerate(row):
            rhs = _series_mul(rhs, _series_pow(point[j], b, m, q), m, q)
        out.append([(x - y) % q for x, y in zip(lhs, rhs)])
    return out
