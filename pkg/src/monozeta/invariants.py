"""Numerical invariants: structural pairs (N_i, nu_i), lct, jet codimensions,
side-branch windows and intervals, candidate poles and their residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod

from .errors import DomainError
from .semigroup import SemigroupData

__all__ = [
    "StructuralPair",
    "PoleCandidate",
    "structural_pairs",
    "lct",
    "j_of_k",
    "window_index",
    "c_ik",
    "c_main",
    "codim_B",
    "is_D_empty",
    "interval",
    "interval_length",
    "side_period",
    "candidate_poles",
    "residues",
]


@dataclass(frozen=True)
class StructuralPair:
    i: int
    N: int
    nu: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.nu, self.N)


@dataclass(frozen=True)
class PoleCandidate:
    value: Fraction
    source: str  # "gauge" or "structural"
    index: int  # 0 for the gauge pole -g, i for -nu_i/N_i
    nu: int  # unreduced numerator pair as printed, (g, 1) for the gauge pole
    N: int
    residue: Fraction | None = None
    order: int = 1

    def to_dict(self) -> dict:
        d = {
            "value": str(self.value),
            "source": self.source if self.source == "gauge" else f"structural {self.index}",
            "nu": self.nu,
            "N": self.N,
            "order": self.order,
        }
        if self.residue is not None:
            d["residue"] = str(self.residue)
        return d


def _nu_over_N(S: SemigroupData, i: int) -> Fraction:
    g, beta, n = S.g, S.gens, S.n_
    head = Fraction(sum(beta[: i + 1]) - sum(n(l) * beta[l] for l in range(1, i)), n(i) * beta[i])
    return head + (i - 1) + sum(Fraction(1, n(l)) for l in range(i + 1, g + 1))


def structural_pairs(S: SemigroupData) -> list[StructuralPair]:
    pairs = []
    for i in range(1, S.g + 1):
        N = lcm(S.gens[i] // S.e[i], *(S.n_(l) for l in range(i, S.g + 1)))
        nu = N * _nu_over_N(S, i)
        if nu.denominator != 1:
            raise ArithmeticError(f"nu_{i} = {nu} is not an integer for {S}")
        pairs.append(StructuralPair(i, N, int(nu)))
    return pairs


def lct(S: SemigroupData) -> Fraction:
    """Log canonical threshold ``sum_{l=0..g} 1/n_l``."""
    return sum((Fraction(1, x) for x in S.n_all), Fraction(0))


def j_of_k(S: SemigroupData, k: int) -> int:
    """Index where the side branch at ``k n_0 n_1`` stops; ``g+1`` means it never does."""
    if k < 1:
        raise DomainError("k must be >= 1")
    j = 2
    # n_2 ... n_{j-1} | k for j = 2 trivially; grow while the next n divides
    while j <= S.g and k % prod(S.n_(l) for l in range(2, j + 1)) == 0:
        j += 1
    return j


def _edge(S: SemigroupData, i: int, k: int) -> Fraction | None:
    """``k n_i b_i / e_1``; ``None`` stands for +infinity (``i = g+1``)."""
    if i > S.g:
        return None
    return Fraction(k * S.n_(i) * S.gens[i], S.e[1])


def window_index(S: SemigroupData, k: int, m: int) -> int | None:
    """Unique ``i`` in ``1..g`` with ``k n_i b_i/e_1 <= m < k n_{i+1} b_{i+1}/e_1``."""
    if m < k * S.n0 * S.n_(1):
        return None
    i = 1
    while i < S.g and m >= _edge(S, i + 1, k):
        i += 1
    return i


def c_ik(S: SemigroupData, i: int, k: int, m: int) -> int:
    """Codimension of the side stratum ``D_{m,k}`` on window ``i``."""
    g = S.g
    if not (1 <= i <= g) or k < 1:
        raise DomainError(f"inadmissible (i, k) = ({i}, {k})")
    if i >= j_of_k(S, k):
        raise DomainError(f"i = {i} >= j({k}) = {j_of_k(S, k)}")
    lo, hi = _edge(S, i, k), _edge(S, i + 1, k)
    if m < lo or (hi is not None and m >= hi):
        raise DomainError(f"m = {m} outside [{lo}, {hi if hi is not None else 'inf'}) for (i, k) = ({i}, {k})")
    e1 = S.e[1]
    total = Fraction(k * (S.n0 + S.n_(1)))
    total += sum(Fraction(k * S.gens[l], e1) for l in range(2, i + 1))
    total += sum(m - Fraction(k * S.n_(l) * S.gens[l], e1) + 1 for l in range(1, i + 1))
    total += sum(m // S.n_(l) + 1 for l in range(i + 1, g + 1))
    if total.denominator != 1:
        raise DomainError(f"c_{{{i},{k}}}({m}) = {total} is not integral")
    return int(total)


def c_main(S: SemigroupData, m: int) -> int:
    """``c(m) = g + 1 + sum_{i=0..g} [m/n_i]``: codimension of the main stratum."""
    return S.g + 1 + sum(m // x for x in S.n_all)


def codim_B(S: SemigroupData, m: int) -> int:
    if m < 1:
        raise DomainError("m must be >= 1")
    n0n1 = S.n0 * S.n_(1)
    if m % n0n1:
        return c_main(S, m)
    q = m // n0n1
    return S.g + q * (S.n0 + S.n_(1)) + sum(m // S.n_(i) for i in range(2, S.g + 1))


def is_D_empty(S: SemigroupData, m: int, k: int) -> bool:
    if m < k * S.n0 * S.n_(1):
        raise DomainError(f"D_{{{m},{k}}} needs m >= k n_0 n_1")
    edge = _edge(S, j_of_k(S, k), k)
    return edge is not None and m >= edge


def _nprod(S: SemigroupData, lo: int, hi: int) -> int:
    return prod(S.n_(l) for l in range(lo, hi + 1))


def interval_length(S: SemigroupData, i: int) -> int:
    """``l_i = (n_{i+1} b_{i+1} - n_i b_i) / e_i`` for ``i = 1..g-1``."""
    if not 1 <= i < S.g:
        raise DomainError(f"interval length undefined for i = {i}")
    num = S.n_(i + 1) * S.gens[i + 1] - S.n_(i) * S.gens[i]
    return num // S.e[i]


def interval(S: SemigroupData, i: int, k: int, p: int) -> tuple[int, int]:
    """Half-open ``[start, stop)`` of ``I_{i,k}^{(p)}``."""
    if not 1 <= i < S.g:
        raise DomainError(f"no intervals for i = {i}")
    step = _nprod(S, 2, i)
    if k < 1 or k % step:
        raise DomainError(f"k = {k} is not a positive multiple of n_2...n_{i} = {step}")
    if not 1 <= p <= k // step:
        raise DomainError(f"p = {p} outside 1..{k // step}")
    start = _edge(S, i, k)
    if start.denominator != 1:
        raise DomainError("non-integral interval start")
    li = interval_length(S, i)
    start = int(start)
    return start + (p - 1) * li, start + p * li


def side_period(S: SemigroupData, i: int) -> int:
    """``K_1 = N_1/(n_0 n_1)`` and ``K_i = e_i N_i/(n_i b_i)`` for ``i >= 2``."""
    pair = structural_pairs(S)[i - 1]
    num = pair.N * (1 if i == 1 else S.e[i])
    den = S.n0 * S.n_(1) if i == 1 else S.n_(i) * S.gens[i]
    if num % den:
        raise ArithmeticError(f"K_{i} not integral for {S}")
    return num // den


def candidate_poles(S: SemigroupData) -> list[PoleCandidate]:
    out = [PoleCandidate(Fraction(-S.g), "gauge", 0, S.g, 1)]
    for p in structural_pairs(S):
        out.append(PoleCandidate(-p.ratio, "structural", p.i, p.nu, p.N))
    out.sort(key=lambda c: c.value)
    return out


def _link(S: SemigroupData, i: int) -> Fraction:
    """``e_{i+1} / (n_i b_i b_{i+1}) * (n_{i+1} b_{i+1} - n_i b_i)``, shared by the residue table."""
    b, n = S.gens, S.n_
    return Fraction(S.e[i + 1] * (n(i + 1) * b[i + 1] - n(i) * b[i]), n(i) * b[i] * b[i + 1])


def residues(S: SemigroupData) -> dict[Fraction, Fraction]:
    """Residues of the topological zeta function at every candidate pole, from the closed table."""
    g = S.g
    pairs = structural_pairs(S)
    r = [None] + [p.ratio for p in pairs]
    N = [None] + [p.N for p in pairs]
    out: dict[Fraction, Fraction] = {Fraction(-g): Fraction(g) / (pairs[-1].nu - g * pairs[-1].N)}
    for i in range(1, g + 1):
        if g == 1:
            R = N[1] + 1 / (g - r[1])
        elif i == 1:
            R = N[1] + _link(S, 1) * N[1] / (r[2] - r[1])
        else:
            R = _link(S, i - 1) * N[i] / (r[i - 1] - r[i])
            if i < g:
                R += _link(S, i) * N[i] / (r[i + 1] - r[i])
            else:
                R += 1 / (g - r[g])
        out[-r[i]] = r[i] / N[i] * R
    return dict(sorted(out.items()))
