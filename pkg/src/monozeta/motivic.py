"""Closed-form global and local motivic zeta functions.

Every branch term is stored in the form it contributes to the Poincare series
``J_Y(T)`` (each carries an overall factor ``T``); the zeta function is then
``Z = 1 - ((1 - T)/T) J``.  The local version replaces the leading ``1`` by
``L^-(g+1)`` and omits the side branch of the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .errors import DomainError
from .gr_algebra import L, DenomFactor, LaurentL, MotRat, PolyT
from .invariants import c_ik, interval, side_period, structural_pairs
from .jets import poincare_truncated
from .semigroup import SemigroupData

__all__ = [
    "ZetaAssembly",
    "term_side_zero",
    "term_main",
    "z_i_polynomial",
    "term_side",
    "term_infinite",
    "zeta_motivic",
    "series_consistency",
    "cleared_numerator",
]

_ONE_MINUS_T = PolyT.from_bi({(0, 0): 1, (1, 0): -1})


def term_side_zero(S: SemigroupData) -> MotRat:
    """``(L-1) L^-(g+1) T / (1 - L^-g T)``."""
    g = S.g
    return MotRat(PolyT.monomial(1, (L - 1).shift(-(g + 1))), (DenomFactor(g, 1),))


def term_main(S: SemigroupData) -> MotRat:
    """``L^-(g+1) T sum_{r<N_1} L^-sum_i[r/n_i] T^r / (1 - L^-nu_1 T^N_1)``."""
    g = S.g
    p1 = structural_pairs(S)[0]
    num = {(r + 1, -(g + 1) - sum(r // x for x in S.n_all)): 1 for r in range(p1.N)}
    return MotRat(PolyT.from_bi(num), (DenomFactor(p1.nu, p1.N),))


def z_i_polynomial(S: SemigroupData, i: int) -> PolyT:
    """The polynomial ``Z_i(T)`` collecting one period of the side strata on window ``i``."""
    if not 1 <= i < S.g:
        raise DomainError(f"Z_i is defined for i = 1..g-1, got {i}")
    pairs = structural_pairs(S)
    step = prod(S.n_(l) for l in range(2, i + 1))
    reps = S.e[i + 1] * pairs[i].N // S.gens[i + 1]
    out: dict = {}
    for r in range(side_period(S, i)):
        for rp in range(1, reps + 1):
            k = (rp + r) * step
            lo, hi = interval(S, i, k, rp)
            for m in range(lo, hi):
                key = (m, -(c_ik(S, i, k, m) + 1))
                out[key] = out.get(key, 0) + 1
    return PolyT.from_bi(out)


def term_side(S: SemigroupData, i: int) -> MotRat:
    """``(L-1) T Z_i(T) / ((1 - L^-nu_i T^N_i)(1 - L^-nu_{i+1} T^N_{i+1}))``."""
    pairs = structural_pairs(S)
    num = z_i_polynomial(S, i).shift(dt=1) * (L - 1)
    a, b = pairs[i - 1], pairs[i]
    return MotRat(num, (DenomFactor(a.nu, a.N), DenomFactor(b.nu, b.N)))


def term_infinite(S: SemigroupData) -> MotRat:
    """``(L-1) L^-(nu_g+g+1) T^(N_g+1) / ((1 - L^-g T)(1 - L^-nu_g T^N_g))``."""
    g = S.g
    pg = structural_pairs(S)[-1]
    num = PolyT.monomial(pg.N + 1, (L - 1).shift(-(pg.nu + g + 1)))
    return MotRat(num, (DenomFactor(g, 1), DenomFactor(pg.nu, pg.N)))


def _from_j(lead: MotRat, j: MotRat) -> MotRat:
    """``lead - ((1-T)/T) j``."""
    return lead - MotRat(j.num * _ONE_MINUS_T, j.den).shift_t(-1)


@dataclass(frozen=True)
class ZetaAssembly:
    termA: MotRat
    termB: MotRat
    termsC: tuple[MotRat, ...]
    termD: MotRat
    total_global: MotRat
    total_local: MotRat
    local: bool = False

    @property
    def total(self) -> MotRat:
        return self.total_local if self.local else self.total_global

    def j_series(self, local: bool | None = None) -> MotRat:
        local = self.local if local is None else local
        out = self.termB + self.termD
        for c in self.termsC:
            out = out + c
        return out if local else out + self.termA


def zeta_motivic(S: SemigroupData, local: bool = False) -> ZetaAssembly:
    A, B, D = term_side_zero(S), term_main(S), term_infinite(S)
    Cs = tuple(term_side(S, i) for i in range(1, S.g))
    j_loc = B + D
    for c in Cs:
        j_loc = j_loc + c
    tot_g = _from_j(MotRat.const(1), j_loc + A)
    tot_l = _from_j(MotRat.const(LaurentL.monomial(-(S.g + 1))), j_loc)
    return ZetaAssembly(A, B, Cs, D, tot_g, tot_l, local)


def series_from_jets(S: SemigroupData, M: int, local: bool = False) -> PolyT:
    """``lead - ((1-T)/T) J`` through ``T^M``, built directly from the jet classes."""
    J = poincare_truncated(S, M + 1, local=local)
    lead = LaurentL.monomial(-(S.g + 1)) if local else LaurentL.const(1)
    return (PolyT.monomial(0, lead) - (J * _ONE_MINUS_T).shift(dt=-1)).truncate(M)


def series_consistency(S: SemigroupData, M: int, local: bool = False, assembly: ZetaAssembly | None = None) -> bool:
    """Closed form and jet-class series agree coefficient-wise through ``T^M``."""
    if M < 1:
        raise ValueError("M must be >= 1")
    z = assembly or zeta_motivic(S)
    tot = z.total_local if local else z.total_global
    return tot.expand_series(M) == series_from_jets(S, M, local)


def cleared_numerator(z: MotRat) -> tuple[int, PolyT, tuple[DenomFactor, ...]]:
    """``(c, L^c num, den)``: the presentation ``L^c num / (L^c prod den)``."""
    c, num = z.normalized()
    return c, num, z.den
