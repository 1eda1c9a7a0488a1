"""Components of the fibre ``pi_m^-1(0)`` of the jet schemes and the classes of
the strata, hence of ``Y_m`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gr_algebra import L, LaurentL, PolyT
from .invariants import c_ik, c_main, codim_B, is_D_empty, window_index
from .semigroup import SemigroupData

__all__ = [
    "ComponentDescriptor",
    "StratumClass",
    "components",
    "strata",
    "fiber_class",
    "jet_class",
    "poincare_truncated",
]


@dataclass(frozen=True)
class ComponentDescriptor:
    kind: str  # "B" (main) or "C" (side)
    codim: int
    k: int | None = None
    maximal: bool = False

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.k is not None:
            d["k"] = self.k
        d["codim"] = self.codim
        return d


@dataclass(frozen=True)
class StratumClass:
    label: str  # "B" or "D"
    cls: LaurentL
    k: int | None = None
    codim: int | None = None


def _side_codim(S: SemigroupData, m: int, k: int) -> int | None:
    """Codimension of ``D_{m,k}``, or ``None`` when the stratum is empty."""
    if is_D_empty(S, m, k):
        return None
    return c_ik(S, window_index(S, k, m), k, m)


def components(S: SemigroupData, m: int) -> list[ComponentDescriptor]:
    """Irreducible components of ``pi_m^-1(0)_red``: ``B_m`` first, then ``C_{m,k}`` by ``k``."""
    if m < 1:
        raise ValueError("components need m >= 1")
    n0n1 = S.n0 * S.n_(1)
    l = (m - 1) // n0n1  # l n0 n1 < m <= (l+1) n0 n1
    main = codim_B(S, m)
    sides = [(k, c) for k in range(1, l + 1) if (c := _side_codim(S, m, k)) is not None]
    low = min([main] + [c for _, c in sides])
    out = [ComponentDescriptor("B", main, None, main == low)]
    out += [ComponentDescriptor("C", c, k, c == low) for k, c in sides]
    return out


def strata(S: SemigroupData, m: int) -> list[StratumClass]:
    """Refined stratification ``pi_m^-1(0) = B'_m + sum_k D_{m,k}`` with classes."""
    if m < 0:
        raise ValueError("m must be >= 0")
    top = (S.g + 1) * (m + 1)
    cm = c_main(S, m)
    out = [StratumClass("B", LaurentL.monomial(top - cm), None, cm)]
    for k in range(1, m // (S.n0 * S.n_(1)) + 1):
        c = _side_codim(S, m, k)
        if c is not None:
            out.append(StratumClass("D", (L - 1).shift(top - c - 1), k, c))
    return out


def fiber_class(S: SemigroupData, m: int) -> LaurentL:
    """Class of ``pi_m^-1(0)``."""
    total = LaurentL()
    for s in strata(S, m):
        total = total + s.cls
    return total


def jet_class(S: SemigroupData, m: int) -> LaurentL:
    """Class of ``Y_m``: the smooth part ``(L-1) L^m`` plus the fibre over 0."""
    return (L - 1).shift(m) + fiber_class(S, m)


def poincare_truncated(S: SemigroupData, M: int, *, local: bool = False) -> PolyT:
    """``sum_{m<M} [Y_m] L^-(g+1)(m+1) T^(m+1)`` (fibre classes only when ``local``)."""
    if M < 1:
        raise ValueError("M must be >= 1")
    cls = fiber_class if local else jet_class
    return PolyT.from_coeffs({m + 1: cls(S, m).shift(-(S.g + 1) * (m + 1)) for m in range(M)})
