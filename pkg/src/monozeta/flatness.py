"""Non-flatness of the jet-scheme family induced by the equisingular deformation."""

from __future__ import annotations

from dataclasses import dataclass

from .semigroup import SemigroupData

__all__ = ["FlatnessReport", "non_flat_threshold"]

NOT_FLAT_FOR_ALL_M = "not_flat_for_all_m"
NOT_FLAT_FROM = "not_flat_from"
HYPERSURFACE_FLAT = "hypersurface_flat"


@dataclass(frozen=True)
class FlatnessReport:
    g: int
    verdict: str
    m0: int | None = None  # for g = 2: non-flat for every m >= m0 (a bound, not claimed minimal)

    def to_dict(self) -> dict:
        d: dict = {"g": self.g, "verdict": self.verdict}
        if self.m0 is not None:
            d["m0"] = self.m0
        return d

    def __str__(self) -> str:
        if self.verdict == NOT_FLAT_FOR_ALL_M:
            return f"g = {self.g}: the family of m-jet schemes is not flat for any m >= 1"
        if self.verdict == NOT_FLAT_FROM:
            return f"g = {self.g}: the family of m-jet schemes is not flat for m >= {self.m0}"
        return f"g = {self.g}: plane curve, the family of jet schemes is flat"


def non_flat_threshold(S: SemigroupData) -> FlatnessReport:
    g = S.g
    if g >= 3:
        return FlatnessReport(g, NOT_FLAT_FOR_ALL_M)
    if g == 1:
        return FlatnessReport(g, HYPERSURFACE_FLAT)
    n0, n1, n2 = S.n0, S.n_(1), S.n_(2)
    den = (n2 - 1) * (n0 * n1 - n0 - n1)
    if den <= 0:
        raise ArithmeticError(f"non-positive denominator {den} for {S}")
    num = 3 * n0 * n1 * n2
    return FlatnessReport(g, NOT_FLAT_FROM, max(1, -(-num // den)))
