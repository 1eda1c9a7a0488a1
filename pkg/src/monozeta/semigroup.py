"""Plane-branch semigroups: parsing, validation and the derived integer data.

A semigroup is given by its minimal generators ``b_0 < b_1 < ... < b_g``.
From them we derive ``e_i = gcd(b_0, ..., b_i)``, ``n_i = e_{i-1}/e_i`` and
the unique representation ``n_i b_i = sum_{j<i} b_ij b_j`` with
``0 <= b_ij < n_j`` for ``j >= 1``.  ``n_0`` is ``b_10``.

The associated space monomial curve in ``C^{g+1}`` is cut out by
``x_i^{n_i} - x_0^{b_i0} ... x_{i-1}^{b_i(i-1)}`` for ``i = 1..g``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterable, Sequence

from .errors import GenerationFailed, InvalidSemigroup, NoRepresentation

__all__ = [
    "SemigroupData",
    "Condition",
    "ValidationReport",
    "derive_structure",
    "represent_row",
    "validate",
    "random_plane_semigroup",
    "parse_generators",
]


@dataclass(frozen=True)
class SemigroupData:
    gens: tuple[int, ...]
    e: tuple[int, ...]
    n: tuple[int, ...]  # n_1 .. n_g
    n0: int
    b: tuple[tuple[int, ...], ...]  # row i-1 holds (b_i0, ..., b_i(i-1))

    @property
    def g(self) -> int:
        return len(self.gens) - 1

    def n_(self, i: int) -> int:
        """``n_i`` for ``i = 0..g`` (``n_0`` included)."""
        return self.n0 if i == 0 else self.n[i - 1]

    @property
    def n_all(self) -> tuple[int, ...]:
        return (self.n0, *self.n)

    def beta(self, i: int) -> int:
        return self.gens[i]

    def row(self, i: int) -> tuple[int, ...]:
        return self.b[i - 1]

    def equations(self) -> list[tuple[int, tuple[int, ...]]]:
        """Binomial equations as ``(n_i, (b_i0, ..., b_i(i-1)))`` for i=1..g."""
        return [(self.n[i - 1], self.b[i - 1]) for i in range(1, self.g + 1)]

    def to_dict(self) -> dict:
        return {
            "gens": list(self.gens),
            "e": list(self.e),
            "n": list(self.n),
            "n0": self.n0,
            "b": [list(r) for r in self.b],
        }

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.gens)) + ")"


@dataclass(frozen=True)
class Condition:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class ValidationReport:
    gens: tuple[int, ...]
    conditions: list[Condition] = field(default_factory=list)

    @property
    def violations(self) -> list[Condition]:
        return [c for c in self.conditions if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "gens": list(self.gens),
            "valid": self.ok,
            "conditions": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.conditions],
        }


def _gcd_chain(gens: Sequence[int]) -> list[int]:
    e = [gens[0]]
    for x in gens[1:]:
        e.append(gcd(e[-1], x))
    return e


def represent_row(gens: Sequence[int], e: Sequence[int], n: Sequence[int], i: int) -> tuple[int, ...]:
    """Unique ``(b_i0, ..., b_i(i-1))`` with ``n_i b_i = sum b_ij b_j``.

    ``n`` is indexed from 1 (``n[0]`` is ignored) so that ``n[j] = n_j``.
    Works top-down: at step ``j`` the remainder must be divisible by
    ``e_{j-1}``, which forces ``b_ij`` modulo ``n_j``.
    """
    rem = n[i] * gens[i]
    row = [0] * i
    for j in range(i - 1, 0, -1):
        # rem is divisible by e_j; solve rem/e_j = b * (b_j/e_j) mod n_j
        unit = gens[j] // e[j]
        bij = (rem // e[j]) * pow(unit, -1, n[j]) % n[j]
        row[j] = bij
        rem -= bij * gens[j]
    if rem < 0 or rem % gens[0]:
        raise NoRepresentation(
            f"n_{i}*b_{i} = {n[i] * gens[i]} has no representation with b_{i}0 >= 0"
        )
    row[0] = rem // gens[0]
    return tuple(row)


def _check(gens: Sequence[int]) -> tuple[list[Condition], SemigroupData | None]:
    gens = tuple(int(x) for x in gens)
    conds: list[Condition] = []

    def add(name: str, ok: bool, detail: str = "") -> bool:
        conds.append(Condition(name, ok, detail))
        return ok

    if not add("g >= 1", len(gens) >= 2, f"{len(gens)} generators"):
        return conds, None
    if not add("positive", all(x > 0 for x in gens)):
        return conds, None
    inc = all(a < b for a, b in zip(gens, gens[1:]))
    if not add("strictly increasing", inc):
        return conds, None
    e = _gcd_chain(gens)
    add("gcd == 1", e[-1] == 1, f"gcd = {e[-1]}")
    g = len(gens) - 1
    n = [0] + [e[i - 1] // e[i] for i in range(1, g + 1)]
    bad_n = [i for i in range(1, g + 1) if n[i] < 2]
    add("n_i >= 2", not bad_n, ", ".join(f"n_{i} = {n[i]}" for i in bad_n))
    bad_ord = [i for i in range(1, g) if n[i] * gens[i] >= gens[i + 1]]
    add(
        "n_i*b_i < b_(i+1)",
        not bad_ord,
        ", ".join(f"n_{i}*b_{i} = {n[i] * gens[i]} >= {gens[i + 1]}" for i in bad_ord),
    )
    if e[-1] != 1 or bad_n:
        return conds, None
    rows = []
    for i in range(1, g + 1):
        try:
            rows.append(represent_row(gens, e, n, i))
        except NoRepresentation as exc:
            add("representable", False, str(exc))
            return conds, None
    add("representable", True)
    n0 = rows[0][0]
    bad_b = [i for i in range(2, g + 1) if rows[i - 1][0] <= n0]
    add("b_i0 > n_0", not bad_b, ", ".join(f"b_{i}0 = {rows[i - 1][0]}" for i in bad_b))
    if bad_ord or bad_b:
        return conds, None
    data = SemigroupData(gens=gens, e=tuple(e), n=tuple(n[1:]), n0=n0, b=tuple(rows))
    return conds, data


def validate(gens: Iterable[int]) -> ValidationReport:
    """Report every named condition, satisfied or not. Never raises."""
    gens = tuple(gens)
    try:
        conds, _ = _check(gens)
    except (TypeError, ValueError) as exc:
        conds = [Condition("integers", False, str(exc))]
    return ValidationReport(gens, conds)


def derive_structure(gens: Iterable[int]) -> SemigroupData:
    gens = tuple(gens)
    conds, data = _check(gens)
    if data is None:
        failed = [c for c in conds if not c.ok]
        reason = "; ".join(f"{c.name}" + (f" ({c.detail})" if c.detail else "") for c in failed)
        raise InvalidSemigroup(f"{gens}: {reason}")
    return data


def parse_generators(text: str) -> tuple[int, ...]:
    """Accept ``"4,6,13"``, ``"(4, 6, 13)"`` or a JSON document ``{"generators": [...]}``."""
    text = text.strip()
    if text.startswith("{"):
        doc = json.loads(text)
        seq = doc.get("generators", doc.get("gens"))
        if seq is None:
            raise InvalidSemigroup("JSON input needs a 'generators' list")
        return tuple(int(x) for x in seq)
    text = text.strip("()[] ")
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise InvalidSemigroup(f"cannot parse generators from {text!r}") from None


def random_plane_semigroup(g: int, bound: int, seed: int, *, max_n: int = 5, retries: int = 2000) -> tuple[int, ...]:
    """Random minimal generators of a plane-branch semigroup with ``b_g <= bound``.

    ``n_1..n_g`` are drawn from ``[2, max_n]``; the remaining generators are
    drawn uniformly from the admissible range, rejecting invalid tuples.
    """
    if g < 1:
        raise ValueError("g must be >= 1")
    rng = random.Random(f"{g}:{bound}:{seed}")
    for _ in range(retries):
        n = [0] + [rng.randint(2, max_n) for _ in range(g)]
        e = [prod(n[i + 1:]) for i in range(g + 1)]
        gens = [e[0]]
        # b_g > n_{g-1} ... n_1 b_1 bounds b_1 from above
        hi = bound // (e[1] * prod(n[1:g]))
        # b_1 = n_0 * e_1 with n_0 > n_1 and gcd(n_0, n_1) = 1
        cands = [a for a in range(n[1] + 1, hi + 1) if gcd(a, n[1]) == 1]
        if not cands:
            continue
        gens.append(rng.choice(cands) * e[1])
        ok = True
        for i in range(1, g):
            lo = n[i] * gens[i] + 1
            # b_{i+1} must be a multiple of e_{i+1} with gcd(e_i, b_{i+1}) = e_{i+1}
            step = e[i + 1]
            start = -(-lo // step) * step
            opts = [x for x in range(start, bound + 1, step) if gcd(e[i], x) == e[i + 1]]
            if not opts:
                ok = False
                break
            gens.append(rng.choice(opts))
        if ok and validate(gens).ok:
            return tuple(gens)
    raise GenerationFailed(f"no plane semigroup with g={g}, b_g <= {bound} after {retries} attempts")
