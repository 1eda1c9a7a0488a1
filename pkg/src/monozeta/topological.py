"""Topological zeta function: closed form, poles and residues, and the
specialisation ``T = L^-s, L -> 1`` of the motivic zeta function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Sequence

from .errors import PoleHit, ResidueMismatch
from .gr_algebra import MotRat
from .invariants import PoleCandidate, candidate_poles, residues, structural_pairs
from .semigroup import SemigroupData

__all__ = [
    "RatQs",
    "zeta_top",
    "poles_with_residues",
    "specialize",
    "check_specialization",
    "global_equals_local_top",
]


def _peval(p: Sequence[Fraction], s: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * s + c
    return acc


def _pmul(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _padd(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def _trim(p: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in p]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out) or (Fraction(0),)


def _divide_linear(p: Sequence[Fraction], nu: int, N: int) -> tuple[Fraction, ...]:
    """Exact quotient of ``p`` by ``nu + N s`` (synthetic division at ``-nu/N``)."""
    root = Fraction(-nu, N)
    coeffs = list(reversed(p))  # highest first
    q, acc = [], Fraction(0)
    for c in coeffs:
        acc = acc * root + c
        q.append(acc)
    rem = q.pop()
    if rem != 0:
        raise ArithmeticError("non-exact linear division")
    return _trim(Fraction(c, N) for c in reversed(q))


@dataclass(frozen=True)
class RatQs:
    """``num(s) / prod (nu + N s)``; ``num`` ascending in ``s``, ``den`` as ``(nu, N)`` pairs."""

    num: tuple[Fraction, ...]
    den: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "num", _trim(self.num))
        object.__setattr__(self, "den", tuple(self.den))

    @classmethod
    def term(cls, num: Iterable, den: Iterable[tuple[int, int]]) -> RatQs:
        return cls(tuple(Fraction(c) for c in num), tuple(den))

    def _lift(self, target: list[tuple[int, int]]) -> list[Fraction]:
        rest = list(target)
        for f in self.den:
            rest.remove(f)
        p = list(self.num)
        for nu, N in rest:
            p = _pmul(p, [Fraction(nu), Fraction(N)])
        return p

    def _target(self, other: RatQs) -> list[tuple[int, int]]:
        target = list(self.den)
        pool = list(self.den)
        for f in other.den:
            if f in pool:
                pool.remove(f)
            else:
                target.append(f)
        return target

    def __add__(self, other: RatQs) -> RatQs:
        tgt = self._target(other)
        return RatQs(_padd(self._lift(tgt), other._lift(tgt)), tuple(tgt))

    def __neg__(self) -> RatQs:
        return RatQs(tuple(-c for c in self.num), self.den)

    def __sub__(self, other: RatQs) -> RatQs:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatQs):
            return NotImplemented
        return all(c == 0 for c in (self - other).num)

    __hash__ = None

    def __call__(self, s) -> Fraction:
        s = Fraction(s)
        d = Fraction(1)
        for nu, N in self.den:
            d *= nu + N * s
        if d == 0:
            raise PoleHit(f"s = {s} is a pole")
        return _peval(self.num, s) / d

    def reduce(self) -> RatQs:
        """Cancel every denominator factor whose root is a root of the numerator."""
        num, den = self.num, list(self.den)
        changed = True
        while changed:
            changed = False
            for f in den:
                if any(num) and _peval(num, Fraction(-f[0], f[1])) == 0:
                    num = _divide_linear(num, *f)
                    den.remove(f)
                    changed = True
                    break
        return RatQs(num, tuple(den))

    def poles(self) -> dict[Fraction, int]:
        """Pole -> order, of the reduced function."""
        r = self.reduce()
        out: dict[Fraction, int] = {}
        for nu, N in r.den:
            p = Fraction(-nu, N)
            out[p] = out.get(p, 0) + 1
        return dict(sorted(out.items()))

    def residues(self) -> dict[Fraction, Fraction]:
        """Residue at each simple pole of the reduced function."""
        r = self.reduce()
        out = {}
        for p, order in r.poles().items():
            if order != 1:
                raise ValueError(f"pole {p} has order {order}")
            f = next(f for f in r.den if Fraction(-f[0], f[1]) == p)
            rest = list(r.den)
            rest.remove(f)
            d = Fraction(f[1])
            for nu, N in rest:
                d *= nu + N * p
            out[p] = _peval(r.num, p) / d
        return out

    @property
    def degree_ok(self) -> bool:
        """Proper: numerator degree below denominator degree."""
        nz = [i for i, c in enumerate(self.num) if c]
        return not nz or max(nz) < len(self.den)

    def content(self) -> tuple[Fraction, tuple[int, ...]]:
        """``(c, p)`` with ``num = c * p``, ``p`` primitive integral with positive leading coefficient."""
        nz = [c for c in self.num if c]
        if not nz:
            return Fraction(0), (0,)
        den = lcm(*(c.denominator for c in nz))
        ints = [int(c * den) for c in self.num]
        g = gcd(*ints)
        if ints[max(i for i, c in enumerate(ints) if c)] < 0:
            g = -g
        return Fraction(g, den), tuple(x // g for x in ints)

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num], "den": [[nu, N] for nu, N in self.den]}

    @classmethod
    def from_json(cls, doc) -> RatQs:
        return cls(tuple(Fraction(c) for c in doc["num"]), tuple((int(a), int(b)) for a, b in doc["den"]))

    def _render(self, lin, power, prod_sep: str, frac, wrap_plain: bool) -> str:
        c, p = self.content()
        terms = []
        for k in range(len(p) - 1, -1, -1):
            a = p[k]
            if a == 0:
                continue
            mono = "" if k == 0 else power(k)
            body = str(abs(a)) if not mono or abs(a) != 1 else ""
            body = body + mono
            terms.append(("-" if a < 0 else "+", body))
        if not terms:
            return "0"
        poly = ("-" if terms[0][0] == "-" else "") + terms[0][1] + "".join(f"{s}{b}" for s, b in terms[1:])
        if not any(p[1:]):
            numtxt = str(c * p[0])
        else:
            head = "" if c == 1 else ("-" if c == -1 else str(c))
            numtxt = head + (f"({poly})" if len(terms) > 1 and (head or (wrap_plain and self.den)) else poly)
        dentxt = prod_sep.join(lin(nu, N) for nu, N in self.den)
        return frac(numtxt, dentxt)

    def __str__(self) -> str:
        return self._render(
            lambda nu, N: f"({nu}+{'' if N == 1 else N}s)",
            lambda k: "s" if k == 1 else f"s^{k}",
            "",
            lambda n, d: f"{n}/({d})" if d else n,
            True,
        )

    def latex(self) -> str:
        return self._render(
            lambda nu, N: f"({nu}+{'' if N == 1 else N}s)",
            lambda k: "s" if k == 1 else f"s^{{{k}}}",
            "",
            lambda n, d: r"\frac{" + n + "}{" + d + "}" if d else n,
            False,
        )


def zeta_top(S: SemigroupData) -> RatQs:
    """The closed form over ``(g+s) prod (nu_i + N_i s)``."""
    g, b, n, e = S.g, S.gens, S.n_, S.e
    pairs = structural_pairs(S)
    fac = [(p.nu, p.N) for p in pairs]
    z = RatQs.term([pairs[0].nu], [fac[0]])
    for i in range(1, g):
        w = Fraction(e[i + 1] * pairs[i - 1].N * pairs[i].N * (n(i + 1) * b[i + 1] - n(i) * b[i]), n(i) * b[i] * b[i + 1])
        z = z - RatQs.term([0, w], [fac[i - 1], fac[i]])
    z = z - RatQs.term([0, 1], [(g, 1), fac[-1]])
    # canonical factor order: (g+s) first, then i = 1..g
    return RatQs(tuple(RatQs(z.num, z.den)._lift([(g, 1)] + fac)), ((g, 1), *fac))


def poles_with_residues(S: SemigroupData) -> list[PoleCandidate]:
    """Candidate poles with the symbolic residues of the reduced closed form.

    Raises :class:`ResidueMismatch` if the pole set or any residue disagrees with
    the closed-form residue table.
    """
    z = zeta_top(S)
    orders = z.poles()
    sym = z.residues()
    table = residues(S)
    cands = candidate_poles(S)
    if set(orders) != {c.value for c in cands}:
        raise ResidueMismatch(f"poles {sorted(orders)} != candidates {[c.value for c in cands]}")
    out = []
    for c in cands:
        if sym[c.value] != table[c.value]:
            raise ResidueMismatch(f"residue at {c.value}: symbolic {sym[c.value]} != table {table[c.value]}")
        out.append(PoleCandidate(c.value, c.source, c.index, c.nu, c.N, sym[c.value], orders[c.value]))
    return out


def specialize(x: MotRat) -> RatQs:
    """Exact ``lim_{L -> 1} x(L, L^-s)``.

    With ``L = exp(eps)`` every factor ``1 - L^-a T^b`` is ``(a + b s) eps + O(eps^2)``,
    so for ``k`` factors the limit is ``[sum c (l - s t)^k / k!] / prod (a + b s)``,
    provided the lower-order numerator terms vanish identically.
    """
    k = len(x.den)
    for r in range(k + 1):
        acc = [Fraction(0)] * (r + 1)
        for t, l, c in x.num.terms:
            # (l - s t)^r = sum_j C(r, j) l^(r-j) (-t)^j s^j
            for j in range(r + 1):
                acc[j] += c * comb(r, j) * l ** (r - j) * (-t) ** j
        if r < k and any(acc):
            raise PoleHit(f"order-{r} term does not vanish; the limit L -> 1 diverges")
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return RatQs(tuple(a / fact for a in acc), tuple((f.a, f.b) for f in x.den))


def check_specialization(
    S: SemigroupData,
    eps: float,
    s_samples: Sequence,
    *,
    local: bool = False,
    dps: int = 60,
    zeta=None,
) -> float:
    """``max_s |Z^mot(1+eps, (1+eps)^-s) - Z^top(s)|`` in ``dps``-digit arithmetic."""
    import mpmath

    from .motivic import zeta_motivic

    if not 0 < eps <= 1e-3:
        raise ValueError("eps must lie in (0, 1e-3]")
    z = zeta or zeta_motivic(S)
    mot = z.total_local if local else z.total_global
    top = zeta_top(S)
    worst = mpmath.mpf(0)
    with mpmath.workdps(dps):
        Lv = 1 + mpmath.mpf(eps)
        for s in s_samples:
            s = Fraction(s)
            Tv = Lv ** (-mpmath.mpf(s.numerator) / s.denominator)
            v = mot.eval_mp(Lv, Tv)
            ref = top(s)
            worst = max(worst, abs(v - mpmath.mpf(ref.numerator) / ref.denominator))
    return float(worst)


def global_equals_local_top(S: SemigroupData) -> bool:
    """Both motivic zeta functions specialise exactly to the same ``Z^top``."""
    from .motivic import zeta_motivic

    z = zeta_motivic(S)
    top = zeta_top(S)
    return specialize(z.total_global) == top and specialize(z.total_local) == top
