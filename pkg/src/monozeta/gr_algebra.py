"""Exact arithmetic in ``Z[L, L^-1]`` and rational functions in ``T`` whose
denominators are products of ``(1 - L^-a T^b)``.

Bivariate polynomials are kept as sparse ``{(tdeg, ldeg): coef}`` maps
internally; the public value types are immutable.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import NonUnitDenominator, PoleHit

__all__ = [
    "LaurentL",
    "PolyT",
    "DenomFactor",
    "MotRat",
    "QRatT",
    "L",
    "T",
]

_Bi = dict  # {(t, l): coef}


def _clean(d: Mapping) -> dict:
    return {k: v for k, v in d.items() if v}


def _bi_add(x: _Bi, y: _Bi, sign: int = 1) -> _Bi:
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) + sign * v
    return _clean(out)


def _bi_mul(x: _Bi, y: _Bi) -> _Bi:
    if len(x) < len(y):
        x, y = y, x
    out: dict = defaultdict(int)
    for (t2, l2), c2 in y.items():
        for (t1, l1), c1 in x.items():
            out[t1 + t2, l1 + l2] += c1 * c2
    return _clean(out)


# --------------------------------------------------------------------- LaurentL


@dataclass(frozen=True)
class LaurentL:
    """Sparse Laurent polynomial in ``L``: sorted ``(exponent, coefficient)`` pairs, no zeros."""

    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> LaurentL:
        return cls(tuple(sorted((int(e), int(c)) for e, c in d.items() if c)))

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> LaurentL:
        return cls(((exp, coef),) if coef else ())

    @classmethod
    def const(cls, c: int) -> LaurentL:
        return cls.monomial(0, c)

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    @staticmethod
    def _coerce(other) -> LaurentL:
        if isinstance(other, LaurentL):
            return other
        if isinstance(other, int):
            return LaurentL.const(other)
        return NotImplemented

    def __add__(self, other) -> LaurentL:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return LaurentL.from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> LaurentL:
        return LaurentL(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other) -> LaurentL:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentL:
        return (-self) + other

    def __mul__(self, other) -> LaurentL:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d: dict = defaultdict(int)
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                d[e1 + e2] += c1 * c2
        return LaurentL.from_dict(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentL:
        if k < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise ValueError("only unit monomials have inverses")
            e, c = self.terms[0]
            return LaurentL.monomial(e * k, c ** (-k))
        out = LaurentL.const(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> LaurentL:
        """Multiply by ``L^k``."""
        return LaurentL(tuple((e + k, c) for e, c in self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def eval(self, q) -> Fraction:
        q = Fraction(q)
        if q == 0 and any(e < 0 for e, _ in self.terms):
            raise PoleHit("negative power of L at L = 0")
        return sum((c * q**e for e, c in self.terms), Fraction(0))

    @property
    def min_exp(self) -> int | None:
        return self.terms[0][0] if self.terms else None

    @property
    def max_exp(self) -> int | None:
        return self.terms[-1][0] if self.terms else None

    def __str__(self) -> str:
        return _fmt_laurent(self.terms, "L", lambda e: f"L^{e}" if e != 1 else "L")

    def latex(self) -> str:
        return _fmt_laurent(self.terms, r"\mathbb{L}", lambda e: r"\mathbb{L}" + (f"^{{{e}}}" if e != 1 else ""))


def _fmt_laurent(terms, sym: str, power) -> str:
    if not terms:
        return "0"
    parts = []
    for e, c in sorted(terms, reverse=True):
        mono = "" if e == 0 else power(e)
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}" + (("*" if sym == "L" else "") + mono if mono else "")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {b}" for s, b in parts[1:])


L = LaurentL.monomial(1)


# ------------------------------------------------------------------------ PolyT


@dataclass(frozen=True)
class PolyT:
    """Polynomial in ``T`` (Laurent exponents permitted) with ``LaurentL`` coefficients.

    Stored as sorted ``(tdeg, ldeg, coef)`` triples without zeros.
    """

    terms: tuple[tuple[int, int, int], ...] = ()

    @classmethod
    def from_bi(cls, d: Mapping[tuple[int, int], int]) -> PolyT:
        return cls(tuple(sorted((t, l, c) for (t, l), c in d.items() if c)))

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[int, LaurentL] | Iterable[LaurentL]) -> PolyT:
        items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
        d: dict = defaultdict(int)
        for t, lp in items:
            for e, c in LaurentL._coerce(lp).terms:
                d[t, e] += c
        return cls.from_bi(d)

    @classmethod
    def monomial(cls, tdeg: int, coef: LaurentL | int = 1) -> PolyT:
        return cls.from_coeffs({tdeg: LaurentL._coerce(coef)})

    def as_bi(self) -> dict[tuple[int, int], int]:
        return {(t, l): c for t, l, c in self.terms}

    def coeff(self, t: int) -> LaurentL:
        return LaurentL(tuple((l, c) for tt, l, c in self.terms if tt == t))

    def coeffs(self) -> dict[int, LaurentL]:
        out: dict[int, list] = defaultdict(list)
        for t, l, c in self.terms:
            out[t].append((l, c))
        return {t: LaurentL(tuple(v)) for t, v in out.items()}

    @property
    def degree(self) -> int | None:
        return max((t for t, _, _ in self.terms), default=None)

    @property
    def low_degree(self) -> int | None:
        return self.terms[0][0] if self.terms else None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: PolyT) -> PolyT:
        return PolyT.from_bi(_bi_add(self.as_bi(), other.as_bi()))

    def __sub__(self, other: PolyT) -> PolyT:
        return PolyT.from_bi(_bi_add(self.as_bi(), other.as_bi(), -1))

    def __neg__(self) -> PolyT:
        return PolyT(tuple((t, l, -c) for t, l, c in self.terms))

    def __mul__(self, other: PolyT | LaurentL | int) -> PolyT:
        if not isinstance(other, PolyT):
            other = PolyT.monomial(0, other)
        return PolyT.from_bi(_bi_mul(self.as_bi(), other.as_bi()))

    __rmul__ = __mul__

    def shift(self, dt: int = 0, dl: int = 0) -> PolyT:
        return PolyT(tuple((t + dt, l + dl, c) for t, l, c in self.terms))

    def truncate(self, M: int) -> PolyT:
        """Keep degrees ``<= M``."""
        return PolyT(tuple(x for x in self.terms if x[0] <= M))

    def min_ldeg(self) -> int | None:
        return min((l for _, l, _ in self.terms), default=None)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t, lp in sorted(self.coeffs().items(), reverse=True):
            s = str(lp)
            mono = "" if t == 0 else ("T" if t == 1 else f"T^{t}")
            parts.append(f"({s})*{mono}" if mono else f"({s})")
        return " + ".join(parts)

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t, lp in sorted(self.coeffs().items(), reverse=True):
            mono = "" if t == 0 else ("T" if t == 1 else f"T^{{{t}}}")
            if len(lp.terms) == 1 and lp.terms[0] == (0, 1) and mono:
                body = mono
            elif len(lp.terms) == 1 and lp.terms[0] == (0, -1) and mono:
                body = "-" + mono
            elif len(lp.terms) == 1:
                body = lp.latex() + mono
            else:
                body = f"({lp.latex()}){mono}"
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


# ------------------------------------------------------------------ DenomFactor


@dataclass(frozen=True, order=True)
class DenomFactor:
    """The factor ``1 - L^-a T^b``. Sort order is ``(b, a)``."""

    b: int
    a: int

    def __init__(self, a: int, b: int):
        if a == 0 and b == 0:
            raise ValueError("1 - L^0 T^0 is the zero polynomial")
        if b < 0:
            raise ValueError("T-exponent of a denominator factor must be >= 0")
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))

    def as_bi(self) -> dict:
        return _bi_add({(0, 0): 1}, {(self.b, -self.a): 1}, -1)

    def __repr__(self) -> str:
        return f"DenomFactor(a={self.a}, b={self.b})"

    def __str__(self) -> str:
        t = "" if self.b == 0 else ("*T" if self.b == 1 else f"*T^{self.b}")
        lpart = "1" if self.a == 0 else f"L^-{self.a}" if self.a > 0 else f"L^{-self.a}"
        if self.a == 0:
            return f"(1 - {'T' if self.b == 1 else f'T^{self.b}'})"
        return f"(1 - {lpart}{t})"

    def latex(self) -> str:
        t = "" if self.b == 0 else ("T" if self.b == 1 else f"T^{{{self.b}}}")
        lpart = "" if self.a == 0 else r"\mathbb{L}^{" + str(-self.a) + "}"
        return f"(1-{lpart}{t})"


# ----------------------------------------------------------------------- QRatT


@dataclass(frozen=True)
class QRatT:
    """Rational function of ``T`` over Q as coefficient lists from ``T^0`` upward."""

    num: tuple[Fraction, ...]
    den: tuple[Fraction, ...]

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        d = sum((c * t**k for k, c in enumerate(self.den)), Fraction(0))
        if d == 0:
            raise PoleHit(f"denominator vanishes at T = {t}")
        return sum((c * t**k for k, c in enumerate(self.num)), Fraction(0)) / d


# ---------------------------------------------------------------------- MotRat


Scalar = Union[LaurentL, int]


@dataclass(frozen=True, eq=False)
class MotRat:
    """``num / prod(den)``; equality is decided by cross-multiplication."""

    num: PolyT
    den: tuple[DenomFactor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "den", tuple(sorted(self.den)))

    # -- constructors
    @classmethod
    def const(cls, c: Scalar) -> MotRat:
        return cls(PolyT.monomial(0, c))

    @classmethod
    def poly(cls, p: PolyT) -> MotRat:
        return cls(p)

    @classmethod
    def monomial(cls, coef: Scalar, tdeg: int = 0) -> MotRat:
        return cls(PolyT.monomial(tdeg, coef))

    # -- arithmetic
    @staticmethod
    def _coerce(x) -> MotRat:
        if isinstance(x, MotRat):
            return x
        if isinstance(x, PolyT):
            return MotRat(x)
        if isinstance(x, (LaurentL, int)):
            return MotRat.const(x)
        return NotImplemented

    def _lift(self, target: Counter) -> dict:
        """Numerator over the denominator multiset ``target`` (a superset of ours)."""
        missing = target - Counter(self.den)
        num = self.num.as_bi()
        for f, k in sorted(missing.items()):
            for _ in range(k):
                num = _bi_mul(num, f.as_bi())
        return num

    def _combine(self, other: MotRat, sign: int) -> MotRat:
        target = Counter(self.den) | Counter(other.den)
        num = _bi_add(self._lift(target), other._lift(target), sign)
        return MotRat(PolyT.from_bi(num), tuple(target.elements()))

    def __add__(self, other) -> MotRat:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other) -> MotRat:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(other, -1)

    def __rsub__(self, other) -> MotRat:
        return self._coerce(other) - self

    def __neg__(self) -> MotRat:
        return MotRat(-self.num, self.den)

    def __mul__(self, other) -> MotRat:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MotRat(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> MotRat:
        return MotRat(self.num * PolyT.monomial(0, c), self.den)

    def shift_t(self, k: int) -> MotRat:
        """Multiply by ``T^k`` (``k`` may be negative)."""
        return MotRat(self.num.shift(dt=k), self.den)

    def divide_by(self, f: DenomFactor) -> MotRat:
        return MotRat(self.num, self.den + (f,))

    def cancel(self) -> MotRat:
        """Drop denominator factors that divide the numerator exactly."""
        num, den = self.num.as_bi(), list(self.den)
        kept = []
        for f in den:
            q = _exact_div(num, f)
            if q is None:
                kept.append(f)
            else:
                num = q
        return MotRat(PolyT.from_bi(num), tuple(kept))

    # -- comparison
    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    # -- expansion and evaluation
    def expand_series(self, M: int) -> PolyT:
        """Power-series coefficients of ``T^k`` for ``k <= M``."""
        for f in self.den:
            if f.b == 0:
                raise NonUnitDenominator(f"{f} has no unit constant term")
        rows: dict[int, dict[int, int]] = defaultdict(dict)
        for t, l, c in self.num.terms:
            if t <= M:
                rows[t][l] = c
        if not rows:
            return PolyT()
        lo = min(rows)
        for f in self.den:
            # y_t = x_t + L^-a y_{t-b}
            for t in range(lo + f.b, M + 1):
                prev = rows.get(t - f.b)
                if not prev:
                    continue
                cur = rows[t]
                for l, c in prev.items():
                    k = l - f.a
                    v = cur.get(k, 0) + c
                    if v:
                        cur[k] = v
                    else:
                        cur.pop(k, None)
        return PolyT(tuple(sorted((t, l, c) for t, r in rows.items() for l, c in r.items())))

    def eval_L(self, q) -> QRatT:
        """Substitute ``L = q`` exactly; returns a rational function of ``T`` over Q."""
        q = Fraction(q)
        if q == 0:
            raise PoleHit("L = 0")
        lo = min(0, self.num.low_degree or 0)
        num: dict[int, Fraction] = defaultdict(Fraction)
        for t, l, c in self.num.terms:
            num[t - lo] += c * q**l
        den = {0: Fraction(1)}
        for f in self.den:
            step = {0: Fraction(1), f.b: -q ** (-f.a)} if f.b else {0: 1 - q ** (-f.a)}
            nxt: dict[int, Fraction] = defaultdict(Fraction)
            for i, a in den.items():
                for j, b in step.items():
                    nxt[i + j] += a * b
            den = nxt
        if lo:
            den = {i - lo: v for i, v in den.items()}
        return QRatT(_dense(num), _dense(den))

    def eval_numeric(self, Lval, Tval, dps: int = 60) -> float:
        """Evaluate at ``(L, T)`` in ``dps``-digit arithmetic, returned as a float.

        The numerator of a zeta function nearly cancels as ``L -> 1``; the extra
        working precision absorbs that cancellation.
        """
        import mpmath

        with mpmath.workdps(dps):
            Lv, Tv = mpmath.mpf(Lval), mpmath.mpf(Tval)
            d = mpmath.mpf(1)
            for f in self.den:
                d *= 1 - Lv ** (-f.a) * Tv ** f.b
            if d == 0:
                raise PoleHit(f"denominator vanishes at L={Lval}, T={Tval}")
            n = mpmath.fsum(c * Lv**l * Tv**t for t, l, c in self.num.terms)
            return float(n / d)

    def eval_mp(self, Lv, Tv):
        """Evaluate with mpmath numbers under the caller's precision context."""
        import mpmath

        d = mpmath.mpf(1)
        for f in self.den:
            d *= 1 - Lv ** (-f.a) * Tv ** f.b
        if d == 0:
            raise PoleHit("denominator vanishes")
        return mpmath.fsum(c * Lv**l * Tv**t for t, l, c in self.num.terms) / d

    # -- presentation
    def normalized(self) -> tuple[int, PolyT]:
        """``(c, L^c * num)`` with minimal ``c >= 0`` making both ``L^c * num`` and
        ``L^c * prod(den)`` polynomials in ``L``."""
        c = max(0, sum(max(f.a, 0) for f in self.den), -(self.num.min_ldeg() or 0))
        return c, self.num.shift(dl=c)

    def to_json(self) -> dict:
        return {
            "numerator": [
                {"tdeg": t, "terms": [{"ldeg": l, "coef": c} for l, c in lp.terms]}
                for t, lp in sorted(self.num.coeffs().items())
            ],
            "denominator": [{"a": f.a, "b": f.b} for f in self.den],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> MotRat:
        bi = {}
        for row in doc["numerator"]:
            for term in row["terms"]:
                bi[int(row["tdeg"]), int(term["ldeg"])] = int(term["coef"])
        den = tuple(DenomFactor(int(f["a"]), int(f["b"])) for f in doc["denominator"])
        return cls(PolyT.from_bi(bi), den)

    def latex(self, normalize: bool = True) -> str:
        if normalize:
            c, num = self.normalized()
        else:
            c, num = 0, self.num
        den = "".join(f.latex() for f in self.den)
        if c:
            den = LaurentL.monomial(c).latex() + den
        if not den:
            return num.latex()
        return r"\frac{" + num.latex() + "}{" + den + "}"

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        return f"[{self.num}] / " + "".join(str(f) for f in self.den)

    def __repr__(self) -> str:
        return f"MotRat({self})"


def _dense(d: Mapping[int, Fraction]) -> tuple[Fraction, ...]:
    if not d:
        return (Fraction(0),)
    top = max(d)
    out = [Fraction(d.get(i, 0)) for i in range(top + 1)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _exact_div(num: dict, f: DenomFactor) -> dict | None:
    """``num / (1 - L^-a T^b)`` if exact, else ``None``.

    Dividing by ``1 - u`` with ``u = L^-a T^b``: the quotient satisfies
    ``q = num + u q``; we run the recurrence from the lowest T-degree up.
    """
    if not num:
        return {}
    if f.b == 0:
        return None
    rows: dict[int, dict[int, int]] = defaultdict(dict)
    for (t, l), c in num.items():
        rows[t][l] = c
    lo, hi = min(rows), max(rows)
    q: dict[int, dict[int, int]] = {}
    for t in range(lo, hi + 1):
        cur = dict(rows.get(t, {}))
        for l, c in q.get(t - f.b, {}).items():
            cur[l - f.a] = cur.get(l - f.a, 0) + c
        cur = {l: c for l, c in cur.items() if c}
        if cur:
            q[t] = cur
    # remainder check: q*(1-u) == num  <=>  q has no terms in the top b degrees
    if any(t > hi - f.b for t in q):
        return None
    return {(t, l): c for t, r in q.items() for l, c in r.items()}


T = PolyT.monomial(1)
