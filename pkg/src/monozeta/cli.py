"""Command-line front end.

Exit status: 0 on success, 1 on invalid input (or an exhausted budget), 2 when
a verification check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import BadCharacteristic, BudgetExceeded, InvalidSemigroup, MonozetaError, ResidueMismatch
from .ff import count_report
from .ff.count import BUDGET_ENV, default_budget
from .ff.system import is_prime
from .flatness import non_flat_threshold
from .invariants import candidate_poles, lct, side_period, structural_pairs
from .jets import components, fiber_class, jet_class
from .motivic import cleared_numerator, series_consistency, z_i_polynomial, zeta_motivic
from .semigroup import SemigroupData, derive_structure, parse_generators, random_plane_semigroup, validate
from .topological import check_specialization, global_equals_local_top, poles_with_residues, zeta_top

__all__ = ["RunConfig", "run", "main"]

COMMANDS = (
    "invariants",
    "motivic",
    "topo",
    "poles",
    "jets",
    "series-check",
    "count",
    "flatness",
    "random",
    "verify-all",
)

OK, INVALID, MISMATCH = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    generators: tuple[int, ...] = ()
    format: str = "text"
    m: int | None = None
    q: int | None = None
    order: int | None = None  # default 4 N_1
    eps: float = 1e-6
    threads: int = 1
    budget: int | None = None  # default from the environment, else 2e9
    seed: int = 0
    g: int = 2
    bound: int = 150
    local: bool = False
    extra: dict = field(default_factory=dict)


@dataclass
class Result:
    status: int
    doc: object  # JSON-able payload
    text: str
    latex: str | None = None

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.doc, indent=2)
        if fmt == "latex" and self.latex is not None:
            return self.latex
        return self.text


def _q(x: Fraction) -> str:
    return str(Fraction(x))


def _invariants(S: SemigroupData, cfg: RunConfig) -> Result:
    pairs = structural_pairs(S)
    doc = {
        "generators": list(S.gens),
        **{k: v for k, v in S.to_dict().items() if k != "gens"},
        "pairs": [{"i": p.i, "N": p.N, "nu": p.nu} for p in pairs],
        "lct": _q(lct(S)),
        "candidate_poles": [_q(c.value) for c in candidate_poles(S)],
        "side_periods": [side_period(S, i) for i in range(1, S.g + 1)],
    }
    lines = [
        f"semigroup   {S}",
        f"e           {list(S.e)}",
        f"n_0..n_g    {list(S.n_all)}",
        f"b           {[list(r) for r in S.b]}",
        "pairs (N_i, nu_i): " + ", ".join(f"({p.N},{p.nu})" for p in pairs),
        f"lct         {lct(S)}",
        "poles       " + ", ".join(_q(c.value) for c in candidate_poles(S)),
    ]
    tex = r"\mathrm{lct} = " + _latex_frac(lct(S)) + r",\quad " + ", ".join(f"(N_{p.i},\\nu_{p.i}) = ({p.N},{p.nu})" for p in pairs)
    return Result(OK, doc, "\n".join(lines), tex)


def _latex_frac(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def _motivic(S: SemigroupData, cfg: RunConfig) -> Result:
    z = zeta_motivic(S, local=cfg.local)
    tot = z.total
    c, num, den = cleared_numerator(tot)
    doc = {
        "generators": list(S.gens),
        "local": cfg.local,
        "zeta": tot.to_json(),
        "normalizer": c,
        "cleared_numerator": _polyt_json(num),
        "z_i": [_polyt_json(z_i_polynomial(S, i)) for i in range(1, S.g)],
    }
    dens = "".join(str(f) for f in den)
    text = f"Z{'_0' if cfg.local else ''}(T) = [{num}] / (L^{c}{dens})"
    return Result(OK, doc, text, tot.latex())


def _polyt_json(p) -> list:
    return [{"tdeg": t, "terms": [{"ldeg": l, "coef": k} for l, k in lp.terms]} for t, lp in sorted(p.coeffs().items())]


def _poles_doc(S: SemigroupData) -> list:
    return [c.to_dict() for c in poles_with_residues(S)]


def _topo(S: SemigroupData, cfg: RunConfig) -> Result:
    z = zeta_top(S)
    doc = {"generators": list(S.gens), "zeta": z.to_json(), "poles": _poles_doc(S)}
    return Result(OK, doc, f"Z_top(s) = {z}", z.latex())


def _poles(S: SemigroupData, cfg: RunConfig) -> Result:
    poles = _poles_doc(S)
    lines = [f"{p['value']:>12}  {p['source']:<13} order {p['order']}  residue {p['residue']}" for p in poles]
    tex = ", ".join(f"{_latex_frac(Fraction(p['value']))}\\ (\\mathrm{{Res}} = {_latex_frac(Fraction(p['residue']))})" for p in poles)
    return Result(OK, poles, "\n".join(lines), tex)


def _jets(S: SemigroupData, cfg: RunConfig) -> Result:
    if cfg.m is None:
        raise _Usage("jets needs --m")
    comps = components(S, cfg.m) if cfg.m >= 1 else []
    fib, jet = fiber_class(S, cfg.m), jet_class(S, cfg.m)
    doc = {
        "generators": list(S.gens),
        "m": cfg.m,
        "components": [c.to_dict() for c in comps],
        "fiber_class": [{"ldeg": l, "coef": k} for l, k in fib.terms],
        "jet_class": [{"ldeg": l, "coef": k} for l, k in jet.terms],
    }
    lines = [f"m = {cfg.m}"]
    lines += [f"  {'B_m' if c.kind == 'B' else f'C_(m,{c.k})':<10} codim {c.codim}" for c in comps]
    lines.append(f"  [pi_m^-1(0)] = {fib}")
    lines.append(f"  [Y_m]        = {jet}")
    return Result(OK, doc, "\n".join(lines))


def _series_check(S: SemigroupData, cfg: RunConfig) -> Result:
    order = cfg.order or 4 * structural_pairs(S)[0].N
    ok = series_consistency(S, order, local=cfg.local)
    doc = {"generators": list(S.gens), "order": order, "local": cfg.local, "consistent": ok}
    return Result(OK if ok else MISMATCH, doc, f"series consistency to T^{order}: {'ok' if ok else 'MISMATCH'}")


def _count(S: SemigroupData, cfg: RunConfig) -> Result:
    if cfg.m is None or cfg.q is None:
        raise _Usage("count needs --m and --q")
    r = count_report(S, cfg.m, cfg.q, cfg.local, cfg.threads, cfg.budget)
    status = OK if r.match or r.finding_only else MISMATCH
    what = "pi_m^-1(0)" if cfg.local else "Y_m"
    text = f"#{what}(F_{r.q}), m = {r.m}: {r.count} (class gives {r.expected}) {'ok' if r.match else 'MISMATCH'}"
    return Result(status, r.to_dict(), text)


def _flatness(S: SemigroupData, cfg: RunConfig) -> Result:
    rep = non_flat_threshold(S)
    return Result(OK, rep.to_dict(), str(rep))


def _small_primes(S: SemigroupData, k: int = 2) -> list[int]:
    out, p = [], 5
    while len(out) < k:
        if is_prime(p) and all(n % p for n in S.n_all):
            out.append(p)
        p += 1
    return out


def _verify_all(S: SemigroupData, cfg: RunConfig) -> Result:
    checks: list[dict] = []

    def record(name: str, ok: bool, **info) -> None:
        checks.append({"check": name, "ok": bool(ok), **info})

    order = cfg.order or 4 * structural_pairs(S)[0].N
    record("series-global", series_consistency(S, order), order=order)
    record("series-local", series_consistency(S, order, local=True), order=order)
    try:
        _poles_doc(S)
        record("residues", True)
    except ResidueMismatch as exc:
        record("residues", False, detail=str(exc))
    dev = check_specialization(S, cfg.eps, [0, Fraction(1, 2), 1, 2])
    record("specialization", dev < 100 * cfg.eps, eps=cfg.eps, deviation=dev)
    record("global-equals-local-top", global_equals_local_top(S))
    for q in _small_primes(S):
        for m in range(4):
            for local in (False, True):
                r = count_report(S, m, q, local, cfg.threads, cfg.budget)
                record("count", r.match or r.finding_only, m=m, q=q, local=local, count=str(r.count), expected=str(r.expected))
    ok = all(c["ok"] for c in checks)
    lines = [f"{'ok  ' if c['ok'] else 'FAIL'} {c['check']}" + "".join(f" {k}={v}" for k, v in c.items() if k not in ("check", "ok")) for c in checks]
    doc = {"generators": list(S.gens), "ok": ok, "checks": checks}
    return Result(OK if ok else MISMATCH, doc, "\n".join(lines))


def _random(cfg: RunConfig) -> Result:
    n = int(cfg.extra.get("count", 1))
    out = [list(random_plane_semigroup(cfg.g, cfg.bound, cfg.seed + i)) for i in range(n)]
    return Result(OK, out, "\n".join(",".join(map(str, x)) for x in out))


class _Usage(Exception):
    pass


_HANDLERS = {
    "invariants": _invariants,
    "motivic": _motivic,
    "topo": _topo,
    "poles": _poles,
    "jets": _jets,
    "series-check": _series_check,
    "count": _count,
    "flatness": _flatness,
    "verify-all": _verify_all,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Dispatch one command; returns ``(exit status, rendered document)``."""
    if cfg.command not in COMMANDS:
        return INVALID, f"unknown command {cfg.command!r}; choose from {', '.join(COMMANDS)}"
    try:
        if cfg.command == "random":
            res = _random(cfg)
        else:
            if not cfg.generators:
                raise _Usage("give the semigroup with --gens 4,6,13 or --input file.json")
            report = validate(cfg.generators)
            if not report.ok:
                res = Result(
                    INVALID,
                    {"error": "invalid semigroup", **report.to_dict()},
                    "invalid semigroup "
                    + ",".join(map(str, cfg.generators))
                    + ": "
                    + "; ".join(f"{c.name}" + (f" ({c.detail})" if c.detail else "") for c in report.violations),
                )
                return res.status, res.render(cfg.format)
            res = _HANDLERS[cfg.command](derive_structure(cfg.generators), cfg)
    except ResidueMismatch as exc:
        return MISMATCH, _error(cfg, "residue mismatch", str(exc))
    except (_Usage, InvalidSemigroup, BadCharacteristic, BudgetExceeded, ValueError) as exc:
        return INVALID, _error(cfg, type(exc).__name__, str(exc))
    except MonozetaError as exc:
        return INVALID, _error(cfg, type(exc).__name__, str(exc))
    return res.status, res.render(cfg.format)


def _error(cfg: RunConfig, kind: str, msg: str) -> str:
    if cfg.format == "json":
        return json.dumps({"error": kind, "message": msg}, indent=2)
    return f"error ({kind}): {msg}"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monozeta", description="Zeta functions of space monomial curves with plane semigroups.")
    p.add_argument("command", choices=COMMANDS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--gens", help="minimal generators, e.g. 4,6,13")
    src.add_argument("--input", help="JSON file with a 'generators' list")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--format", choices=("text", "json", "latex"), default="text")
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--latex", dest="format", action="store_const", const="latex")
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--order", type=int, help="series order (default 4*N_1)")
    p.add_argument("--eps", type=float, default=1e-6)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=float, help=f"op budget for count (default ${BUDGET_ENV} or 2e9)")
    p.add_argument("--local", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--g", type=int, default=2, help="genus for 'random'")
    p.add_argument("--bound", type=int, default=150, help="bound on the last generator for 'random'")
    p.add_argument("--count", type=int, default=1, help="how many semigroups 'random' emits")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for verification mismatches
        return OK if exc.code in (0, None) else INVALID
    gens: tuple[int, ...] = ()
    try:
        if args.gens:
            gens = parse_generators(args.gens)
        elif args.input:
            with open(args.input, encoding="utf-8") as fh:
                gens = parse_generators(fh.read())
    except (OSError, InvalidSemigroup, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID
    cfg = RunConfig(
        command=args.command,
        generators=gens,
        format=args.format,
        m=args.m,
        q=args.q,
        order=args.order,
        eps=args.eps,
        threads=args.threads,
        budget=int(args.budget) if args.budget is not None else default_budget(),
        seed=args.seed,
        g=args.g,
        bound=args.bound,
        local=args.local,
        extra={"count": args.count},
    )
    status, out = run(cfg)
    print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
