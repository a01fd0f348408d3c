"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import lucas, oracle, pell, primdiv, solver
from .ntheory import DomainError


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _int(text: str) -> int:
    try:
        return int(text.strip(), 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dioph11", description="Solve x^2 + 11^(2k) = y^n and inspect the proof steps.",
                allow_abbrev=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="solution family and elimination certificates", allow_abbrev=False)
    s.add_argument("--lambda-max", type=_int, required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("verify", help="check one tuple x y k n", allow_abbrev=False)
    for name in ("x", "y", "k", "n"):
        s.add_argument(name, type=_int)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("search", help="exhaustive search of x^2 + p^(2k) = y^n", allow_abbrev=False)
    s.add_argument("--x-max", type=_int, required=True)
    s.add_argument("--k-max", type=_int, required=True)
    s.add_argument("--n-max", type=_int, required=True)
    s.add_argument("--prime", type=_int, default=11)
    s.add_argument("--jobs", type=_int, default=1)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("pell", help="solutions of X^2 - D*Y^2 = N", allow_abbrev=False)
    s.add_argument("--d", type=_int, required=True)
    s.add_argument("--n", type=_int, default=1)
    s.add_argument("--count", type=_int, required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("lucas", help="binary recurrence t(r+1) = P t(r) - Q t(r-1)", allow_abbrev=False)
    s.add_argument("--p", type=_int, required=True)
    s.add_argument("--q", type=_int, required=True)
    s.add_argument("--t0", type=_int, required=True)
    s.add_argument("--tm1", type=_int, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--term", type=_int, metavar="R")
    g.add_argument("--mod", type=_int, metavar="M")
    g.add_argument("--zeros", type=_int, metavar="M")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("screen", help="primitive-divisor screens", allow_abbrev=False)
    s.add_argument("--prime", type=_int)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--exponent", type=_int)
    g.add_argument("--carmichael-d", type=_int)
    s.add_argument("--json", action="store_true")
    return p


def _tuple_line(t: solver.SolutionTuple) -> str:
    return f"{t.x} {t.y} {t.k} {t.n}"


def _tuple_dict(t: solver.SolutionTuple) -> dict[str, int]:
    return {"x": t.x, "y": t.y, "k": t.k, "n": t.n}


def _cmd_solve(args: argparse.Namespace) -> Any:
    family, certs = solver.solve_all(args.lambda_max)
    if args.json:
        return {
            "family": [dict(_tuple_dict(t), **{"lambda": lam}) for lam, t in enumerate(family)],
            "certificates": [c.to_dict() for c in certs],
        }
    parts = ["family:"] + [_tuple_line(t) for t in family]
    return "\n".join(parts) + "\n\n" + "\n\n".join(c.to_text() for c in certs)


def _cmd_verify(args: argparse.Namespace) -> Any:
    t = solver.SolutionTuple(args.x, args.y, args.k, args.n)
    ok = solver.verify_solution(t)
    if args.json:
        return dict(_tuple_dict(t), valid=ok)
    return "valid" if ok else "invalid"


def _cmd_search(args: argparse.Namespace) -> Any:
    bounds = oracle.SearchBounds(args.x_max, args.k_max, args.n_max, args.prime)

    def progress(done: int, total: int) -> None:
        if total > 1:
            print(f"chunks done: {done}/{total}", file=sys.stderr)

    found = oracle.brute_force_search(bounds, jobs=args.jobs, progress=progress)
    if args.json:
        return {"bounds": {"x_max": bounds.x_max, "k_max": bounds.k_max, "n_max": bounds.n_max,
                           "prime": bounds.base_prime},
                "solutions": [_tuple_dict(t) for t in found]}
    return "\n".join(_tuple_line(t) for t in found)


def _cmd_pell(args: argparse.Namespace) -> Any:
    problem = pell.PellProblem(args.d, args.n)
    a0, period = pell.cf_sqrt(args.d)
    unit, unit_norm = pell.fundamental_unit(args.d)
    if args.count < 1:
        raise DomainError("--count must be >= 1")
    if args.n == -1:
        if unit_norm != -1:
            raise DomainError(f"X^2 - {args.d}Y^2 = -1 has no solutions")
        sols = pell.orbit(unit, unit.mul(unit, args.d), args.d, args.count)
    elif args.n == 1:
        sols = pell.orbit(pell.QuadPair(1, 0), pell.positive_unit(args.d), args.d, args.count)
    else:
        sols = []
        for base in pell.base_solutions(problem):
            sols.extend(pell.orbit(base, pell.positive_unit(args.d), args.d, args.count))
    for s in sols:
        if s.norm(args.d) != args.n:
            raise AssertionError(f"{s} does not solve X^2 - {args.d}Y^2 = {args.n}")
    if args.json:
        return {"D": args.d, "N": args.n, "cf": {"a0": a0, "period": period},
                "fundamental_unit": {"x": unit.x, "y": unit.y, "norm": unit_norm},
                "solutions": [[s.x, s.y] for s in sols]}
    head = [f"sqrt({args.d}) = [{a0}; ({', '.join(map(str, period))})]",
            f"fundamental unit: {unit.x} {unit.y} norm {unit_norm:+d}"]
    return "\n".join(head + [f"{s.x} {s.y}" for s in sols])


def _cmd_lucas(args: argparse.Namespace) -> Any:
    seq = lucas.BinaryRecurrence(args.p, args.q, args.tm1, args.t0)
    if args.term is not None:
        value = lucas.term(seq, args.term)
        return {"r": args.term, "term": value} if args.json else str(value)
    if args.mod is not None:
        res = lucas.residues_mod(seq, args.mod, -1)
        if args.json:
            return {"modulus": args.mod, "period": res.period, "r_start": -1, "residues": res.residues}
        return f"period {res.period}\n" + " ".join(map(str, res.residues))
    zc = lucas.zero_classes_mod(seq, args.zeros)
    if args.json:
        return {"modulus": args.zeros, "period": zc.period, "classes": sorted(zc.classes)}
    return "\n".join(f"{c} mod {zc.period}" for c in sorted(zc.classes)) or f"none (period {zc.period})"


def _verdict_text(v: primdiv.ScreenVerdict) -> str:
    if v.excluded:
        return f"excluded: {v.reason.value.replace('_', ' ')}"
    return f"not excluded: {v.detail}"


def _cmd_screen(args: argparse.Namespace) -> Any:
    if args.exponent is not None:
        if args.prime is None:
            raise UsageError("screen: --exponent requires --prime")
        v = primdiv.congruence_screen(args.prime, args.exponent)
        if args.json:
            return {"prime": args.prime, "exponent": args.exponent, "excluded": v.excluded,
                    "reason": v.reason.value if v.reason else None, "detail": v.detail}
        return _verdict_text(v)
    p = 11 if args.prime is None else args.prime
    result = primdiv.carmichael_screen(args.carmichael_d, p)
    v = result.verdict
    if args.json:
        return {"prime": p, "D": args.carmichael_d, "excluded": v.excluded,
                "reason": v.reason.value if v.reason else None, "detail": v.detail,
                "direct_checks": [[c.m, c.value, c.exponent] for c in result.checks]}
    lines = [_verdict_text(v)]
    lines += [f"X_{c.m} = {c.value}" + ("" if c.exponent is None else f" = {p}^{c.exponent}")
              for c in result.checks]
    return "\n".join(lines)


_COMMANDS = {
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "pell": _cmd_pell,
    "lucas": _cmd_lucas,
    "screen": _cmd_screen,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = _COMMANDS[args.command](args)
    except (UsageError, DomainError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except AssertionError as exc:
        print(f"internal invariant violated: {exc}", file=err)
        return 2
    if isinstance(result, str):
        print(result, file=out)
    else:
        print(json.dumps(result, indent=2), file=out)
    return 0


def main() -> None:
    sys.exit(run())
