"""Command-line interface: ``spherical-hecke <subcommand> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors (including an exceeded enumeration budget).
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

from . import emit
from . import gl_spherical as gl
from . import hecke_expr as he
from . import sp_spherical as sp
from .multipoly import MPoly
from .series import XSeries

FORMATS = ("text", "latex", "json")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# rendering


def _render_poly(poly: MPoly, fmt: str, sym: bool = True) -> str:
    if fmt == "json":
        return emit.dumps(emit.mpoly_to_json(poly))
    if fmt == "latex":
        return emit.mpoly_sym_latex(poly) if sym else emit.mpoly_latex(poly)
    return emit.mpoly_sym_text(poly) if sym else emit.mpoly_text(poly)


def _render_series(s: XSeries, fmt: str, sym: bool = True) -> str:
    if fmt == "json":
        return emit.dumps(emit.series_to_json(s))
    if fmt == "latex":
        return emit.series_latex(s, sym=sym)
    return emit.series_text(s, sym=sym)


def _render_hecke(h, fmt: str) -> str:
    if fmt == "json":
        return emit.dumps(emit.hecke_to_json(h))
    if fmt == "latex":
        return emit.hecke_latex(h)
    return emit.hecke_text(h)


def _render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return emit.dumps(report)
    lines = [f"{report['status'].upper():5s} {report['check']}"]
    for c in report.get("details", []):
        extra = "" if c.get("first_mismatch") is None else f" (first mismatch: {c['first_mismatch']})"
        lines.append(f"  {c['status']:8s} {c['check']}{extra}")
    return "\n".join(lines)


def _report(name: str, checks: list[dict]) -> dict:
    ok = all(c["status"] in ("pass", "reported") for c in checks)
    return {"check": name, "status": "pass" if ok else "fail", "details": checks}


# ---------------------------------------------------------------------------
# subcommands


def _genus(value: int) -> int:
    if not 1 <= value <= 3:
        raise UsageError("genus must be 1, 2 or 3")
    return value


def cmd_omega_gl(args) -> tuple[int, str]:
    if not 0 <= args.lam <= args.mu:
        raise UsageError("need 0 <= lambda <= mu")
    poly = gl.omega_t_closed(args.lam, args.mu)
    if args.oracle is None:
        return 0, _render_poly(poly, args.format)
    if args.oracle < 2:
        raise UsageError("primes must be >= 2")
    got = gl.omega_t_oracle((0, args.lam, args.mu), args.oracle, args.budget)
    ok = got == poly.eval_p(args.oracle)
    report = {"check": f"oracle omega(t(1,p^{args.lam},p^{args.mu})) p={args.oracle}",
              "status": "pass" if ok else "fail", "first_mismatch": None if ok else emit.mpoly_text(got),
              "closed": emit.mpoly_to_json(poly)}
    if args.format == "json":
        return (0 if ok else 1), emit.dumps(report)
    return (0 if ok else 1), _render_poly(poly, args.format) + "\n" + \
        f"oracle p={args.oracle}: {report['status']}"


def cmd_omega_sp(args) -> tuple[int, str]:
    n = _genus(args.n)
    if args.gen not in sp.GENERATORS[:n + 1]:
        raise UsageError(f"generator {args.gen} is not defined in genus {n}")
    return 0, _render_poly(sp.omega_generator(args.gen, n), args.format)


def cmd_series(args) -> tuple[int, str]:
    n = _genus(args.genus)
    if args.order < 0:
        raise UsageError("order must be non-negative")
    return 0, _render_series(sp.R_series(n, args.order), args.format)


def _numerator(genus: int) -> XSeries:
    if genus == 3:
        return sp.P_poly(12, 3)
    return he.omega_image(he.E_explicit(genus))


def cmd_poly(args) -> tuple[int, str]:
    g = _genus(args.genus)
    if args.which == "P":
        return 0, _render_series(_numerator(g), args.format)
    if args.which == "Q":
        return 0, _render_series(sp.Q_poly(g), args.format)
    h = he.E_explicit(g) if args.which == "E" else he.F_explicit(g)
    return 0, _render_hecke(h, args.format)


def cmd_solve(args) -> tuple[int, str]:
    if args.template == "paper":
        template = he.paper_template()
    else:
        template = he.auto_template(3, range(0, args.max_power + 1))
    sol = he.solve_ansatz(sp.Q_poly(3), template)
    doc = {"template": args.template, "status": sol.status,
           "values": {k: emit.rf_json(v) for k, v in sol.values.items()},
           "residual": sol.residual, "free": sol.free}
    code = 0 if sol.ok else 1
    if args.format == "json":
        return code, emit.dumps(doc)
    lines = [f"status: {sol.status}"]
    for k, v in sol.values.items():
        lines.append(f"{k} = {emit.rf_latex(v) if args.format == 'latex' else v}")
    if sol.residual:
        lines.append(f"residual: {sol.residual}")
    if sol.free:
        lines.append(f"free unknowns: {', '.join(sol.free)}")
    return code, "\n".join(lines)


def cmd_specialize(args) -> tuple[int, str]:
    rep = sp.nu_check()
    code = 0 if rep["status"] == "pass" else 1
    if args.format == "json":
        return code, emit.dumps(rep)
    lines = [_render_report(rep, "text")]
    for k, c in enumerate(rep["coefficients"]):
        lines.append(f"X^{k}: {c}")
    return code, "\n".join(lines)


def _parse_primes(text: str) -> list[int]:
    try:
        primes = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad prime list {text!r}") from exc
    if not primes or any(q < 2 for q in primes):
        raise UsageError("primes must be >= 2")
    return primes


def verify_all(genus: int, order: int, primes: list[int], budget: int | None = None) -> dict:
    """Run every check relevant to ``genus`` and collect a flat report."""
    checks: list[dict] = []

    def add(name: str, fn: Callable[[], object]):
        k = fn()
        checks.append({"check": name, "status": "pass" if k is None else "fail", "first_mismatch": k})

    if genus == 3:
        from .fixtures import load_gl3_table, load_generator_images, load_K_constants

        def table():
            for key, ref in sorted(load_gl3_table().items()):
                if gl.omega_t_closed(*key) != ref:
                    return list(key)
            return None
        add("omega table 0<=lambda<=mu<=6", table)

        for q in primes:
            def oracle(q=q):
                for mu in range(5):
                    for lam in range(mu + 1):
                        got = gl.omega_t_oracle((0, lam, mu), q, budget)
                        if got != gl.omega_t_closed(lam, mu).eval_p(q):
                            return [lam, mu]
                return None
            add(f"oracle agreement p={q}", oracle)

        def generators():
            for tag, ref in sorted(load_generator_images().items()):
                if sp.omega_generator(tag, 3) != ref:
                    return tag
            return None
        add("generator images", generators)

        def ansatz():
            sol = he.solve_ansatz(sp.Q_poly(3), he.paper_template())
            if not sol.ok:
                return sol.status
            for k, v in sorted(load_K_constants().items()):
                if sol.values.get(k) != v:
                    return k
            return None
        add("ansatz K constants", ansatz)

        def functional():
            F = he.F_explicit(3)
            low = he.HeckePoly(3, [F.layer(k) for k in range(5)])
            return None if he.functional_equation(low) == F else "q5..q8"
        add("functional equation", functional)

        nu = sp.nu_check()
        checks.append({"check": nu["check"], "status": nu["status"],
                       "first_mismatch": next((d["first_mismatch"] for d in nu["details"]
                                               if d["first_mismatch"]), None)})

        rows = sp.sm_count_check(primes=tuple(q for q in (3, 5, 7, 11)), extra=(2,))
        bad = next((r for r in rows if r["status"] == "fail"), None)
        checks.append({"check": "sm counts q=3,5,7,11", "status": "pass" if bad is None else "fail",
                       "first_mismatch": bad})
        odd = [r for r in rows if r["status"] == "mismatch"]
        checks.append({"check": "sm counts q=2", "status": "reported",
                       "first_mismatch": odd[0] if odd else None,
                       "mismatches": len(odd)})

    for n in range(1, genus + 1):
        checks.append(gl.tamagawa_check(n, min(order, 6)))
    sh = he.verify_shimura(genus, order)
    for c in sh["details"]:
        checks.append(c)
    return _report(f"verify all genus={genus} order={order} primes={','.join(map(str, primes))}", checks)


def cmd_verify(args) -> tuple[int, str]:
    g = _genus(args.genus)
    if args.order < 2**g:
        raise UsageError(f"order must be at least {2**g} for genus {g}")
    rep = verify_all(g, args.order, _parse_primes(args.primes), args.budget)
    return (0 if rep["status"] == "pass" else 1), _render_report(rep, args.format)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--budget", type=int, default=None,
                        help=f"coset enumeration budget (default from ${gl.BUDGET_ENV} or 2^25)")

    parser = argparse.ArgumentParser(prog="spherical-hecke", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("omega-gl", parents=[common], help="omega(t(1,p^L,p^M)) for GL_3")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--oracle", type=int, metavar="P", help="compare against coset enumeration at p=P")
    p.set_defaults(func=cmd_omega_gl)

    p = sub.add_parser("omega-sp", parents=[common], help="image of a symplectic generator")
    p.add_argument("--gen", choices=sp.GENERATORS, required=True)
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(func=cmd_omega_sp)

    p = sub.add_parser("series", parents=[common], help="coefficients of R_g(X)")
    p.add_argument("--genus", type=int, default=3)
    p.add_argument("--order", type=int, default=8)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("poly", parents=[common], help="P, Q, E or F")
    p.add_argument("which", choices=("P", "Q", "E", "F"))
    p.add_argument("--genus", type=int, default=3)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("solve", parents=[common], help="solve the denominator ansatz")
    p.add_argument("--template", choices=("paper", "auto"), default="paper")
    p.add_argument("--max-power", type=int, default=4, help="highest X power for the auto template")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("specialize", parents=[common], help="x0=1, x_i=p^i check of P_3")
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("verify", parents=[common], help="batch verification")
    p.add_argument("target", choices=("all",))
    p.add_argument("--genus", type=int, default=3)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--primes", default="2,3")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = args.func(args)
    except (UsageError, gl.OracleBudgetError, ValueError) as exc:
        print(f"spherical-hecke: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
