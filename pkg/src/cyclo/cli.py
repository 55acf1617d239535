"""``cyclo`` command-line interface.

Exit codes: 0 success or all checks passed, 1 a counterexample was found,
2 usage or domain error.
"""

import argparse
import json
import sys
from typing import List, Optional

from cyclo import lehmer, sweeps
from cyclo.cyclotomic import cyclotomic_poly, deriv_at_1, deriv_ratio
from cyclo.ntkernel import jordan_totient
from cyclo.report import FAIL, render_value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_sweep_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n-min", type=_positive, default=1)
    p.add_argument("--n-max", type=_positive)
    p.add_argument("--k-max", type=_nonneg)
    p.add_argument("--m-max", type=_positive, default=8)
    p.add_argument("--jobs", type=_positive, default=None, help="worker processes (default: $CYCLO_JOBS or 1)")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for reproducible output")
    p.add_argument("--emit-fixtures", metavar="PATH", help="also write the s_k/F_k/Omega_m tables as JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("poly", help="cyclotomic polynomial Phi_N").add_argument("n", type=_positive)
    for name, help_text in (("deriv", "Phi_N^(K)(1)"), ("ratio", "Phi_N^(K)(1) / Phi_N(1)")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("n", type=_positive)
        p.add_argument("k", type=_nonneg)
    sub.add_parser("sk", help="polynomial s_K").add_argument("k", type=_positive)
    p = sub.add_parser("fk", help="Lehmer polynomial F_K")
    p.add_argument("k", type=_nonneg)
    p.add_argument("--route", choices=["partition", "series", "reconstruct"], default="partition")
    sub.add_parser("omega", help="polynomial Omega_M").add_argument("m", type=_positive)
    sub.add_parser("vn", help="polynomial V_N").add_argument("n", type=_positive)
    sub.add_parser("wn", help="polynomial W_N").add_argument("n", type=_positive)
    p = sub.add_parser("fkn", help="F_{K,N}(x) with integrality flag")
    p.add_argument("k", type=_positive)
    p.add_argument("n", type=_positive)
    p = sub.add_parser("totient", help="Jordan totient J_K(N)")
    p.add_argument("k", type=_positive)
    p.add_argument("n", type=_positive)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("claim", choices=sorted(sweeps.CLAIM_IDS))
    p.add_argument("--fixtures", metavar="PATH", help="check this F_k table (JSON fixtures) instead of the computed one")
    _add_sweep_flags(p)

    p = sub.add_parser("selftest", help="run every sweep at desk-scale caps")
    _add_sweep_flags(p)
    return parser


def _config(args) -> sweeps.SweepConfig:
    return sweeps.SweepConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        k_max=args.k_max,
        m_max=args.m_max,
        parallelism=args.jobs or sweeps.default_jobs(),
        output_format="json" if args.json else "text",
        timing=not args.no_timing,
    )


def _compute(args) -> str:
    cmd = args.command
    if cmd == "poly":
        return str(cyclotomic_poly(args.n).poly)
    if cmd == "deriv":
        return str(deriv_at_1(args.n, args.k))
    if cmd == "ratio":
        return render_value(deriv_ratio(args.n, args.k))
    if cmd == "sk":
        return lehmer.s_poly(args.k).render_factored()
    if cmd == "fk":
        route = "reconstruction" if args.route == "reconstruct" else args.route
        return lehmer.f_poly(args.k, route).render_factored()
    if cmd == "omega":
        return lehmer.omega_poly(args.m).render_factored()
    if cmd == "vn":
        return str(lehmer.v_poly(args.n))
    if cmd == "wn":
        return str(lehmer.w_poly(args.n))
    if cmd == "fkn":
        p = lehmer.f_kn_poly(args.k, args.n)
        return f"{p}\nintegral: {'yes' if p.is_integral() else 'no'}"
    if cmd == "totient":
        return str(jordan_totient(args.k, args.n))
    raise AssertionError(cmd)


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command not in ("verify", "selftest"):
            print(_compute(args))
            return 0
        cfg = _config(args)
        if args.emit_fixtures:
            sweeps.write_fixtures(args.emit_fixtures)
        if args.command == "verify":
            table = sweeps.load_f_table(args.fixtures) if args.fixtures else None
            reports = [sweeps.run_sweep(args.claim, cfg, table)]
        else:
            reports = sweeps.selftest(cfg)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"cyclo: error: {exc}", file=sys.stderr)
        return 2
    if cfg.output_format == "json":
        payload = reports[0].to_dict() if args.command == "verify" else [r.to_dict() for r in reports]
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(r.to_text() for r in reports))
    return 1 if any(r.status == FAIL for r in reports) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
