"""frobkit command line interface.

Every command prints one report (JSON by default, CSV on request) to
stdout.  Exit status: 0 on success, 2 on usage errors (bad command,
malformed monomials or input files, p dividing n), 3 on computation
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import staircase as st
from . import veronese as ver
from .errors import FrobkitError
from .homlab.io import load_problem
from .homlab.socle import check_socle_hypothesis, socle_injection
from .homlab.surjection import bq_oracle
from .invariants import (
    Estimate,
    InvariantSeries,
    classify_regular,
    classify_veronese,
    growth_order,
    limsup_estimate,
    regular_family_series,
    veronese_dual_series,
    veronese_estimate,
    veronese_splitting_series,
)

COMMANDS = (
    "hk", "hk-exact", "relative-hk", "r-estimate", "decompose", "fsig",
    "dual-fsig", "bq-oracle", "socle-inject", "growth-order", "classify",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rat(x: Fraction | None) -> str | None:
    if x is None:
        return None
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _estimate_doc(est: Estimate) -> dict:
    return {
        "value": _rat(est.value),
        "window": est.window,
        "cauchy_gap": _rat(est.cauchy_gap),
        "lower": _rat(est.lower),
        "upper": _rat(est.upper),
    }


def _series_doc(S: InvariantSeries) -> list[dict]:
    return [
        {"e": pt.e, "q": pt.q, "count": pt.count, "normalized": _rat(x)}
        for pt, x in zip(S.points, S.normalized())
    ]


def _prime(text: str) -> int:
    p = int(text)
    if not ver._is_prime(p):
        raise argparse.ArgumentTypeError(f"{text} is not prime")
    return p


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="frobkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, series=True):
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        if series:
            sp.add_argument("--prime", type=_prime, required=True)
            sp.add_argument("--emax", type=_nonneg, required=True)
            sp.add_argument("--emin", type=_nonneg, default=1)
            sp.add_argument("--window", type=int, default=3)

    def veronese_args(sp, with_class=True):
        sp.add_argument("--n", type=int, required=True, help="Veronese degree")
        if with_class:
            sp.add_argument("--class", dest="cls", type=int, default=0, help="divisor class l")

    sp = sub.add_parser("hk", help="Hilbert-Kunz function of a monomial ideal")
    common(sp)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--dim", type=int)

    sp = sub.add_parser("hk-exact", help="exact Hilbert-Kunz multiplicity")
    common(sp, series=False)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--dim", type=int)

    sp = sub.add_parser("relative-hk", help="e_HK(I) - e_HK(J) for I inside J")
    common(sp, series=False)
    sp.add_argument("--ideal", required=True, help="the smaller ideal I")
    sp.add_argument("--larger", required=True, help="the larger ideal J")
    sp.add_argument("--dim", type=int)

    sp = sub.add_parser("r-estimate", help="socle gap of a monomial parameter ideal")
    common(sp, series=False)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--dim", type=int)

    sp = sub.add_parser("decompose", help="class multiplicities of F^e_* I_l")
    common(sp)
    veronese_args(sp)

    sp = sub.add_parser("fsig", help="splitting numbers and F-signature of the Veronese ring")
    common(sp)
    veronese_args(sp, with_class=False)

    sp = sub.add_parser("dual-fsig", help="certified F-surjective bounds and dual F-signature of I_l")
    common(sp)
    veronese_args(sp)

    sp = sub.add_parser("bq-oracle", help="randomized F-surjective numbers of I_l")
    common(sp)
    veronese_args(sp)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--field-size", type=int, default=101)

    sp = sub.add_parser("socle-inject", help="socle-injective element for a socle problem file")
    common(sp, series=False)
    sp.add_argument("--file", required=True)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--no-validate", action="store_true")

    sp = sub.add_parser("growth-order", help="growth exponent and F-surjective ratio")
    common(sp)
    sp.add_argument("--family", choices=("regular", "veronese"), default="regular")
    sp.add_argument("--dim", type=int, help="ambient dimension d (regular family)")
    sp.add_argument("--sub", type=int, help="quotient dimension i (regular family)")
    sp.add_argument("--n", type=int)
    sp.add_argument("--class", dest="cls", type=int, default=0)

    sp = sub.add_parser("classify", help="regular / strongly F-regular / F-rational / Gorenstein flags")
    common(sp)
    sp.add_argument("--family", choices=("veronese", "regular"), default="veronese")
    sp.add_argument("--n", type=int)
    sp.add_argument("--dim", type=int)
    sp.add_argument("--epsilon", type=Fraction, default=Fraction(1, 10**6))
    return parser


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("FROBKIT_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"FROBKIT_SEED={env!r} is not an integer") from None


def _erange(args) -> range:
    if args.emin > args.emax:
        raise UsageError(f"--emin {args.emin} exceeds --emax {args.emax}")
    return range(args.emin, args.emax + 1)


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required here")


def _veronese(n: int, l: int, p: int) -> ver.VeroneseModule:
    try:
        return ver.VeroneseModule(n, l, p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def run_command(args) -> dict[str, Any]:
    cmd = args.command
    report: dict[str, Any] = {"command": cmd}

    if cmd in ("hk", "hk-exact", "relative-hk", "r-estimate"):
        I = st.parse_ideal(args.ideal, args.dim)
        if cmd == "relative-hk":
            J = st.parse_ideal(args.larger, args.dim)
            d = max(I.dim, J.dim)
            I, J = st.parse_ideal(args.ideal, d), st.parse_ideal(args.larger, d)
            report.update(ideal=str(I), larger=str(J), relative_hk=_rat(st.relative_hk(I, J)))
            return report
        report["ideal"] = str(I)
        if cmd == "r-estimate":
            report["r_estimate"] = _rat(st.r_estimate(I))
            report["bound"] = "upper bound on r_R(R) over monomial socle representatives"
            return report
        report["multiplicity"] = _rat(st.hk_exact(I))
        if cmd == "hk":
            pts = st.hk_function(I, args.prime, _erange(args))
            S = InvariantSeries.from_counts(args.prime, ((h.e, h.colength) for h in pts), I.dim, bounded=False)
            report["series"] = _series_doc(S)
            if S.points:
                report["estimate"] = _estimate_doc(limsup_estimate(S, min(args.window, len(S.points))))
        return report

    if cmd == "decompose":
        V = _veronese(args.n, args.cls, args.prime)
        report.update(n=V.n, l=V.l, p=V.p)
        report["decompositions"] = [
            {"e": d.e, "q": d.q, "mult": list(d.mult)}
            for d in (ver.decompose(V, e) for e in _erange(args))
        ]
        return report

    if cmd == "fsig":
        _veronese(args.n, 0, args.prime)
        es = list(_erange(args))
        S = veronese_splitting_series(args.n, args.prime, es)
        report.update(n=args.n, p=args.prime, series=_series_doc(S))
        report["estimate"] = _estimate_doc(veronese_estimate(args.n, 0, args.prime, es, args.window))
        return report

    if cmd == "dual-fsig":
        V = _veronese(args.n, args.cls, args.prime)
        es = list(_erange(args))
        lo, hi = veronese_dual_series(V.n, V.l, V.p, es)
        report.update(n=V.n, l=V.l, p=V.p, series=_series_doc(lo), upper_series=_series_doc(hi))
        report["estimate"] = _estimate_doc(veronese_estimate(V.n, V.l, V.p, es, args.window))
        return report

    if cmd == "bq-oracle":
        V = _veronese(args.n, args.cls, args.prime)
        seed = _seed(args)
        counts, bounds = [], []
        for e in _erange(args):
            dec = ver.decompose(V, e)
            b = bq_oracle(dec, V.l, args.field_size, args.trials, seed)
            counts.append((e, b))
            bounds.append((ver.lower_bound(dec.mult, V.l), ver.upper_bound(dec.mult, V.l)))
        S = InvariantSeries.from_counts(V.p, counts, 2)
        series = _series_doc(S)
        for row, (lo, hi) in zip(series, bounds):
            row.update(lower=lo, upper=hi)
        report.update(n=V.n, l=V.l, p=V.p, seed=seed, trials=args.trials, field_size=args.field_size, series=series)
        if len(S.points) >= args.window:
            report["estimate"] = _estimate_doc(limsup_estimate(S, args.window))
        return report

    if cmd == "socle-inject":
        S = load_problem(args.file, validate=not args.no_validate)
        seed = _seed(args)
        check = check_socle_hypothesis(S, seed=seed)
        m = socle_injection(S, args.trials, seed)
        images = [(S.module.act(delta) @ m % S.algebra.p).tolist() for delta in S.subspace]
        report.update(field=S.algebra.p, seed=seed, hypothesis=check.mode, m=m.tolist(),
                      socle_images=images, injective_on_subspace=True)
        return report

    if cmd == "growth-order":
        es = list(_erange(args))
        if args.family == "regular":
            _require(args, "dim", "sub")
            S = regular_family_series(args.dim, args.sub, args.prime, es)
        else:
            _require(args, "n")
            V = _veronese(args.n, args.cls, args.prime)
            S = veronese_dual_series(V.n, V.l, V.p, es)[0]
        g = growth_order(S, args.window)
        report.update(series=_series_doc(S), order=_rat(g.order), slope=g.slope, residual=g.residual,
                      ratio=_estimate_doc(g.ratio))
        report["estimate"] = report["ratio"]
        return report

    if cmd == "classify":
        es = list(_erange(args))
        if args.family == "veronese":
            _require(args, "n")
            _veronese(args.n, 0, args.prime)
            c, s_r, s_om = classify_veronese(args.n, args.prime, es, args.window, args.epsilon)
        else:
            _require(args, "dim")
            c, s_r, s_om = classify_regular(args.dim, args.prime, es, args.window)
        report.update(c.as_dict())
        report.update(s_R=_estimate_doc(s_r), s_omega=_estimate_doc(s_om))
        return report

    raise UsageError(f"unknown command {cmd!r}")


def render(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "series" in report:
        w.writerow(["e", "q", "count", "normalized"])
        for row in report["series"]:
            w.writerow([row["e"], row["q"], row["count"], row["normalized"]])
    elif "decompositions" in report:
        w.writerow(["e", "q", "class", "count"])
        for d in report["decompositions"]:
            for i, a in enumerate(d["mult"]):
                w.writerow([d["e"], d["q"], i, a])
    else:
        w.writerow(["key", "value"])
        for k, v in report.items():
            w.writerow([k, json.dumps(v) if isinstance(v, (list, dict)) else v])
    return buf.getvalue()


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if argv and not argv[0].startswith("-") and argv[0] not in COMMANDS:
            raise UsageError(f"unknown command {argv[0]!r}")
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("no command given; choose one of " + ", ".join(COMMANDS))
        text = render(run_command(args), args.format)
    except UsageError as exc:
        print(f"frobkit: usage error: {exc}", file=err)
        return 2
    except st.MonomialSyntaxError as exc:
        print(f"frobkit: usage error: {exc}", file=err)
        return 2
    except FrobkitError as exc:
        print(f"frobkit: {type(exc).__name__}: {exc}", file=err)
        return 3
    except (ValueError, OSError) as exc:
        print(f"frobkit: usage error: {exc}", file=err)
        return 2
    out.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
