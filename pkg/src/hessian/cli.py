"""Command-line interface: ``hessian <command> --p P [--k K] ...``.

Exit codes: 0 success, 2 bad input, 3 cost budget exceeded, 4 internal
invariant failure (including a failed verification).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from .bsd import BsdReport, bsd_product
from .curve import invariants
from .errors import BudgetExceeded, InputError, InvariantFailure
from .gf import PrimePower, make_field
from .lfun import functional_equation_check, l_function, power_sums
from .oracle import DEFAULT_BUDGET, charsum_identity_check, trace_sum

SCHEMA = "hessian-lfunc/1"
SCAN_COLUMNS = [
    "q", "d", "deg", "rank", "L*_num", "L*_den", "H_exp", "tamagawa",
    "sha_reg_num", "sha_reg_den", "bs_ratio", "spval_ratio", "fe_sign",
]


class VerificationFailed(InvariantFailure):
    pass


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, indent=2) + "\n"


def _pp(args) -> PrimePower:
    return PrimePower(args.p, args.k)


def _require_d(args) -> int:
    if args.d is None:
        raise InputError("--d is required")
    return args.d


def cmd_lfun(args) -> str:
    pp = _pp(args)
    d = _require_d(args)
    L = l_function(pp, d, cache_dir=args.cache_dir)
    eps = functional_equation_check(L)
    if args.format == "csv":
        row = [L.q, d, L.degree, eps, " ".join(str(c) for c in L.coeffs)]
        return _csv([row], ["q", "d", "degree", "fe_sign", "coefficients"])
    factors = [{"m": f.m, "len": f.length, "v_member": f.c == L.q**f.length} for f in L.factors]
    return _json({"q": L.q, "d": d, "degree": L.degree, "coefficients": list(L.coeffs),
                  "factors": factors, "fe_sign": eps})


def cmd_verify(args) -> str:
    pp = _pp(args)
    d = _require_d(args)
    if args.nmax is None or args.nmax < 1:
        raise InputError("--nmax must be a positive integer")
    budget = DEFAULT_BUDGET if args.budget is None else args.budget
    if pp.q ** (2 * args.nmax) > budget:
        raise BudgetExceeded(f"q^(2*{args.nmax}) exceeds budget {budget}")
    L = l_function(pp, d, cache_dir=args.cache_dir)
    sums = power_sums(L, args.nmax)
    rows = []
    for n in range(1, args.nmax + 1):
        t = trace_sum(pp, d, n, budget=budget, cache_dir=args.cache_dir).value
        rows.append((n, sums[n - 1], t, sums[n - 1] == t))
    ok = all(r[3] for r in rows)
    if args.format == "csv":
        text = _csv([(n, a, b, "PASS" if m else "FAIL") for n, a, b, m in rows],
                    ["n", "lfun", "oracle", "status"])
    else:
        text = _json({"q": pp.q, "d": d, "result": "PASS" if ok else "FAIL",
                      "rows": [{"n": n, "lfun": a, "oracle": b, "match": m} for n, a, b, m in rows]})
    if not ok:
        _emit(args, text)
        raise VerificationFailed(f"power sums disagree with point counts for q={pp.q}, d={d}")
    return text


def _report_row(rep: BsdReport) -> list:
    return [
        rep.q, rep.d, rep.degree, rep.rank, rep.special_value.numerator, rep.special_value.denominator,
        rep.height_exponent, rep.tamagawa, rep.sha_reg.numerator, rep.sha_reg.denominator,
        _fmt(rep.bs_ratio), _fmt(rep.spval_ratio), rep.fe_sign,
    ]


def _report_dict(rep: BsdReport) -> dict:
    return dict(zip(SCAN_COLUMNS, _report_row(rep)))


def _bsd_job(job) -> BsdReport:
    p, k, d, cache_dir = job
    return bsd_product(PrimePower(p, k), d, cache_dir=cache_dir)


def cmd_bsd(args) -> str:
    pp = _pp(args)
    rep = _bsd_job((pp.p, pp.k, _require_d(args), args.cache_dir))
    if args.format == "csv":
        return _csv([_report_row(rep)], SCAN_COLUMNS)
    return _json(_report_dict(rep))


def scan_reports(pp: PrimePower, dmin: int, dmax: int, threads: int = 1, cache_dir=None) -> list[BsdReport]:
    """BSD reports for every d in [dmin, dmax] prime to q, ordered by d."""
    jobs = [(pp.p, pp.k, d, cache_dir) for d in range(max(2, dmin), dmax + 1) if gcd(d, pp.q) == 1]
    if threads <= 1:
        return [_bsd_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(_bsd_job, jobs))


def cmd_scan(args) -> str:
    pp = _pp(args)
    if args.dmax is None:
        raise InputError("--dmax is required")
    reps = scan_reports(pp, args.dmin, args.dmax, args.threads, args.cache_dir)
    if args.format == "json":
        return _json({"q": pp.q, "rows": [_report_dict(r) for r in reps]})
    return _csv([_report_row(r) for r in reps], SCAN_COLUMNS)


def cmd_invariants(args) -> str:
    pp = _pp(args)
    inv = invariants(pp, _require_d(args))
    data = {"q": inv.q, "d": inv.d, "degDmin": inv.disc_degree, "degN": inv.conductor_degree,
            "H_exp": inv.height_exponent, "tamagawa": inv.tamagawa, "torsion": inv.torsion_order}
    if args.format == "csv":
        return _csv([list(data.values())], list(data))
    data["reduction_table"] = [
        {"place": r.place, "kodaira": r.kodaira, "ord_disc": r.ord_disc, "ord_cond": r.ord_cond,
         "c_v": r.c_v, "total_degree": r.total_degree}
        for r in inv.reduction_table
    ]
    return _json(data)


def cmd_identity_check(args) -> str:
    ctx = make_field(_pp(args), 1, cache_dir=args.cache_dir)
    rep = charsum_identity_check(ctx)
    if args.format == "json":
        text = _json({"r": rep.r, "checked": rep.checked,
                      "failures": [list(f) for f in rep.failures]})
    else:
        text = f"{rep.checked} identities checked, {len(rep.failures)} failures\n"
    if not rep.ok:
        _emit(args, text)
        raise VerificationFailed(f"{len(rep.failures)} character-sum identities failed")
    return text


COMMANDS = {
    "lfun": cmd_lfun,
    "verify": cmd_verify,
    "bsd": cmd_bsd,
    "scan": cmd_scan,
    "invariants": cmd_invariants,
    "identity-check": cmd_identity_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="characteristic (prime >= 5)")
    common.add_argument("--k", type=int, default=1, help="q = p^k (default 1)")
    common.add_argument("--d", type=int)
    common.add_argument("--dmin", type=int, default=2)
    common.add_argument("--dmax", type=int)
    common.add_argument("--nmax", type=int)
    common.add_argument("--budget", type=int, help=f"max q^(2n) for point counts (default {DEFAULT_BUDGET})")
    common.add_argument("--format", choices=["json", "csv"])
    common.add_argument("--cache-dir", help="directory for field tables (HESSIAN_CACHE overrides)")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="hessian", description="L-functions of y^2 + xy - t^d y = x^3 over F_q(t)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


_DEFAULT_FORMAT = {"scan": "csv", "identity-check": "csv"}


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = _DEFAULT_FORMAT.get(args.command, "json")
    try:
        text = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InvariantFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    _emit(args, text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
