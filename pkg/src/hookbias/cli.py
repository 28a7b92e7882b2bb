"""``hookbias`` command line: bias tables, claim verification, Table 1."""

from __future__ import annotations

import argparse
import json
import sys

from . import appendix, claims, phi, psi, series
from .hooks import bias_table
from .report import FAIL

DEFAULT_N_MAX = {
    "phi": 35,
    "psi-table1": 26,
    "appendix": 40,
    "theorem": 45,
    "prior-biases": 45,
    "conjecture": 40,
}
CLAIMS = ("phi", "psi-table1", "series", "appendix", "theorem", "conjecture", "prior-biases")


def _positive(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hookbias", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    bt = sub.add_parser("btable", help="table of b_{t,k}(n)")
    bt.add_argument("--t", type=int, required=True)
    bt.add_argument("--k", type=int, default=2)
    bt.add_argument("--n-max", type=_positive, required=True)
    bt.add_argument("--format", choices=("csv", "json"), default="csv")
    bt.add_argument("--method", choices=("cells", "beta", "domino"), default="cells")
    bt.add_argument("--out")
    bt.add_argument("--jobs", type=int, default=1)

    ve = sub.add_parser("verify", help="run a claim verifier, NDJSON on stdout")
    ve.add_argument("claim", choices=CLAIMS)
    ve.add_argument("--n-max", type=_positive)
    ve.add_argument("--t-min", type=int, default=3)
    ve.add_argument("--t-max", type=int, default=8)
    ve.add_argument("--order", type=_positive, default=series.DEFAULT_ORDER)
    ve.add_argument("--out")
    ve.add_argument("--jobs", type=int, default=1)
    ve.add_argument("--timing", action="store_true", help="include runtime_ms in records")

    tb = sub.add_parser("table1", help="regenerate the D3(22) -> D4(22) table and diff it")
    tb.add_argument("--format", choices=("text", "json"), default="text")
    tb.add_argument("--out")
    return ap


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run_claim(claim: str, args) -> list:
    n_max = args.n_max if args.n_max is not None else DEFAULT_N_MAX.get(claim)
    if claim == "phi":
        return phi.verify_phi(n_max, min(n_max, 30))
    if claim == "psi-table1":
        return psi.verify_psi(n_max) + [psi.verify_table1()]
    if claim == "series":
        return series.verify_series(args.order)
    if claim == "appendix":
        return appendix.verify_all(n_max)
    if claim == "theorem":
        return [claims.verify_theorem(n_max, args.jobs)]
    if claim == "prior-biases":
        return claims.verify_prior_biases(n_max, args.jobs)
    return claims.verify_conjecture(args.t_min, args.t_max, n_max, args.jobs)


def cmd_btable(args) -> int:
    if args.t < 2 or args.k < 1:
        print("hookbias: need t >= 2 and k >= 1", file=sys.stderr)
        return 2
    table = bias_table(args.t, args.k, args.n_max, args.method, args.jobs)
    text = table.to_csv() if args.format == "csv" else json.dumps(table.to_json_obj()) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    try:
        reports = run_claim(args.claim, args)
    except ValueError as e:
        print(f"hookbias: {e}", file=sys.stderr)
        return 2
    reports.sort(key=lambda r: (r.claim_id, json.dumps(r.range, default=str)))
    _emit("".join(r.to_json(include_runtime=args.timing) + "\n" for r in reports), args.out)
    for r in reports:
        print(r.summary(), file=sys.stderr)
    if args.claim == "conjecture":
        print(f"conjecture results are {claims.EVIDENCE_LABEL}", file=sys.stderr)
    return 1 if any(r.status == FAIL for r in reports) else 0


def render_table(rows) -> str:
    lines = []
    for row in rows:
        head = "(unmatched)" if row.complement is None else repr(row.complement)
        lines.append(head)
        lines.append("  pre-images: " + ", ".join(map(repr, row.preimages)))
        lines.append("  Psi(complement): " + ("" if row.psi_complement is None else repr(row.psi_complement)))
        lines.append("  images: " + ", ".join(map(repr, row.images)))
    return "\n".join(lines) + "\n"


def cmd_table1(args) -> int:
    rows = psi.table1(22)
    if args.format == "json":
        text = json.dumps({"n": 22, "rows": [r.to_json_obj() for r in rows]}, indent=1) + "\n"
    else:
        text = render_table(rows)
    _emit(text, args.out)
    diffs = psi.diff_table1(rows, psi.load_golden_table1())
    for d in diffs:
        print("diff: " + json.dumps(d, default=repr), file=sys.stderr)
    return 1 if diffs else 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return {"btable": cmd_btable, "verify": cmd_verify, "table1": cmd_table1}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
