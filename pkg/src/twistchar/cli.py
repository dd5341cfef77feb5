"""Command-line front end.

Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 on usage
or enumeration-cap errors.  Status lines from ``--verify-oracle`` and
``--check-identity`` go to stderr so stdout stays machine readable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .braidchar import CharacterTable, braiding_character
from .chromatic import (StemGroup, chromatic_character, chromatic_decision,
                        transchromatic_table)
from .coeffring import SignedUnitValue, value_to_json
from .errors import EnumerationLimitError, RingMismatchError
from .extalg import ext_series, verify_sym_ext_identity
from .graded import FiniteAbelianGroup, Twist, count_twists
from .oracle import MATRIX_CAP
from .symgroup import (centralizer_order, class_size, cycle_counts, num_cycles,
                       partitions)
from .verify import (character_mismatches, check_characters, check_ext_dims,
                     check_identity, ext_dim_mismatches)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

_UNIT_RE = re.compile(r"^\s*([+-]?\d+)?\s*(?:([+-])?\s*(\d*)\s*u)?\s*$")


def parse_dim(text: str):
    """Parse ``3``, ``u``, ``-u`` or ``2+3u`` into an int or SignedUnitValue."""
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    m = _UNIT_RE.match(text)
    if not m or "u" not in text:
        raise argparse.ArgumentTypeError(f"cannot parse dimension {text!r}")
    a = int(m.group(1) or 0)
    sign = -1 if m.group(2) == "-" else 1
    b = sign * int(m.group(3) or 1)
    return SignedUnitValue(a, b)


def _twist(text: str) -> Twist:
    try:
        return Twist.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(payload, rows: list[dict], fmt: str, out, plain_header: str | None = None):
    if fmt == "json":
        out.write(json.dumps(payload, ensure_ascii=False) + "\n")
        return
    if fmt == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow({k: json.dumps(v, ensure_ascii=False) if isinstance(v, (list, dict)) else v
                                 for k, v in row.items()})
        out.write(buf.getvalue())
        return
    if plain_header:
        out.write(plain_header + "\n")
    if not rows:
        return
    cols = list(rows[0])
    cells = [[_plain(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _plain(v) -> str:
    if isinstance(v, list):
        return "[" + ",".join(map(str, v)) + "]"
    if isinstance(v, dict):
        return json.dumps(v)
    return str(v)


def _table_rows(table: CharacterTable) -> list[dict]:
    return table.to_json()["rows"]


def cmd_classes(args, out, err) -> int:
    rows = []
    for lam in partitions(args.m):
        rows.append({
            "partition": lam.to_json(),
            "cycles": num_cycles(lam),
            "cycle_counts": {str(k): n for k, n in cycle_counts(lam).items()},
            "centralizer_order": centralizer_order(lam),
            "class_size": class_size(lam),
        })
    _emit({"m": args.m, "classes": rows}, rows, args.format, out)
    return EXIT_OK


def _oracle_applicable(twist: Twist, dim, m: int) -> bool:
    return (isinstance(dim, int) and dim >= 0 and twist.name in ("trivial", "koszul")
            and dim ** m <= MATRIX_CAP)


def cmd_character(args, out, err) -> int:
    table = braiding_character(args.twist, args.dim, args.m)
    _emit(table.to_json(), _table_rows(table), args.format, out,
          f"twist={args.twist.name} dim={args.dim} m={args.m}")
    if args.verify_oracle:
        if not _oracle_applicable(args.twist, args.dim, args.m):
            err.write("oracle: not applicable (needs integer dim >= 0, trivial/koszul twist, "
                      f"dim^m <= {MATRIX_CAP})\n")
            return EXIT_USAGE
        bad = character_mismatches(args.twist, args.dim, args.m)
        if bad:
            err.write("oracle: MISMATCH\n" + "\n".join(bad) + "\n")
            return EXIT_MISMATCH
        err.write("oracle: match\n")
    return EXIT_OK


def cmd_extseries(args, out, err) -> int:
    series = ext_series(args.twist, args.dim, args.order)
    rows = [{"n": n, "categorical": value_to_json(c), "underlying": value_to_json(u)}
            for n, (c, u) in enumerate(zip(series.categorical.coeffs, series.underlying.coeffs))]
    _emit(series.to_json() | {"dim": value_to_json(args.dim)}, rows, args.format, out,
          f"twist={args.twist.name} dim={args.dim} order={args.order}")
    status = EXIT_OK
    if args.check_identity:
        if not isinstance(args.dim, int) or args.dim < 0:
            err.write("identity check needs an integer dim >= 0\n")
            return EXIT_USAGE
        holds, witness = verify_sym_ext_identity(args.dim, args.order)
        if holds:
            err.write("identity holds\n")
        else:
            err.write(f"identity FAILS: product = {witness}\n")
            status = EXIT_MISMATCH
    if args.verify_oracle:
        if not _oracle_applicable(args.twist, args.dim, min(args.order, 5)):
            err.write("oracle: not applicable\n")
            return EXIT_USAGE
        bad = []
        for n in range(min(args.order, 5) + 1):
            if args.dim ** n <= MATRIX_CAP:
                bad += ext_dim_mismatches(args.twist, args.dim, n)
        if bad:
            err.write("oracle: MISMATCH\n" + "\n".join(bad) + "\n")
            status = EXIT_MISMATCH
        else:
            err.write("oracle: match\n")
    return status


def cmd_chromatic(args, out, err) -> int:
    if args.stem_orders is None:
        try:
            stem = StemGroup.reference(args.p, args.n)
        except KeyError as exc:
            raise ValueError(f"{exc.args[0]}; pass --stem-orders") from None
    else:
        orders = tuple(args.stem_orders)
        stem = StemGroup(args.p, args.n, orders, (0,) * len(orders))
    alpha_res = tuple(args.alpha) if args.alpha is not None else (0,) * len(stem.orders)
    if len(alpha_res) == 1 and len(stem.orders) > 1:
        alpha_res = alpha_res * len(stem.orders)
    alpha = stem.with_element(alpha_res)
    decision = chromatic_decision(args.p, args.n, alpha)
    table = chromatic_character(args.p, args.n, alpha, args.m)
    payload = {
        "p": args.p,
        "n": args.n,
        "stem_orders": list(alpha.orders),
        "alpha": list(alpha.element),
        "two_divisible": alpha.is_two_divisible(),
        "omega": decision.omega,
        "label": decision.label,
        "table": table.to_json(),
    }
    _emit(payload, _table_rows(table), args.format, out,
          f"{decision.label} (omega = {decision.omega:+d})")
    return EXIT_OK


def cmd_count_twists(args, out, err) -> int:
    n = count_twists(FiniteAbelianGroup(tuple(args.units)))
    if args.format == "json":
        out.write(json.dumps({"units": list(args.units), "count": n}) + "\n")
    else:
        out.write(f"{n}\n")
    return EXIT_OK


def cmd_transchromatic(args, out, err) -> int:
    rows = [{"coords": list(r.component.coords), "valuation": r.component.valuation,
             "value": r.value, "action": r.action}
            for r in transchromatic_table(args.k, args.j, args.omega)]
    _emit({"k": args.k, "j": args.j, "omega_t": args.omega, "rows": rows},
          rows, args.format, out)
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    checks = [check_characters(args.max_m), check_ext_dims(), check_identity()]
    for c in checks:
        out.write(f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f": {c.detail}" if c.detail else "") + "\n")
    return EXIT_OK if all(c.ok for c in checks) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistchar",
        description="Braiding characters and dimensions in twisted graded categories.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "csv", "plain"), default="json")
        p.set_defaults(func=func)
        return p

    p = add("classes", cmd_classes, "conjugacy classes of the symmetric group")
    p.add_argument("m", type=int)

    p = add("character", cmd_character, "braiding character table of V^{tensor m}")
    p.add_argument("--twist", type=_twist, required=True,
                   help="trivial, koszul, parity, or unit:<+1|-1>")
    p.add_argument("--dim", type=parse_dim, required=True, help="e.g. 3, u, 1+2u")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--verify-oracle", action="store_true")

    p = add("extseries", cmd_extseries, "exterior power generating functions")
    p.add_argument("--twist", type=_twist, required=True)
    p.add_argument("--dim", type=parse_dim, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--check-identity", action="store_true")
    p.add_argument("--verify-oracle", action="store_true")

    p = add("chromatic", cmd_chromatic, "chromatic braiding character decision")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stem-orders", type=int, nargs="+")
    p.add_argument("--alpha", type=int, nargs="+")
    p.add_argument("--m", type=int, default=2)

    p = add("count-twists", cmd_count_twists, "number of twisted graded structures")
    p.add_argument("--units", type=int, nargs="+", required=True,
                   help="cyclic orders of the unit group")

    p = add("transchromatic", cmd_transchromatic, "transchromatic component table")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--omega", type=int, choices=(1, -1), required=True)

    p = add("verify", cmd_verify, "run all oracle cross-checks")
    p.add_argument("--max-m", type=int, default=5)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out, err)
    except (EnumerationLimitError, RingMismatchError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
