"""Command line front end.

    sobolev2d generate --family laguerre --alpha 0 --beta 0 --max-degree 6 --out b.json
    sobolev2d verify --in b.json
    sobolev2d eval --in b.json --degree 2 --index 1 --points pts.csv

Exit codes: 0 success, 1 failed check or internal inconsistency, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from decimal import Context, Decimal
from fractions import Fraction
from pathlib import Path

from .checks import format_table, run_checks
from .document import BasisDocument
from .errors import InvariantViolation, ParameterDomainError
from .product_basis import ProductWeight
from .sobolev import build_basis
from .univariate import KINDS, WeightFamily


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _corner(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"corner must be 'c1,c2', got {text!r}")
    return _rational(parts[0]), _rational(parts[1])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sobolev2d", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="compute a basis and write it as JSON")
    g.add_argument("--family", required=True, choices=KINDS)
    g.add_argument("--alpha", required=True, type=_rational)
    g.add_argument("--beta", required=True, type=_rational)
    g.add_argument("--max-degree", required=True, type=int)
    g.add_argument("--corner", type=_corner, default=None, help="evaluation point 'c1,c2'")
    g.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(1))
    g.add_argument("--out", required=True)
    g.add_argument("--format", choices=["json"], default="json")

    v = sub.add_parser("verify", help="re-derive a stored basis and run the consistency checks")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--oracle-max-degree", type=int, default=6)
    v.add_argument("--lambda-alt", type=_rational, default=Fraction(7))

    e = sub.add_parser("eval", help="evaluate one shifted basis polynomial at points from a CSV file")
    e.add_argument("--in", dest="infile", required=True)
    e.add_argument("--degree", required=True, type=int)
    e.add_argument("--index", required=True, type=int)
    e.add_argument("--points", required=True)
    e.add_argument("--digits", type=int, default=17)
    e.add_argument("--out", default=None, help="CSV output file (default: stdout)")
    return ap


def cmd_generate(args) -> int:
    if args.max_degree < 1:
        raise UsageError(f"--max-degree must be >= 1, got {args.max_degree}")
    pw = ProductWeight(WeightFamily(args.family, args.alpha), WeightFamily(args.family, args.beta), args.corner)
    doc = BasisDocument.from_basis(build_basis(pw, args.max_degree, args.lam))
    Path(args.out).write_text(doc.dumps(), encoding="utf-8")
    print(f"wrote {args.out}")
    return 0


def _load(path: str) -> BasisDocument:
    try:
        return BasisDocument.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValueError, KeyError, TypeError, IndexError) as exc:
        raise UsageError(f"cannot read basis document {path}: {exc}") from exc


def cmd_verify(args) -> int:
    doc = _load(args.infile)
    if args.oracle_max_degree < 1:
        raise UsageError("--oracle-max-degree must be >= 1")
    try:
        results = run_checks(doc, args.oracle_max_degree, args.lambda_alt)
    except IndexError as exc:
        raise UsageError(f"document is missing degree records: {exc}") from exc
    print(format_table(results))
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"{len(failed)} check(s) failed; first: {failed[0].name}: {failed[0].witness}")
        return 1
    print("all checks passed")
    return 0


def format_value(value: Fraction, digits: int) -> str:
    """Decimal rendering of ``value`` rounded to ``digits`` significant digits."""
    if value == 0:
        return "0"
    d = Context(prec=digits).divide(Decimal(value.numerator), Decimal(value.denominator))
    return format(d, "f")


def read_points(path: str) -> list[tuple[str, str]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read points file {path}: {exc}") from exc
    pts = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), 1):
        if not row or all(not c.strip() for c in row):
            continue
        if lineno == 1 and [c.strip().lower() for c in row] == ["x", "y"]:
            continue
        if len(row) != 2:
            raise UsageError(f"{path}:{lineno}: expected 'x,y', got {row}")
        try:
            Fraction(row[0].strip()), Fraction(row[1].strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"{path}:{lineno}: malformed point {row}") from exc
        pts.append((row[0].strip(), row[1].strip()))
    return pts


def cmd_eval(args) -> int:
    doc = _load(args.infile)
    n, k = args.degree, args.index
    if not (0 <= n <= doc.max_degree and 0 <= k <= n):
        raise UsageError(f"(degree, index) = ({n}, {k}) out of range for max degree {doc.max_degree}")
    if args.digits < 1:
        raise UsageError("--digits must be >= 1")
    poly = doc.shifted(n, k)
    pts = read_points(args.points)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "y", "value"])
    for xs, ys in pts:
        w.writerow([xs, ys, format_value(poly(Fraction(xs), Fraction(ys)), args.digits)])
    if args.out:
        Path(args.out).write_text(buf.getvalue(), encoding="utf-8")
    else:
        sys.stdout.write(buf.getvalue())
    return 0


COMMANDS = {"generate": cmd_generate, "verify": cmd_verify, "eval": cmd_eval}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParameterDomainError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
