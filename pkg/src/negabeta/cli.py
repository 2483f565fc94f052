"""Command-line interface: ``negabeta <command> ...``.

Exit codes: 0 success, 2 bad input, 3 write failure, 4 budget exceeded,
5 N-bar mismatch, 6 witness verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import warnings
from itertools import permutations
from typing import List, Optional

from .complexity import b_bar, characteristic_polynomial, construct, witness_word
from .oracle import (
    BudgetExceeded,
    allowed_patterns_integer,
    allowed_patterns_real,
    minus_beta_digits,
    nbar_bruteforce,
    parse_rational,
    verify_witness,
)
from .perm import Permutation, PermutationError, ascents, hat, parse_permutation
from .polynomial import DEFAULT_PRECISION, IntPolynomial
from .segment import classify, nbar, valid_prefixes

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_WRITE = 3
EXIT_BUDGET = 4
EXIT_MISMATCH = 5
EXIT_VERIFY = 6

CSV_COLUMNS = ["perm", "class", "nbar", "bbar", "interval_lo", "interval_hi", "polynomial", "word"]


class UsageError(Exception):
    pass


def precision_from_env() -> int:
    raw = os.environ.get("NEGABETA_PRECISION")
    if raw is None or raw == "":
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"NEGABETA_PRECISION must be an integer, got {raw!r}")
    if not 1 <= value <= 200:
        raise UsageError("NEGABETA_PRECISION must lie in 1..200")
    return value


def analysis_report(pi: Permutation, precision: int) -> dict:
    n = pi.n
    cycle = hat(pi)
    cls = classify(pi)
    report = {
        "perm": str(pi),
        "n": n,
        "hat": str(cycle),
        "ascent_count": ascents(cycle)[1],
        "classification": {
            "kind": cls.kind,
            "corner": cls.corner.value if cls.corner else None,
            "relation": cls.relation,
        },
        "nbar": nbar(pi),
    }
    value = b_bar(pi, precision)
    if n >= 2:
        poly = characteristic_polynomial(pi)
        report["valid_prefixes"] = [str(z) for z in valid_prefixes(pi)]
        report["construction_word"] = str(construct(pi).word)
        m = max(1, math.ceil((n - 1) / 2))
        report["witness"] = {"m": m, "word": str(witness_word(pi, m))}
    else:
        poly = IntPolynomial.x_minus(1)
        report["valid_prefixes"] = []
        report["construction_word"] = None
        report["witness"] = None
    lo, hi = value.interval_text()
    report["polynomial"] = {"text": poly.text(), "coefficients": poly.coefficient_list()}
    report["bbar"] = {
        "decimal": value.decimal(),
        "significant": value.significant(6),
        "interval": [lo, hi],
        "is_one_fallback": value.is_one_fallback,
    }
    return report


def table_rows(n: int, precision: int) -> List[dict]:
    rows = []
    for values in permutations(range(1, n + 1)):
        pi = Permutation(values)
        value = b_bar(pi, precision)
        lo, hi = value.interval_text()
        rows.append(
            {
                "perm": str(pi),
                "class": str(classify(pi)),
                "nbar": nbar(pi),
                "bbar": value.significant(6),
                "interval_lo": lo,
                "interval_hi": hi,
                "polynomial": characteristic_polynomial(pi).text(),
                "word": str(construct(pi).word),
            }
        )
    rows.sort(key=lambda r: (float(r["bbar"]), r["perm"]))
    return rows


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, out: Optional[str]):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise WriteFailure(str(exc)) from exc


class WriteFailure(Exception):
    pass


def cmd_analyze(args) -> int:
    pi = parse_permutation(args.perm)
    report = analysis_report(pi, precision_from_env())
    if args.json:
        sys.stdout.write(_dumps(report))
        return EXIT_OK
    cls = report["classification"]
    lines = [
        f"perm: {report['perm']}",
        f"hat: {report['hat']}",
        f"ascents: {report['ascent_count']}",
        f"class: {cls['kind']}" + (f" {cls['corner'] or cls['relation']}" if cls["kind"] != "regular" else ""),
        f"nbar: {report['nbar']}",
        f"valid prefixes: {' '.join(report['valid_prefixes'])}",
        f"word: {report['construction_word'] or '-'}",
        f"polynomial: {report['polynomial']['text']}",
        f"coefficients: {report['polynomial']['coefficients']}",
        f"bbar: {report['bbar']['significant']} ({report['bbar']['decimal']})",
        f"interval: [{report['bbar']['interval'][0]}, {report['bbar']['interval'][1]}]",
    ]
    if report["bbar"]["is_one_fallback"]:
        lines.append("note: no root >= 1, value 1 by convention")
    if report["witness"]:
        lines.append(f"witness (m={report['witness']['m']}): {report['witness']['word']}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_table(args) -> int:
    if not 2 <= args.len <= args.max_len:
        raise UsageError(f"--len must lie in 2..{args.max_len}")
    rows = table_rows(args.len, precision_from_env())
    if args.format == "json":
        text = _dumps({"len": args.len, "rows": rows})
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if (args.alphabet is None) == (args.beta is None):
        raise UsageError("give exactly one of --alphabet and --beta")
    if args.len < 1:
        raise UsageError("--len must be positive")
    if args.alphabet is not None:
        if args.alphabet < 2:
            raise UsageError("--alphabet must be at least 2")
        found = allowed_patterns_integer(args.alphabet, args.len, args.budget)
    else:
        beta = parse_rational(args.beta)
        if beta <= 1:
            raise UsageError("--beta must exceed 1")
        found = allowed_patterns_real(beta, args.len, sample_budget=args.budget)
    names = found.strings()
    sys.stdout.write(f"count: {len(names)}\n" + "".join(f"{s}\n" for s in names))
    return EXIT_OK


def cmd_nbar_check(args) -> int:
    if args.len < 2:
        raise UsageError("--len must be at least 2")
    agree = 0
    total = 0
    for values in permutations(range(1, args.len + 1)):
        pi = Permutation(values)
        formula = nbar(pi)
        brute = nbar_bruteforce(pi, args.budget)
        total += 1
        ok = formula == brute
        agree += ok
        if args.verbose or not ok:
            sys.stdout.write(f"{pi} formula={formula} oracle={brute} {'ok' if ok else 'MISMATCH'}\n")
    sys.stdout.write(f"{agree}/{total} agree\n")
    return EXIT_OK if agree == total else EXIT_MISMATCH


def cmd_verify(args) -> int:
    pi = parse_permutation(args.perm)
    beta = parse_rational(args.beta)
    if beta <= 1:
        raise UsageError("--beta must exceed 1")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        report = verify_witness(pi, beta, args.m)
    for w in caught:
        sys.stderr.write(f"warning: {w.message}\n")
    sys.stdout.write("\n".join(report.lines()) + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_expansion(args) -> int:
    beta = parse_rational(args.beta)
    if beta <= 1:
        raise UsageError("--beta must exceed 1")
    if args.depth < 1:
        raise UsageError("--depth must be positive")
    digits = minus_beta_digits(beta, args.depth)
    sep = "" if max(digits) < 10 else ","
    sys.stdout.write(sep.join(str(d) for d in digits) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="negabeta", description="Allowed patterns of negative beta-shifts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one permutation")
    p.add_argument("perm")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", help="B-bar for every permutation of a length")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.add_argument("--max-len", type=int, default=7)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="allowed patterns by brute force")
    p.add_argument("--alphabet", type=int)
    p.add_argument("--beta")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--budget", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("nbar-check", help="compare the N-bar formula with the oracle")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--budget", type=int, default=10 ** 6)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_nbar_check)

    p = sub.add_parser("verify", help="exactly check a witness word at beta")
    p.add_argument("perm")
    p.add_argument("--beta", required=True)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expansion", help="digits of the expansion of 1 in base -beta")
    p.add_argument("--beta", required=True)
    p.add_argument("--depth", type=int, default=20)
    p.set_defaults(func=cmd_expansion)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PermutationError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except WriteFailure as exc:
        sys.stderr.write(f"error: cannot write output: {exc}\n")
        return EXIT_WRITE
    except BudgetExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
