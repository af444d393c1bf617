"""Command-line front end.

Subcommands: generate (word prefixes), complexity (enumerated vs closed
form), richness (defect sweep with closure and injectivity), bispecial
(bispecial factors with expected classification), verify (property suite).

Exit codes: 0 success, 1 mathematical mismatch, 2 usage error.  Output is
text, JSON or CSV; JSON is canonical (sorted keys, exact integers only),
so parsing and re-serialising reproduces it byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import closedform, language, richness, verify
from .wordgen import Params, Word, gtm_prefix

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

CACHE_ENV_VAR = "GTM_CACHE_DIR"


@dataclass
class CommandOutput:
    exit_code: int
    payload: dict
    text: str
    csv_rows: list[list]


def render_word(word: Word, m: int) -> str:
    if m <= 10:
        return "".join(str(k) for k in word)
    return ",".join(str(k) for k in word)


def _payload(params: Params, command: str, results, summary) -> dict:
    return {
        "command": command,
        "params": {
            "b": params.b,
            "m": params.m,
            "q": params.q,
            "periodic": params.periodic,
        },
        "results": results,
        "summary": summary,
    }


def cmd_generate(params: Params, args) -> CommandOutput:
    word = gtm_prefix(params, args.length)
    rendered = render_word(word, params.m)
    payload = _payload(
        params,
        "generate",
        [{"length": args.length, "letters": list(word)}],
        {"ok": True},
    )
    rows: list[list] = [["index", "letter"]]
    rows += [[i, k] for i, k in enumerate(word)]
    return CommandOutput(EXIT_OK, payload, rendered + "\n", rows)


def cmd_complexity(params: Params, args) -> CommandOutput:
    lang = language.get_language(params)
    results = []
    first_mismatch = None
    for n in range(args.max_n + 1):
        counted = lang.complexity(n)
        delta = lang.complexity(n + 1) - counted
        formula = closedform.formula_complexity(params, n)
        match = counted == formula.c and delta == formula.delta_c
        if not match and first_mismatch is None:
            first_mismatch = n
        results.append(
            {
                "n": n,
                "c": counted,
                "delta_c": delta,
                "formula_c": formula.c,
                "formula_delta": formula.delta_c,
                "branch": formula.branch.value,
                "match": match,
            }
        )
    ok = first_mismatch is None
    summary = {"ok": ok, "first_mismatch": first_mismatch}
    payload = _payload(params, "complexity", results, summary)

    lines = [f"complexity of the word with b={params.b} m={params.m} (q={params.q})"]
    lines.append(f"{'n':>5} {'C(n)':>8} {'dC(n)':>8} {'form C':>8} {'form dC':>8}  branch        match")
    for r in results:
        lines.append(
            f"{r['n']:>5} {r['c']:>8} {r['delta_c']:>8} {r['formula_c']:>8} "
            f"{r['formula_delta']:>8}  {r['branch']:<13} {'yes' if r['match'] else 'NO'}"
        )
    lines.append(
        "all rows match the closed form"
        if ok
        else f"MISMATCH: first offending n = {first_mismatch}"
    )
    rows: list[list] = [
        ["n", "c", "delta_c", "formula_c", "formula_delta", "branch", "match"]
    ]
    rows += [
        [r["n"], r["c"], r["delta_c"], r["formula_c"], r["formula_delta"],
         r["branch"], str(r["match"]).lower()]
        for r in results
    ]
    code = EXIT_OK if ok else EXIT_MISMATCH
    return CommandOutput(code, payload, "\n".join(lines) + "\n", rows)


def cmd_richness(params: Params, args) -> CommandOutput:
    report = richness.richness_report(params, args.max_n)
    results = [
        {"n": row.n, "lhs": row.lhs, "rhs": row.rhs, "defect": row.defect}
        for row in report.rows
    ]
    summary = {
        "ok": report.ok,
        "closure_ok": report.closure_ok,
        "injectivity_ok": report.injectivity_ok,
        "all_defects_zero": report.all_defects_zero,
        "periodic": params.periodic,
        "antimorphisms_summed": params.m,
        "verdict": report.verdict,
    }
    payload = _payload(params, "richness", results, summary)

    tag = " (periodic case)" if params.periodic else ""
    lines = [
        f"richness report for b={params.b} m={params.m} (q={params.q}){tag}",
        f"defect(n) = deltaC(n) + 2m - sum over the {params.m} involutive "
        f"antimorphisms of P(n) + P(n+1)",
        f"{'n':>5} {'lhs':>8} {'rhs':>8} {'defect':>8}",
    ]
    for row in report.rows:
        lines.append(f"{row.n:>5} {row.lhs:>8} {row.rhs:>8} {row.defect:>8}")
    lines.append(f"closure under the {2 * params.m} group elements: "
                 f"{'ok' if report.closure_ok else 'FAIL'}")
    lines.append(f"injectivity of the action on non-empty factors: "
                 f"{'ok' if report.injectivity_ok else 'FAIL'}")
    lines.append(f"verdict: {report.verdict}{tag}")
    rows: list[list] = [["n", "lhs", "rhs", "defect"]]
    rows += [[row.n, row.lhs, row.rhs, row.defect] for row in report.rows]
    code = EXIT_OK if report.ok else EXIT_MISMATCH
    return CommandOutput(code, payload, "\n".join(lines) + "\n", rows)


def cmd_bispecial(params: Params, args) -> CommandOutput:
    lang = language.get_language(params)
    if args.length is not None:
        lengths = [args.length]
    else:
        lengths = list(range(1, args.max_n + 1))
    results = []
    mismatches = 0
    for n in lengths:
        expected = (
            None if params.periodic else verify.expected_short_bispecial(params.b, n)
        )
        for rec in lang.bispecials(n):
            entry = {
                "n": n,
                "word": render_word(rec.word, params.m),
                "bilateral_order": rec.bilateral_order,
                "theta": None if rec.theta is None else str(rec.theta),
                "pext_count": rec.pext_count,
                "expected_order": None if expected is None else expected[0],
                "expected_pext": None if expected is None else expected[1],
            }
            if expected is None:
                entry["match"] = None
            else:
                entry["match"] = (rec.bilateral_order, rec.pext_count) == expected
                if not entry["match"]:
                    mismatches += 1
            results.append(entry)
    ok = mismatches == 0
    summary = {"ok": ok, "mismatches": mismatches, "records": len(results)}
    payload = _payload(params, "bispecial", results, summary)

    lines = [f"bispecial factors for b={params.b} m={params.m}"]
    lines.append(f"{'n':>4}  {'word':<20} {'order':>6} {'theta':>8} {'pext':>5}  expected  match")
    for r in results:
        if r["expected_order"] is None:
            expect = "-"
            match = "-"
        else:
            expect = f"({r['expected_order']}, {r['expected_pext']})"
            match = "yes" if r["match"] else "NO"
        theta = r["theta"] if r["theta"] is not None else "-"
        pext = r["pext_count"] if r["pext_count"] is not None else "-"
        lines.append(
            f"{r['n']:>4}  {r['word']:<20} {r['bilateral_order']:>6} "
            f"{theta:>8} {pext:>5}  {expect:<9} {match}"
        )
    lines.append(
        f"{len(results)} records, {mismatches} classification mismatches"
    )
    rows: list[list] = [
        ["n", "word", "bilateral_order", "theta", "pext_count",
         "expected_order", "expected_pext", "match"]
    ]
    for r in results:
        rows.append([
            r["n"], r["word"], r["bilateral_order"],
            r["theta"] if r["theta"] is not None else "",
            r["pext_count"] if r["pext_count"] is not None else "",
            r["expected_order"] if r["expected_order"] is not None else "",
            r["expected_pext"] if r["expected_pext"] is not None else "",
            "" if r["match"] is None else str(r["match"]).lower(),
        ])
    code = EXIT_OK if ok else EXIT_MISMATCH
    return CommandOutput(code, payload, "\n".join(lines) + "\n", rows)


def cmd_verify(params: Params, args) -> CommandOutput:
    kwargs = {}
    if args.max_n is not None:
        kwargs["eq_n_max"] = args.max_n
    checks = verify.run_property_suite(params, **kwargs)
    results = [{"check": c.name, "ok": c.ok, "detail": c.detail} for c in checks]
    failed = [c.name for c in checks if not c.ok]
    summary = {"ok": not failed, "failed": failed}
    payload = _payload(params, "verify", results, summary)

    lines = [f"property suite for b={params.b} m={params.m} (q={params.q})"]
    for c in checks:
        lines.append(f"{'ok  ' if c.ok else 'FAIL'} {c.name}: {c.detail}")
    lines.append(
        "all checks passed" if not failed else f"failed: {', '.join(failed)}"
    )
    rows: list[list] = [["check", "ok", "detail"]]
    rows += [[c.name, str(c.ok).lower(), c.detail] for c in checks]
    code = EXIT_OK if not failed else EXIT_MISMATCH
    return CommandOutput(code, payload, "\n".join(lines) + "\n", rows)


HANDLERS = {
    "generate": cmd_generate,
    "complexity": cmd_complexity,
    "richness": cmd_richness,
    "bispecial": cmd_bispecial,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-b", "--base", type=int, required=True, help="base, at least 2")
    common.add_argument("-m", "--modulus", type=int, required=True, help="modulus, at least 1")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text",
                        help="output format (default: text)")
    common.add_argument("--output", type=Path, default=None,
                        help="write the report to this file instead of stdout")
    common.add_argument("--cache-dir", type=Path, default=None,
                        help=f"language-level cache directory (default: ${CACHE_ENV_VAR})")
    common.add_argument("--no-cache", action="store_true",
                        help="disable the on-disk level cache")

    parser = argparse.ArgumentParser(
        prog="gtm",
        description="Generalized Thue-Morse words: generation, factor "
        "complexity, dihedral richness, bispecial factors, property checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common],
                       help="print a prefix of the word")
    p.add_argument("-n", "--length", type=int, required=True,
                   help="number of letters to generate")

    p = sub.add_parser("complexity", parents=[common],
                       help="enumerated complexity against the closed form; "
                            "CSV columns: n,c,delta_c,formula_c,formula_delta,branch,match")
    p.add_argument("--max-n", type=int, required=True, help="largest length")

    p = sub.add_parser("richness", parents=[common],
                       help="richness defects with closure and injectivity; "
                            "CSV columns: n,lhs,rhs,defect")
    p.add_argument("--max-n", type=int, required=True, help="largest length")

    p = sub.add_parser("bispecial", parents=[common],
                       help="bispecial factors with expected classification; "
                            "CSV columns: n,word,bilateral_order,theta,pext_count,"
                            "expected_order,expected_pext,match")
    p.add_argument("-n", "--length", type=int, default=None,
                   help="single factor length")
    p.add_argument("--max-n", type=int, default=None,
                   help="all lengths from 1 to this bound")

    p = sub.add_parser("verify", parents=[common],
                       help="run the structural property suite; "
                            "CSV columns: check,ok,detail")
    p.add_argument("--max-n", type=int, default=None,
                   help="override the second-difference sweep bound (default 40)")

    return parser


def _render(out: CommandOutput, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(out.csv_rows)
        return buffer.getvalue()
    return out.text


def _validate(parser: argparse.ArgumentParser, args) -> str | None:
    if args.base < 2:
        return f"base must be at least 2, got {args.base}"
    if args.modulus < 1:
        return f"modulus must be at least 1, got {args.modulus}"
    if args.command == "generate" and args.length < 0:
        return "length must be non-negative"
    if args.command in ("complexity", "richness") and args.max_n < 1:
        return "--max-n must be at least 1"
    if args.command == "bispecial":
        if (args.length is None) == (args.max_n is None):
            return "bispecial needs exactly one of -n/--length or --max-n"
        if args.length is not None and args.length < 1:
            return "length must be at least 1"
        if args.max_n is not None and args.max_n < 1:
            return "--max-n must be at least 1"
    if args.command == "verify" and args.max_n is not None and args.max_n < 1:
        return "--max-n must be at least 1"
    return None


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    problem = _validate(parser, args)
    if problem is not None:
        print(f"gtm: error: {problem}", file=sys.stderr)
        return EXIT_USAGE

    params = Params(args.base, args.modulus)
    language.reset_languages()
    cache_dir = None
    if not args.no_cache:
        if args.cache_dir is not None:
            cache_dir = args.cache_dir
        elif os.environ.get(CACHE_ENV_VAR):
            cache_dir = Path(os.environ[CACHE_ENV_VAR])
    language.get_language(params, cache_dir=cache_dir)

    out = HANDLERS[args.command](params, args)
    rendered = _render(out, args.format)
    if args.output is not None:
        args.output.write_text(rendered)
    else:
        sys.stdout.write(rendered)
    return out.exit_code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
