"""Command-line front end.

Subcommands: classical, gvector, quantum, enumerate, verify.  Input comes
as a JSON file holding either an explicit exchange matrix or a diagram
orientation by arrows; everything is relabeled to the canonical vertex
order before computing.  Exit codes: 0 success, 1 input or validation
error, 2 verification mismatch.
"""

import argparse
import json
import sys

from .closedform import (
    f_polynomial_closed,
    g_vector_closed,
    quantum_f_polynomial_closed,
)
from .errors import ClusterError
from .exchange import (
    CartanType,
    classify_cartan_type,
    matrix_from_arrows,
    positive_roots,
    relabel_matrix,
)
from .laurent import LaurentPoly
from .oracle import ClusterTable, enumerate_finite_type
from .qtorus import QC, TorusElement
from .verify import SUITES, run_suite

FAMILIES = ("A", "B", "C", "D")


# ---------------------------------------------------------------- input ----


def parse_input(doc):
    """Turn a JSON document into (canonical matrix, CartanType).

    Two shapes are accepted: {"matrix": [[...]]} with an explicit integer
    matrix, or {"cartan_type": "B", "rank": 4, "arrows": [[1,2],...]} with
    1-based (tail, head) pairs covering each diagram edge exactly once.
    """
    if not isinstance(doc, dict):
        raise ValueError("input document must be a JSON object")
    if "matrix" in doc:
        B = doc["matrix"]
        if not (
            isinstance(B, list)
            and B
            and all(isinstance(r, list) and all(isinstance(x, int) for x in r) for r in B)
        ):
            raise ValueError('"matrix" must be a non-empty list of integer rows')
        t, perm = classify_cartan_type(B)
        return relabel_matrix(B, perm), t
    if "cartan_type" in doc:
        fam = doc.get("cartan_type")
        n = doc.get("rank")
        arrows = doc.get("arrows")
        if fam not in FAMILIES:
            raise ValueError(f'"cartan_type" must be one of {FAMILIES}')
        if not isinstance(n, int) or n < 1:
            raise ValueError('"rank" must be a positive integer')
        if not (
            isinstance(arrows, list)
            and all(
                isinstance(a, list) and len(a) == 2 and all(isinstance(x, int) for x in a)
                for a in arrows
            )
        ):
            raise ValueError('"arrows" must be a list of [tail, head] pairs')
        for a in arrows:
            if not all(1 <= x <= n for x in a):
                raise ValueError(f"arrow {a} out of range 1..{n}")
        t = CartanType(fam, n)
        B = matrix_from_arrows(t, [(a - 1, b - 1) for a, b in arrows])
        return B, t
    raise ValueError('input needs either a "matrix" or a "cartan_type"/"rank"/"arrows" form')


def load_input(path: str):
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    return parse_input(doc)


def parse_denominator(text: str, t: CartanType) -> tuple[int, ...]:
    try:
        d = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"--denom must be comma-separated integers, got {text!r}")
    roots = positive_roots(t)
    if len(d) != t.rank or d not in roots:
        listing = "; ".join(",".join(map(str, r)) for r in roots)
        raise ValueError(
            f"{','.join(map(str, d))} is not a positive root of {t.family}_{t.rank}; "
            f"the {len(roots)} valid choices are: {listing}"
        )
    return d


# ------------------------------------------------------------- rendering ----


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def poly_json(F: LaurentPoly) -> dict:
    return {
        "vars": F.nvars,
        "terms": [{"coeff": F.terms[e], "e": list(e)} for e in sorted(F.terms)],
    }


def qc_json(c: QC) -> dict:
    return {"v": [[e, c.terms[e]] for e in sorted(c.terms)]}


def qpoly_json(x: TorusElement) -> dict:
    return {
        "vars": x.torus.n,
        "terms": [{"coeff": qc_json(x.terms[a]), "e": list(a)} for a in sorted(x.terms)],
    }


def table_json(table: ClusterTable) -> list:
    return [
        {
            "F": poly_json(table[d].F),
            "d": list(d),
            "g": list(table[d].g),
            "path": [k + 1 for k in table[d].path],
        }
        for d in table
    ]


def _monomial_text(e, name: str) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 0:
            continue
        parts.append(f"{name}{i + 1}" + (f"^{k}" if k != 1 else ""))
    return "*".join(parts)


def poly_text(F: LaurentPoly) -> str:
    if not F.terms:
        return "0"
    parts = []
    for e in sorted(F.terms, reverse=True):
        c = F.terms[e]
        mono = _monomial_text(e, "u")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


def qc_text(c: QC) -> str:
    """Coefficients live in Z[v, v^-1] with v^2 = q; print in q whenever
    every exponent is even."""
    if not c.terms:
        return "0"
    exps = sorted(c.terms)
    use_q = all(e % 2 == 0 for e in exps)
    parts = []
    for e in exps:
        coeff = c.terms[e]
        sym = e // 2 if use_q else e
        name = "q" if use_q else "v"
        if sym == 0:
            parts.append(str(coeff))
        else:
            power = name if sym == 1 else f"{name}^{sym}"
            parts.append(power if coeff == 1 else f"{coeff}*{power}")
    return " + ".join(parts)


def qpoly_text(x: TorusElement) -> str:
    if not x.terms:
        return "0"
    parts = []
    for a in sorted(x.terms, reverse=True):
        coeff = qc_text(x.terms[a])
        mono = _monomial_text(a, "Z")
        if not mono:
            parts.append(coeff)
        elif coeff == "1":
            parts.append(mono)
        elif len(x.terms[a].terms) > 1:
            parts.append(f"({coeff})*{mono}")
        else:
            parts.append(f"{coeff}*{mono}")
    return " + ".join(parts)


def vector_text(g) -> str:
    return "(" + ", ".join(map(str, g)) + ")"


def table_text(table_rows: list) -> str:
    lines = []
    for row in table_rows:
        lines.append(
            f"d={vector_text(row['d'])}  g={vector_text(row['g'])}  "
            f"F={row['F']}  path={','.join(map(str, row['path'])) or '-'}"
        )
    return "\n".join(lines) if lines else "[]"


def _monomial_latex(e, name: str) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 0:
            continue
        idx = str(i + 1) if i + 1 < 10 else "{" + str(i + 1) + "}"
        parts.append(f"{name}_{idx}" + (f"^{{{k}}}" if k != 1 else ""))
    return "".join(parts)


def poly_latex(F: LaurentPoly) -> str:
    if not F.terms:
        return "0"
    parts = []
    for e in sorted(F.terms, reverse=True):
        c = F.terms[e]
        mono = _monomial_latex(e, "u")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}{mono}")
    return " + ".join(parts)


def qc_latex(c: QC) -> str:
    if not c.terms:
        return "0"
    exps = sorted(c.terms)
    use_q = all(e % 2 == 0 for e in exps)
    parts = []
    for e in exps:
        coeff = c.terms[e]
        sym = e // 2 if use_q else e
        name = "q" if use_q else "v"
        if sym == 0:
            parts.append(str(coeff))
        else:
            power = name if sym == 1 else f"{name}^{{{sym}}}"
            parts.append(power if coeff == 1 else f"{coeff}{power}")
    return " + ".join(parts)


def qpoly_latex(x: TorusElement) -> str:
    if not x.terms:
        return "0"
    parts = []
    for a in sorted(x.terms, reverse=True):
        c = x.terms[a]
        coeff = qc_latex(c)
        mono = _monomial_latex(a, "Z")
        if not mono:
            parts.append(coeff)
        elif coeff == "1":
            parts.append(mono)
        elif len(c.terms) > 1:
            parts.append(f"({coeff}){mono}")
        else:
            parts.append(f"{coeff}{mono}")
    return " + ".join(parts)


def table_latex(table_rows: list) -> str:
    if not table_rows:
        return "[]"
    lines = [r"\begin{aligned}"]
    for row in table_rows:
        d = "(" + ",".join(map(str, row["d"])) + ")"
        lines.append(f"F_{{{d}}} &= {row['F']} \\\\")
    lines.append(r"\end{aligned}")
    return "\n".join(lines)


def verify_text(report: dict) -> str:
    lines = []
    for s in report["suites"]:
        lines.append(f"suite {s['suite']}: {s['cases']} cases")
    if report["failures"]:
        lines.append(f"FAIL: {len(report['failures'])} mismatches")
        c = report["minimal_counterexample"]
        lines.append(
            "minimal counterexample: "
            f"type={c['type']} rank={c['rank']} orientation={c['orientation']} "
            f"d={c['d']} e={c['e']} ({c['detail']})"
        )
    else:
        lines.append(f"PASS: {report['total_cases']} cases, no mismatches")
    return "\n".join(lines)


# ------------------------------------------------------------- commands ----


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; this artifact reserves 2 for
    verification mismatches, so usage errors are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="clusterfp", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, denom=True):
        sp.add_argument("--input", required=True, metavar="PATH", help="JSON input file")
        if denom:
            sp.add_argument(
                "--denom", required=True, metavar="LIST", help="comma-separated root coordinates"
            )
        sp.add_argument("--format", choices=("json", "text", "latex"), default="json")

    sp = sub.add_parser("classical", help="one F-polynomial")
    add_common(sp)
    sp.add_argument("--method", choices=("closed", "oracle"), default="closed")

    sp = sub.add_parser("gvector", help="one degree vector")
    add_common(sp)
    sp.add_argument("--method", choices=("closed", "oracle"), default="closed")

    sp = sub.add_parser("quantum", help="one quantum F-polynomial")
    add_common(sp)
    sp.add_argument("--d-scale", type=int, required=True, metavar="INT")
    sp.add_argument("--method", choices=("closed", "oracle"), default="closed")

    sp = sub.add_parser("enumerate", help="every cluster variable")
    add_common(sp, denom=False)

    sp = sub.add_parser("verify", help="differential verification suites")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--max-rank", type=int, default=4, metavar="INT")
    sp.add_argument("--format", choices=("json", "text", "latex"), default="json")
    return p


def _meta(t: CartanType, method: str) -> dict:
    return {"type": t.family, "rank": t.rank, "method": method}


def run(args) -> tuple[int, str]:
    """Execute a parsed request; returns (exit code, rendered output)."""
    fmt = args.format
    if args.command == "verify":
        report = run_suite(args.suite, args.max_rank)
        code = 2 if report["failures"] else 0
        if fmt == "json":
            return code, canonical_json(report)
        return code, verify_text(report) + "\n"

    B, t = load_input(args.input)

    if args.command == "enumerate":
        rows = table_json(enumerate_finite_type(B))
        if fmt == "json":
            return 0, canonical_json(rows)
        for row in rows:
            row["F"] = (poly_text if fmt == "text" else poly_latex)(
                LaurentPoly(t.rank, {tuple(term["e"]): term["coeff"] for term in row["F"]["terms"]})
            )
        body = table_text(rows) if fmt == "text" else table_latex(rows)
        return 0, body + "\n"

    d = parse_denominator(args.denom, t)

    if args.command == "classical":
        if args.method == "oracle":
            F = enumerate_finite_type(B)[d].F
        else:
            F = f_polynomial_closed(B, t, d)
        if fmt == "json":
            doc = {**_meta(t, args.method), "d": list(d), "F": poly_json(F)}
            return 0, canonical_json(doc)
        return 0, (poly_text(F) if fmt == "text" else poly_latex(F)) + "\n"

    if args.command == "gvector":
        if args.method == "oracle":
            g = enumerate_finite_type(B)[d].g
        else:
            g = g_vector_closed(B, d)
        if fmt == "json":
            doc = {**_meta(t, args.method), "d": list(d), "g": list(g)}
            return 0, canonical_json(doc)
        return 0, vector_text(g) + "\n"

    if args.command == "quantum":
        if args.method != "closed":
            raise ValueError("quantum supports only --method closed")
        if args.d_scale < 1:
            raise ValueError("--d-scale must be a positive integer")
        P = quantum_f_polynomial_closed(B, t, args.d_scale, d)
        if fmt == "json":
            doc = {
                **_meta(t, "closed"),
                "d": list(d),
                "d_scale": args.d_scale,
                "F": qpoly_json(P),
            }
            return 0, canonical_json(doc)
        return 0, (qpoly_text(P) if fmt == "text" else qpoly_latex(P)) + "\n"

    raise ValueError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        code, out = run(args)
    except (ClusterError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return code


def entry() -> None:
    sys.exit(main())
