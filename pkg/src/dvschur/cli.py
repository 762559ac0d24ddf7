"""Command-line front end: weight calculus, chases, table reproduction.

Standard output carries exclusively the report (JSON by default, canonical
key order); progress goes to standard error.  Exit status: 0 on success,
2 when a requested cohomology value is indeterminate, 1 on input errors or
an unannotated mismatch against the published tables.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bwb, ext, koszul, plethysm, reference, ring, schur
from .partitions import canonicalize, format_weight, parse_weight

__all__ = ["main"]


def _rational(x: Fraction) -> str | int:
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _decomposition_json(terms) -> list[dict]:
    return [
        {"weight": list(w), "mult": m} for w, m in sorted(terms.items(), reverse=True)
    ]


def _print_decomposition(terms, fmt: str) -> None:
    ordered = sorted(terms.items(), reverse=True)
    if fmt == "markdown":
        lines = ["| weight | mult |", "|---|---|"]
        lines += [f"| ({format_weight(w)}) | {m} |" for w, m in ordered]
        print("\n".join(lines))
    elif fmt == "csv":
        lines = ["weight,mult"]
        lines += [f"\"{format_weight(w)}\",{m}" for w, m in ordered]
        print("\n".join(lines))
    else:
        print(_dump({"terms": _decomposition_json(terms)}))


def _values_json(values) -> list:
    return [lo if lo == hi else [lo, hi] for lo, hi in values]


def _conflicts_json(result: koszul.ChaseResult) -> list[dict]:
    return [
        {
            "source": list(c.source),
            "target": list(c.target),
            "page": c.page,
            "cap": c.cap,
        }
        for c in result.conflicts
    ]


def _chase_json(q_weight, twist, result: koszul.ChaseResult) -> dict:
    return {
        "q_weight": list(q_weight),
        "twist": twist,
        "values": _values_json(result.values),
        "exact": result.exact,
        "conflicts": _conflicts_json(result),
        "euler": result.euler,
    }


def _ext_json(report: ext.ExtReport, with_summands: bool) -> dict:
    c = report.canonical
    out = {
        "lambda": list(report.lam),
        "canonical": {"m": c.m, "t": c.t, "s": c.s, "twist": c.twist},
        "ext": _values_json(report.ext),
        "exact": report.exact,
        "bounded_degrees": list(report.bounded_degrees()),
        "chi": report.chi_check,
    }
    if with_summands:
        out["summands"] = [
            {
                "weight": list(s.q_weight),
                "twist": s.twist,
                "mult": s.multiplicity,
                "values": _values_json(res.values),
                "conflicts": _conflicts_json(res),
            }
            for s, res in report.summands
        ]
    return out


def _ext_markdown(reports, diff_cells=None) -> str:
    with_diff = diff_cells is not None
    statuses = {}
    for cell in diff_cells or ():
        statuses.setdefault(cell.lam, []).append(cell)
    header = "| lambda | hom | ext1 | ext2 | ext3 | ext4 | chi |"
    if with_diff:
        header += " vs published |"
    lines = [header, "|---|" + "---|" * (6 + with_diff)]

    def show(v):
        return str(v) if not isinstance(v, tuple) else f"[{v[0]},{v[1]}]"

    for report in reports:
        vals = " | ".join(show(report.value(n)) for n in range(5))
        line = f"| ({format_weight(report.lam)}) | {vals} | {report.chi_check} |"
        if with_diff:
            cells = statuses.get(report.lam, [])
            notes = []
            for cell in cells:
                if cell.status == "annotated":
                    notes.append(
                        f"{cell.column}: computed {cell.computed}, printed {cell.printed}"
                    )
                elif cell.status == "mismatch":
                    notes.append(f"{cell.column}: MISMATCH (printed {cell.printed})")
            if notes:
                note = "; ".join(notes)
            elif cells and all(cell.printed is None for cell in cells):
                note = "no published value"
            else:
                note = "matches"
            line += f" {note} |"
        lines.append(line)
    return "\n".join(lines)


def _ext_csv(reports) -> str:
    lines = ["lambda,hom,ext1,ext2,ext3,ext4,chi,exact"]
    for r in reports:
        vals = []
        for n in range(5):
            v = r.value(n)
            vals.append(str(v) if not isinstance(v, tuple) else f"{v[0]}..{v[1]}")
        lines.append(
            f"\"{format_weight(r.lam)}\",{','.join(vals)},{r.chi_check},{r.exact}"
        )
    return "\n".join(lines)


def _koszul_markdown(columns) -> str:
    shown = [sorted(col, reverse=True) for col in columns[:11]]
    height = max(len(col) for col in shown)
    header = "| " + " | ".join(f"p={p}" for p in range(len(shown))) + " |"
    sep = "|" + "---|" * len(shown)
    rows = []
    for i in range(height):
        row = [
            "(" + ",".join(map(str, col[i])) + ")" if i < len(col) else "-"
            for col in shown
        ]
        rows.append("| " + " | ".join(row) + " |")
    return "\n".join([header, sep] + rows)


def _overrides_from_args(args):
    if not getattr(args, "overrides", None):
        return ()
    return koszul.load_overrides(args.overrides)


def _add_common(sub, *, lam=False, mu=False, rank=False, twist=False,
                overrides=False, fmt=False, jobs=False):
    if lam:
        sub.add_argument("--lambda", dest="lam", required=True, metavar="W",
                         help="comma-separated weight, e.g. 3,2,1,0")
    if mu:
        sub.add_argument("--mu", required=True, metavar="W")
    if rank:
        sub.add_argument("--rank", type=int, default=4)
    if twist:
        sub.add_argument("--twist", type=int, default=0,
                         help="power of O(1); negative for down twists")
    if overrides:
        sub.add_argument("--overrides", metavar="PRESET|FILE", default=None)
    if fmt:
        sub.add_argument("--format", dest="fmt", default="json",
                         choices=["json", "markdown", "csv"])
    if jobs:
        sub.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dvschur",
        description="Exact cohomology of Schur functors of the quotient bundle "
        "on the very general Debarre-Voisin fourfold.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("lr", help="Littlewood-Richardson product")
    _add_common(sub, lam=True, mu=True, rank=True, fmt=True)

    sub = subs.add_parser("pieri", help="Pieri rule (tensor by a symmetric power)")
    _add_common(sub, lam=True, rank=True, fmt=True)
    sub.add_argument("--boxes", type=int, required=True, metavar="M")

    sub = subs.add_parser("bwb", help="cohomology of one homogeneous bundle")
    _add_common(sub, lam=True, mu=True)

    sub = subs.add_parser("koszul-table", help="factor table of the resolution")
    _add_common(sub, fmt=True)

    sub = subs.add_parser("cohomology", help="chase a single twisted summand")
    _add_common(sub, lam=True, twist=True, overrides=True)

    sub = subs.add_parser("ext", help="Ext groups of a Schur functor")
    _add_common(sub, lam=True, overrides=True, fmt=True, jobs=True)
    sub.add_argument("--summands", action="store_true",
                     help="include the per-summand breakdown")

    sub = subs.add_parser("table1", help="reproduce the published Ext table")
    _add_common(sub, overrides=True, fmt=True, jobs=True)

    sub = subs.add_parser("sym", help="Ext groups of a symmetric power")
    sub.add_argument("--m", type=int, required=True)
    _add_common(sub, overrides=True, fmt=True, jobs=True)

    sub = subs.add_parser("chern", help="Chern data of a Schur functor")
    _add_common(sub, lam=True)

    sub = subs.add_parser("atomic", help="atomicity test of a Schur functor")
    _add_common(sub, lam=True)

    return parser


def _cmd_lr(args) -> int:
    lam = parse_weight(args.lam)
    mu = parse_weight(args.mu)
    _print_decomposition(schur.lr_coefficients(lam, mu, args.rank), args.fmt)
    return 0


def _cmd_pieri(args) -> int:
    lam = parse_weight(args.lam)
    _print_decomposition(schur.pieri(lam, args.boxes, args.rank), args.fmt)
    return 0


def _cmd_bwb(args) -> int:
    lam = parse_weight(args.lam, 4)
    mu = parse_weight(args.mu, 6)
    res = bwb.bott(lam, mu)
    if res is None:
        print(_dump({"acyclic": True}))
    else:
        print(_dump({
            "acyclic": False,
            "degree": res.degree,
            "weight": list(res.gl10_weight),
            "dim": res.dim,
        }))
    return 0


def _cmd_koszul_table(args) -> int:
    columns = plethysm.koszul_factor_table()
    if args.fmt == "markdown":
        print(_koszul_markdown(columns))
    elif args.fmt == "csv":
        lines = ["p,weight,mult"]
        for p, col in enumerate(columns):
            for w, m in sorted(col.items(), reverse=True):
                lines.append(f"{p},\"{format_weight(w)}\",{m}")
        print("\n".join(lines))
    else:
        mismatched = [
            p
            for p, published in enumerate(reference.koszul_reference())
            if frozenset(columns[p]) != published
            or any(m != 1 for m in columns[p].values())
        ]
        print(_dump({
            "columns": [
                {"p": p, "factors": _decomposition_json(col)}
                for p, col in enumerate(columns)
            ],
            "published_mismatches": mismatched,
        }))
    return 0


def _cmd_cohomology(args) -> int:
    lam = parse_weight(args.lam, 4)
    overrides = _overrides_from_args(args)
    page = koszul.e1_page(koszul.build_complex(lam, -args.twist))
    result = koszul.chase(page, overrides)
    payload = _chase_json(lam, args.twist, result)
    payload["entries"] = [
        {
            "p": p,
            "q": q,
            "total_degree": q - p,
            "dim": entry.dim,
            "constituents": [
                {"weight": list(w), "mult": m} for w, m in entry.constituents
            ],
        }
        for (p, q), entry in page.entries
    ]
    print(_dump(payload))
    return 0 if result.exact else 2


def _cmd_ext(args) -> int:
    lam = parse_weight(args.lam, 4)
    report = ext.ext_groups(lam, _overrides_from_args(args), args.jobs)
    if args.fmt == "markdown":
        print(_ext_markdown([report]))
    elif args.fmt == "csv":
        print(_ext_csv([report]))
    else:
        print(_dump(_ext_json(report, args.summands)))
    return 0 if report.exact else 2


def _cmd_sym(args) -> int:
    report = ext.sym_ext(args.m, _overrides_from_args(args), args.jobs)
    if args.fmt == "markdown":
        print(_ext_markdown([report]))
    elif args.fmt == "csv":
        print(_ext_csv([report]))
    else:
        print(_dump(_ext_json(report, False)))
    return 0 if report.exact else 2


def _cmd_table1(args) -> int:
    overrides = _overrides_from_args(args)
    reports = []
    for row in ext.TABLE1_ROWS:
        print(f"chasing ({format_weight(row)}) ...", file=sys.stderr)
        reports.append(ext.ext_groups(row, overrides, args.jobs))
    cells = reference.diff_against_paper(reports)
    bad = reference.unannotated_mismatches(cells)
    if args.fmt == "markdown":
        print(_ext_markdown(reports, cells))
    elif args.fmt == "csv":
        print(_ext_csv(reports))
    else:
        print(_dump({
            "rows": [_ext_json(r, False) for r in reports],
            "diff": [
                {
                    "lambda": list(c.lam),
                    "column": c.column,
                    "computed": list(c.computed) if isinstance(c.computed, tuple) else c.computed,
                    "printed": c.printed,
                    "status": c.status,
                }
                for c in cells
            ],
            "unannotated_mismatches": len(bad),
        }))
    return 0 if not bad else 1


def _cmd_chern(args) -> int:
    lam = parse_weight(args.lam, 4)
    c = canonicalize(lam)
    ch = ring.ch_oracle(c.weight)
    delta = ring.discriminant(lam)
    report = ring.atomicity_report(lam)
    print(_dump({
        "lambda": list(lam),
        "canonical": {"m": c.m, "t": c.t, "s": c.s, "twist": c.twist},
        "rank": int(ch.one),
        "ch": {
            "0": _rational(ch.one),
            "2": {"h": _rational(ch.h)},
            "4": {"h2": _rational(ch.h2), "ch2": _rational(ch.ch2)},
            "6": {"ch3": _rational(ch.ch3)},
            "8": {"pt": _rational(ch.pt)},
        },
        "delta_as_multiple_of_c2": _rational(ring.c2x_multiple(delta)),
        "xi_integral": _rational(ring.xi_end_integral(lam)),
        "chi": ring.chi_endo(lam),
        "atomic": _atomic_json(report),
    }))
    return 0


def _atomic_json(report: ring.AtomicityReport) -> dict:
    return {
        "lambda": list(report.lam),
        "rank": report.rank,
        "chi": report.chi,
        "ratio": _rational(report.ratio),
        "necessary_test": "pass" if report.necessary_pass else "fail",
        "sym_certificate": (
            "absent" if report.sym_certificate is None
            else "present" if report.sym_certificate else "failed"
        ),
        "atomic": report.atomic,
    }


def _cmd_atomic(args) -> int:
    lam = parse_weight(args.lam, 4)
    print(_dump(_atomic_json(ring.atomicity_report(lam))))
    return 0


_COMMANDS = {
    "lr": _cmd_lr,
    "pieri": _cmd_pieri,
    "bwb": _cmd_bwb,
    "koszul-table": _cmd_koszul_table,
    "cohomology": _cmd_cohomology,
    "ext": _cmd_ext,
    "table1": _cmd_table1,
    "sym": _cmd_sym,
    "chern": _cmd_chern,
    "atomic": _cmd_atomic,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, koszul.OverrideError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
