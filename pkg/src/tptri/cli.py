"""Command-line front end.

    tptri gen aigner-catalan --order 4
    tptri check-tp bell --order 7
    tptri check-criteria bell --which thm-2.9 --order 12
    tptri conjecture narayana --order 8 --format json

Exit status is 0 when the check verifies (or holds), 1 when it is refuted
(the witness is printed) and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional, Union

from .arith import QPoly, format_qpoly, format_scalar
from .certify import CRITERIA, CRITERION_ALIASES, check_criterion, is_tp_r
from .errors import OrderCapExceeded, TPError
from .qanalogue import (
    Q_CRITERIA,
    QCoefficientSpec,
    build_q_recursive,
    check_q_criterion,
    is_q_tp,
)
from .specfile import resolve_spec
from .triangles import (
    CoefficientSpec,
    build,
    catalan_like,
    get_spec,
    verify_factorization,
)

COMMANDS = ("gen", "catalan-like", "check-tp", "check-criteria", "check-qtp",
            "factorization", "conjecture")
CONJECTURES = ("eulerian", "narayana")
DEFAULT_MAX_ORDER = 16
EVIDENCE_NOTE = "evidence at finite truncation, not a proof"


@dataclass
class RunConfig:
    command: str
    spec: str
    order: int
    tp_order: Union[int, str] = "all"
    fmt: str = "plain"
    which: Optional[str] = None
    max_order: int = DEFAULT_MAX_ORDER
    workers: Optional[int] = None


class UsageError(TPError):
    pass


def _fmt_entry(x):
    return format_qpoly(x) if isinstance(x, QPoly) else format_scalar(x)


def _csv_lines(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _triangle_text(tri, fmt, meta):
    rows = [[_fmt_entry(x) for x in row] for row in tri.rows]
    if fmt == "json":
        return json.dumps({**meta, "index_origin": tri.index_origin, "rows": rows}) + "\n"
    if fmt == "csv":
        return _csv_lines(rows)
    width = max(len(x) for row in rows for x in row)
    return "".join(" ".join(x.rjust(width) for x in row) + "\n" for row in rows)


def _tp_label(r):
    return "TP" if r == "all" else f"TP_{r}"


def _report_text(report, fmt, meta, order, note=None):
    if fmt == "json":
        payload = {**meta, "report": report.to_dict()}
        if note:
            payload["note"] = note
        return json.dumps(payload) + "\n"
    w = report.witness
    if fmt == "csv":
        header = ["verified", "order_checked", "minors_evaluated", "rows", "cols", "value"]
        row = [str(report.verified).lower(), report.order_checked, report.minors_evaluated,
               "" if w is None else " ".join(map(str, w.rows)),
               "" if w is None else " ".join(map(str, w.cols)),
               "" if w is None else _fmt_entry(w.value)]
        return _csv_lines([header, row])
    label = _tp_label(report.order_checked)
    if report.verified:
        text = f"{label} verified up to order {order} ({report.minors_evaluated} minors evaluated)"
    else:
        text = (f"{label} refuted at order {order}: minor rows {list(w.rows)} cols {list(w.cols)} "
                f"= {_fmt_entry(w.value)} ({report.minors_evaluated} minors evaluated)")
        if w.negative_coefficient is not None:
            text += f"; first negative coefficient at q^{w.negative_coefficient}"
    if note:
        text += f"\n{note}"
    return text + "\n"


def _criterion_text(result, fmt, meta):
    if fmt == "json":
        return json.dumps({**meta, "result": result.to_dict()}) + "\n"
    f = result.first_failure
    if fmt == "csv":
        return _csv_lines([["criterion", "holds", "index", "text"],
                           [result.criterion, str(result.holds).lower(),
                            "" if f is None else f.index, "" if f is None else f.text]])
    if result.holds:
        return f"{result.criterion}: holds\n"
    return f"{result.criterion}: fails at index {f.index} ({f.text})\n"


def _check_cap(config):
    if config.tp_order == "all" and config.order > config.max_order:
        raise OrderCapExceeded(
            f"order {config.order} exceeds the safety cap {config.max_order} "
            f"(raise it with --max-order)"
        )


def _numeric(spec, what):
    if not isinstance(spec, CoefficientSpec):
        raise UsageError(f"{what} needs a tridiagonal (r, s, t) spec, got {spec.name!r}")
    return spec


def _execute(config):
    """Return ``(status, text)`` for a validated config."""
    if config.command == "conjecture":
        if config.spec not in CONJECTURES:
            raise UsageError(f"conjecture must be one of {', '.join(CONJECTURES)}")
        spec = get_spec(config.spec)
    else:
        spec = resolve_spec(config.spec)
    meta = {"command": config.command, "spec": spec.name, "order": config.order}
    fmt = config.fmt

    if config.command == "gen":
        if isinstance(spec, QCoefficientSpec):
            tri = build_q_recursive(spec, config.order)
        else:
            tri = build(spec, config.order)
        return 0, _triangle_text(tri, fmt, meta)

    if config.command == "catalan-like":
        if isinstance(spec, QCoefficientSpec):
            seq = build_q_recursive(spec, config.order).column(0)
        else:
            seq = catalan_like(_numeric(spec, "catalan-like"), config.order)
        values = [_fmt_entry(x) for x in seq]
        if fmt == "json":
            return 0, json.dumps({**meta, "sequence": values}) + "\n"
        if fmt == "csv":
            return 0, _csv_lines([values])
        return 0, " ".join(values) + "\n"

    if config.command == "factorization":
        ok = verify_factorization(_numeric(spec, "factorization"), config.order)
        if fmt == "json":
            return (0 if ok else 1), json.dumps({**meta, "holds": ok}) + "\n"
        return (0 if ok else 1), f"factorization {'holds' if ok else 'FAILS'} up to order {config.order}\n"

    if config.command == "check-criteria":
        if config.which is None:
            raise UsageError("check-criteria needs --which")
        if isinstance(spec, QCoefficientSpec):
            result = check_q_criterion(spec, config.which, config.order)
        else:
            result = check_criterion(_numeric(spec, "check-criteria"), config.which, config.order)
        return (0 if result.holds else 1), _criterion_text(result, fmt, meta)

    if config.command in ("check-tp", "check-qtp", "conjecture"):
        _check_cap(config)
        if config.command == "check-qtp":
            if isinstance(spec, CoefficientSpec):
                spec = QCoefficientSpec.from_numeric(spec)
            elif not isinstance(spec, QCoefficientSpec):
                raise UsageError("check-qtp needs an (r, s, t) spec")
            tri = build_q_recursive(spec, config.order)
            report = is_q_tp(tri.to_array(), config.tp_order, workers=config.workers)
        else:
            if isinstance(spec, QCoefficientSpec):
                raise UsageError("use check-qtp for polynomial specs")
            tri = build(spec, config.order)
            report = is_tp_r(tri.to_array(), config.tp_order, workers=config.workers)
        note = EVIDENCE_NOTE if config.command == "conjecture" else None
        return (0 if report.verified else 1), _report_text(report, fmt, meta, config.order, note)

    raise UsageError(f"unknown command {config.command!r}")


def run(config: RunConfig, out=None, err=None) -> int:
    """Execute one command, writing the report to ``out`` and errors to ``err``."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        if config.order < 0:
            raise UsageError("--order must be nonnegative")
        status, text = _execute(config)
    except (TPError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    out.write(text)
    return status


def _tp_order(text):
    if text == "all":
        return text
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("must be a positive integer or 'all'") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer or 'all'")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tptri",
        description="Exact total positivity checks for recursive triangles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "gen": "print the triangle truncation",
        "catalan-like": "print the first column a(n, 0)",
        "check-tp": "certify TP_r by exhaustive minor enumeration",
        "check-criteria": "evaluate a sufficient condition on the coefficients",
        "check-qtp": "certify coefficientwise TP of the polynomial triangle",
        "factorization": "check the row-shift factorization through the coefficient matrix",
        "conjecture": "enumerate minors of the Eulerian or Narayana triangle",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, help=helps[name])
        if name == "conjecture":
            p.add_argument("spec", choices=CONJECTURES)
        else:
            p.add_argument("spec", help="catalog name or path to a TOML spec file")
        p.add_argument("--order", "-N", type=int, required=True, help="truncation order N")
        p.add_argument("--format", dest="fmt", choices=("plain", "csv", "json"), default="plain")
        if name in ("check-tp", "check-qtp", "conjecture"):
            p.add_argument("--tp-order", "-r", type=_tp_order, default="all",
                           help="largest minor order to check, or 'all' (default)")
            p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                           help=f"safety cap on N when checking all minors (default {DEFAULT_MAX_ORDER})")
            p.add_argument("--workers", type=int, default=None,
                           help="worker processes for minor enumeration")
        if name == "check-criteria":
            ids = list(CRITERIA) + list(CRITERION_ALIASES) + list(Q_CRITERIA)
            p.add_argument("--which", required=True, help=f"one of: {', '.join(ids)}")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        spec=args.spec,
        order=args.order,
        tp_order=getattr(args, "tp_order", "all"),
        fmt=args.fmt,
        which=getattr(args, "which", None),
        max_order=getattr(args, "max_order", DEFAULT_MAX_ORDER),
        workers=getattr(args, "workers", None),
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
