"""Rendering of results as human text, JSON, CSV and LaTeX.

The canonical machine form of a polynomial result is a flat mapping

    { group, n, r, stratum?, variable: "x",
      coefficients: [ascending integers], degree, euler_char }

which every structured format (json, csv, latex comments aside) carries
losslessly; the human format prints descending powers for reading and
is display-only.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .ratpoly import RatPoly

POLY_FIELDS = ["group", "n", "r", "stratum", "variable", "coefficients", "degree", "euler_char"]
VERIFY_FIELDS = ["n", "r", "q", "raw_count", "orbit_count", "symbolic", "match"]
SELFTEST_FIELDS = ["number", "title", "passed", "seconds", "detail"]


def poly_payload(
    group: str, n: int, r: int, poly: RatPoly, euler: int, stratum: str | None = None
) -> dict[str, Any]:
    """Canonical machine form of one polynomial result."""
    payload: dict[str, Any] = {"group": group, "n": n, "r": r}
    if stratum is not None:
        payload["stratum"] = stratum
    payload.update(
        variable="x",
        coefficients=poly.int_coeffs(),
        degree=poly.degree,
        euler_char=euler,
    )
    return payload


def payload_poly(payload: dict[str, Any]) -> RatPoly:
    """Rebuild the polynomial from a payload's ascending coefficients."""
    return RatPoly(payload["coefficients"])


def taylor_at_one(poly: RatPoly) -> list:
    """Coefficients d_k with poly = sum d_k (x-1)^k, ascending in k."""
    shift = RatPoly.x() - 1
    out = []
    rest = poly
    while not rest.is_zero():
        rest, rem = divmod(rest, shift)
        out.append(rem.coefficient(0))
    return out


def latex_poly(poly: RatPoly) -> str:
    """LaTeX form grouped by powers of (x-1), highest power first."""
    coeffs = taylor_at_one(poly)
    if not coeffs:
        return "0"
    parts: list[str] = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if mag.denominator == 1:
            body = str(mag.numerator)
        else:
            body = rf"\tfrac{{{mag.numerator}}}{{{mag.denominator}}}"
        if k > 0:
            power = "(x-1)" if k == 1 else f"(x-1)^{{{k}}}"
            body = power if body == "1" else body + power
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def _csv_text(fieldnames: list[str], rows: list[dict[str, Any]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _poly_csv_row(payload: dict[str, Any]) -> dict[str, Any]:
    row = dict(payload)
    row.setdefault("stratum", "")
    row["coefficients"] = " ".join(str(c) for c in payload["coefficients"])
    return row


def render_poly_results(payloads: list[dict[str, Any]], fmt: str, euler_only: bool = False) -> str:
    """Render polynomial payloads in the requested output format.

    euler_only drops the polynomial from the human view (the payloads
    still carry it), matching the euler subcommand's contract of
    printing a single integer per query.
    """
    if fmt == "json":
        doc = payloads[0] if len(payloads) == 1 else payloads
        return json.dumps(doc, indent=2)
    if fmt == "csv":
        return _csv_text(POLY_FIELDS, [_poly_csv_row(p) for p in payloads])
    if fmt == "latex":
        lines = []
        for p in payloads:
            label = f"{p['group']}(n={p['n']}, r={p['r']}"
            if p.get("stratum"):
                label += f", stratum {p['stratum']}"
            label += ")"
            lines.append(f"% {label}")
            lines.append(f"$ {latex_poly(payload_poly(p))} $")
        return "\n".join(lines)
    if fmt == "human":
        lines = []
        for p in payloads:
            prefix = f"{p['group']} n={p['n']} r={p['r']}"
            if p.get("stratum"):
                prefix += f" stratum [{p['stratum']}]"
            if euler_only:
                lines.append(f"{prefix}: euler_char = {p['euler_char']}"
                             if len(payloads) > 1 else str(p["euler_char"]))
            elif len(payloads) == 1:
                lines.append(str(payload_poly(p)))
            else:
                lines.append(f"{prefix}: {payload_poly(p)}")
        return "\n".join(lines)
    raise ValueError(f"unknown output format {fmt!r}")


def render_verify(rows: list[dict[str, Any]], status: str, fmt: str) -> str:
    """Render oracle comparison rows plus the overall status."""
    if fmt == "json":
        return json.dumps({"rows": rows, "status": status}, indent=2)
    if fmt == "csv":
        return _csv_text(VERIFY_FIELDS, rows)
    if fmt == "latex":
        body = [r"\begin{tabular}{rrrrrrl}",
                r"n & r & q & raw & orbits & symbolic & match \\"]
        for row in rows:
            body.append(
                f"{row['n']} & {row['r']} & {row['q']} & {row['raw_count']} & "
                f"{row['orbit_count']} & {row['symbolic']} & {row['match']} \\\\"
            )
        body.append(r"\end{tabular}")
        body.append(f"% status: {status}")
        return "\n".join(body)
    if fmt == "human":
        lines = [
            f"n={row['n']} r={row['r']} q={row['q']}: raw={row['raw_count']} "
            f"orbits={row['orbit_count']} symbolic={row['symbolic']} "
            f"{'match' if row['match'] else 'MISMATCH'}"
            for row in rows
        ]
        lines.append(f"status: {status}")
        return "\n".join(lines)
    raise ValueError(f"unknown output format {fmt!r}")


def render_selftest(items: list[dict[str, Any]], fmt: str) -> str:
    """Render the self-check suite outcome, one line per criterion."""
    if fmt == "json":
        return json.dumps({"items": items, "passed": all(i["passed"] for i in items)}, indent=2)
    if fmt == "csv":
        return _csv_text(SELFTEST_FIELDS, items)
    if fmt == "latex":
        body = [r"\begin{tabular}{rlll}"]
        for item in items:
            flag = "pass" if item["passed"] else "fail"
            body.append(f"{item['number']} & {item['title']} & {flag} & {item['seconds']}s \\\\")
        body.append(r"\end{tabular}")
        return "\n".join(body)
    if fmt == "human":
        lines = []
        for item in items:
            flag = "PASS" if item["passed"] else "FAIL"
            line = f"[{flag}] {item['number']:>2}. {item['title']} ({item['seconds']}s)"
            if item["detail"] and not item["passed"]:
                line += f"\n       {item['detail']}"
            lines.append(line)
        total = sum(1 for i in items if i["passed"])
        lines.append(f"{total}/{len(items)} criteria passed")
        return "\n".join(lines)
    raise ValueError(f"unknown output format {fmt!r}")
