"""Command-line interface.

Computes locally by default; with --server URL each subcommand becomes
a thin client of the HTTP service and renders the returned payloads
with the same formatters, so both modes print identical output.

Exit status: 0 on success, 1 on any validation or computation error
(error name on stderr), 1 when verify reports an overall failure or
when any selftest criterion fails.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any

from .errors import CharvarError
from .formats import render_poly_results, render_selftest, render_verify
from .queries import compute_epoly, compute_selftest, compute_table, compute_verify

FORMATS = ["human", "json", "csv", "latex"]
SERVER_TIMEOUT = 600.0


def _post(server: str, path: str, body: dict[str, Any]) -> Any:
    import httpx

    url = server.rstrip("/") + path
    try:
        response = httpx.post(url, json=body, timeout=SERVER_TIMEOUT)
    except httpx.HTTPError as exc:
        raise CharvarError(f"request to {url} failed: {exc}") from exc
    if response.status_code >= 400:
        try:
            doc = response.json()
        except ValueError:
            doc = {}
        name = doc.get("error", f"HTTP {response.status_code}")
        detail = doc.get("detail", response.text.strip())
        raise CharvarError(f"server rejected the request: {name}: {detail}")
    return response.json()


def _epoly_payload(args: argparse.Namespace) -> dict[str, Any]:
    if args.server:
        body = {"group": args.group, "n": args.n, "r": args.r, "stratum": args.stratum}
        return _post(args.server, "/epoly", body)
    return compute_epoly(args.group, args.n, args.r, args.stratum)


def _cmd_epoly(args: argparse.Namespace) -> int:
    print(render_poly_results([_epoly_payload(args)], args.format))
    return 0


def _cmd_euler(args: argparse.Namespace) -> int:
    print(render_poly_results([_epoly_payload(args)], args.format, euler_only=True))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.server:
        body = {
            "group": args.group,
            "n_max": args.n_max,
            "r_max": args.r_max,
            "per_stratum": args.per_stratum,
        }
        payloads = _post(args.server, "/table", body)
    else:
        payloads = compute_table(args.group, args.n_max, args.r_max, args.per_stratum)
    print(render_poly_results(payloads, args.format))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.server:
        doc = _post(args.server, "/verify", {"n": args.n, "r": args.r, "qs": args.q})
        rows, status = doc["rows"], doc["status"]
    else:
        rows, status = compute_verify(args.n, args.r, args.q)
    print(render_verify(rows, status, args.format))
    return 1 if status == "failure" else 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    if args.server:
        doc = _post(args.server, "/selftest", {"criteria": args.only})
        items = doc["items"]
    else:
        items = compute_selftest(args.only)
    print(render_selftest(items, args.format))
    return 0 if all(item["passed"] for item in items) else 1


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charvar",
        description=(
            "Serre polynomials and Euler characteristics of character "
            "varieties of free groups, with a finite-field cross-check."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=FORMATS, default="human", help="output format"
    )
    common.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="send the query to a running service instead of computing locally",
    )

    selectors = argparse.ArgumentParser(add_help=False)
    selectors.add_argument(
        "--group", required=True, choices=["gl", "sl", "pgl"], help="group family"
    )
    selectors.add_argument("--n", type=int, required=True, help="matrix size")
    selectors.add_argument(
        "--r", type=int, required=True, help="rank of the free group"
    )
    selectors.add_argument(
        "--stratum",
        metavar="EXPR",
        default=None,
        help='polystable stratum in exponent notation, e.g. "1^2 2" (default: whole variety)',
    )

    p = sub.add_parser(
        "epoly",
        parents=[common, selectors],
        help="E-polynomial of one variety or stratum",
    )
    p.set_defaults(handler=_cmd_epoly)

    p = sub.add_parser(
        "euler",
        parents=[common, selectors],
        help="Euler characteristic of one variety or stratum",
    )
    p.set_defaults(handler=_cmd_euler)

    p = sub.add_parser(
        "table",
        parents=[common],
        help="E-polynomials for every (n, r) up to the given bounds",
    )
    p.add_argument(
        "--group", required=True, choices=["gl", "sl", "pgl"], help="group family"
    )
    p.add_argument("--n-max", type=int, required=True, help="largest matrix size")
    p.add_argument("--r-max", type=int, required=True, help="largest rank")
    p.add_argument(
        "--per-stratum",
        action="store_true",
        help="also list every polystable stratum of each variety",
    )
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="compare symbolic counts against finite-field brute force",
    )
    p.add_argument("--n", type=int, required=True, help="matrix size")
    p.add_argument("--r", type=int, required=True, help="rank of the free group")
    p.add_argument(
        "--q",
        type=int,
        action="append",
        required=True,
        help="finite field size (repeatable)",
    )
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "selftest",
        parents=[common],
        help="run the acceptance criteria and report pass/fail per item",
    )
    p.add_argument(
        "--only",
        type=int,
        action="append",
        metavar="N",
        help="run only criterion N (repeatable; default: all)",
    )
    p.set_defaults(handler=_cmd_selftest)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1", help="bind address")
    p.add_argument("--port", type=int, default=8000, help="bind port")
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CharvarError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
