"""Shared compute layer behind the CLI and the HTTP service.

Validates raw request fields, runs the pipeline, and returns the flat
payload dictionaries defined in formats; both front ends stay thin.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Any

from .epolys import GroupKind, StratumQuery, e_group, euler_char
from .errors import CharvarError
from .fforacle import overall_status, verify_cases
from .formats import poly_payload
from .partitions import enumerate_partitions, format_partition, parse_partition


def _group_kind(group: str) -> GroupKind:
    try:
        return GroupKind(group.lower())
    except ValueError:
        raise CharvarError(
            f"unknown group {group!r}; expected one of gl, sl, pgl"
        ) from None


def thread_count() -> int:
    """Worker count for table fan-out; CHARVAR_THREADS overrides cpu count."""
    raw = os.environ.get("CHARVAR_THREADS", "").strip()
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise CharvarError("CHARVAR_THREADS must be a positive integer") from None
        if value < 1:
            raise CharvarError("CHARVAR_THREADS must be a positive integer")
        return value
    return os.cpu_count() or 1


def compute_epoly(
    group: str, n: int, r: int, stratum: str | None = None
) -> dict[str, Any]:
    """One polynomial payload for the query; stratum in exponent notation."""
    kind = _group_kind(group)
    part = parse_partition(stratum, n) if stratum is not None else None
    query = StratumQuery(kind, n, r, part)
    poly = e_group(query)
    return poly_payload(
        kind.value, n, r, poly, euler_char(query),
        stratum=format_partition(part) if part is not None else None,
    )


def compute_table(
    group: str, n_max: int, r_max: int, per_stratum: bool = False
) -> list[dict[str, Any]]:
    """Payloads for every (n, r) cell, optionally including each stratum.

    Cells are computed with a thread pool (size from thread_count) but
    assembled in deterministic (n, r, stratum) order regardless of
    completion order.
    """
    kind = _group_kind(group)
    if n_max < 1 or r_max < 1:
        raise CharvarError("n-max and r-max must be >= 1")
    jobs: list[tuple[int, int, str | None]] = []
    for n in range(1, n_max + 1):
        for r in range(1, r_max + 1):
            jobs.append((n, r, None))
            if per_stratum:
                for part in enumerate_partitions(n):
                    jobs.append((n, r, format_partition(part)))

    def cell(job: tuple[int, int, str | None]) -> dict[str, Any]:
        n, r, stratum = job
        return compute_epoly(kind.value, n, r, stratum)

    workers = thread_count()
    if workers == 1:
        return [cell(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(cell, jobs))


def compute_verify(n: int, r: int, qs: list[int]) -> tuple[list[dict[str, Any]], str]:
    """Oracle comparison rows and the aggregated ok/warning/failure status."""
    if not qs:
        raise CharvarError("at least one field size q is required")
    rows = verify_cases(n, r, list(qs))
    status = overall_status(rows)
    dicts = [
        {
            "n": row.n, "r": row.r, "q": row.q,
            "raw_count": row.raw_count, "orbit_count": row.orbit_count,
            "symbolic": row.symbolic, "match": row.match,
        }
        for row in rows
    ]
    return dicts, status


def compute_selftest(numbers: list[int] | None = None) -> list[dict[str, Any]]:
    """Run the acceptance self-checks; see selftest for the registry."""
    from .selftest import run_criteria

    return [
        {
            "number": res.number,
            "title": res.title,
            "passed": res.passed,
            "seconds": res.seconds,
            "detail": res.detail,
        }
        for res in run_criteria(numbers)
    ]
