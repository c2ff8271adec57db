"""Self-check suite: the package's acceptance criteria as runnable checks.

Each criterion is a function returning (passed, detail); the registry
runs them in order with wall-clock timing and enforces the stated
runtime budgets where a criterion has one.  The CLI selftest subcommand
and the acceptance test suite both call run_criteria, so reviewers and
CI execute the identical checks.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .epolys import (
    GroupKind,
    StratumQuery,
    b_poly,
    b_poly_closed,
    b_poly_series,
    e_gl_stratum,
    e_gl_total,
    e_gl_total_by_pexp,
    e_group,
    euler_char,
)
from .errors import CharvarError
from .fforacle import overall_status, verify_cases
from .golden import first_coeff_mismatch, golden_b_poly, golden_sl3, golden_sl4
from .partitions import (
    Partition,
    enumerate_partitions,
    format_partition,
    parse_partition,
)
from .plethystic import (
    adams,
    adams_inverse,
    moebius,
    pexp,
    plog,
    plog_closed,
    totient,
)
from .ratpoly import RatPoly
from .series import TruncSeries

X = RatPoly.x()
RANDOM_SEED = 20260823


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float
    detail: str


def _mismatch_text(label: str, transcribed: RatPoly, computed: RatPoly) -> str | None:
    mm = first_coeff_mismatch(transcribed, computed)
    if mm is None:
        return None
    index, left, right = mm
    return (
        f"{label}: first differing coefficient at x^{index}: "
        f"transcribed {left}, computed {right}"
    )


def _criterion_cross_path() -> tuple[bool, str]:
    failures = []
    checks = 0
    for r in (2, 3, 4):
        series = b_poly_series(6, r)
        for n in range(1, 7):
            checks += 1
            if b_poly_closed(n, r) != series[n - 1]:
                failures.append(f"(n={n}, r={r})")
    if failures:
        return False, "series and closed routes differ at " + ", ".join(failures)
    return True, f"{checks} (n, r) pairs agree exactly across both routes"


def _criterion_golden_b() -> tuple[bool, str]:
    failures = []
    checks = 0
    for n in range(1, 5):
        for r in range(2, 6):
            checks += 1
            text = _mismatch_text(
                f"B(n={n}, r={r})", golden_b_poly(n, r - 1), b_poly(n, r)
            )
            if text:
                failures.append(text)
    if failures:
        return False, "; ".join(failures)
    return True, f"{checks} transcribed polynomials match exactly"


def _criterion_golden_sl3() -> tuple[bool, str]:
    failures = []
    for s in range(1, 5):
        pipeline = _e_sl_total(3, s + 1)
        text = _mismatch_text(f"SL(3) s={s}", golden_sl3(s), pipeline)
        if text:
            failures.append(text)
    if failures:
        return False, "; ".join(failures)
    return True, "4 rank values match the transcription exactly"


def _criterion_golden_sl4() -> tuple[bool, str]:
    failures = []
    for s in (1, 2):
        pipeline = _e_sl_total(4, s + 1)
        text = _mismatch_text(f"SL(4) s={s}", golden_sl4(s), pipeline)
        if text:
            failures.append(text)
    if failures:
        return False, "; ".join(failures)
    return True, "2 rank values match the transcription exactly"


def _e_sl_total(n: int, r: int) -> RatPoly:
    return e_group(StratumQuery(GroupKind.SL, n, r))


def _criterion_degree_norm() -> tuple[bool, str]:
    failures = []
    checks = 0
    for r in (2, 3, 4):
        for n in range(1, 9):
            checks += 1
            poly = b_poly(n, r)
            want_deg = n * n * (r - 1) + 1
            if poly.degree != want_deg:
                failures.append(f"deg B({n},{r}) = {poly.degree}, want {want_deg}")
            if poly.leading_coefficient != 1:
                failures.append(f"lead B({n},{r}) = {poly.leading_coefficient}")
            if poly(1) != 0:
                failures.append(f"B({n},{r})(1) = {poly(1)}, want 0")
    if failures:
        return False, "; ".join(failures)
    return True, f"{checks} polynomials have the expected degree, lead 1 and root at 1"


def _criterion_divisibility() -> tuple[bool, str]:
    failures = []
    checks = 0
    for n in range(1, 7):
        for r in (2, 3, 4):
            divisor = (X - 1) ** r
            for m in enumerate_partitions(n):
                checks += 1
                label = f"(n={n}, r={r}, [{format_partition(m)}])"
                stratum = e_gl_stratum(n, r, m)
                if not stratum.is_integral():
                    failures.append(f"{label}: non-integer stratum coefficients")
                    continue
                try:
                    quotient = stratum.exact_div(divisor)
                except CharvarError:
                    failures.append(f"{label}: not divisible by (x-1)^{r}")
                    continue
                if not quotient.is_integral():
                    failures.append(f"{label}: non-integer quotient coefficients")
    if failures:
        return False, "; ".join(failures)
    return True, f"{checks} strata divide exactly with integer quotients"


def _criterion_pexp_identity() -> tuple[bool, str]:
    failures = []
    for r in (2, 3, 4):
        direct = [e_gl_total(n, r) for n in range(1, 7)]
        via_pexp = e_gl_total_by_pexp(6, r)
        for n, (a, b) in enumerate(zip(direct, via_pexp), start=1):
            if a != b:
                failures.append(f"(n={n}, r={r})")
    if failures:
        return False, "totals disagree with the pexp route at " + ", ".join(failures)
    return True, "rectangle-sum totals equal the pexp coefficients for n <= 6, r in 2..4"


def _square_block_divisor(m: Partition) -> int | None:
    """d when m = [d^(n/d)], else None."""
    nonzero = [(j, k) for j, k in enumerate(m.mult, start=1) if k]
    if len(nonzero) != 1:
        return None
    d, k = nonzero[0]
    return d if d * k == m.n else None


def _criterion_euler() -> tuple[bool, str]:
    failures = []
    checks = 0
    for n in range(1, 9):
        for r in range(2, 6):
            checks += 1
            total = euler_char(StratumQuery(GroupKind.SL, n, r))
            want_total = totient(n) * n ** (r - 2)
            if total != want_total:
                failures.append(f"chi SL({n}) r={r}: {total} != {want_total}")
            if euler_char(StratumQuery(GroupKind.GL, n, r)) != 0:
                failures.append(f"chi GL({n}) r={r} total nonzero")
            for m in enumerate_partitions(n):
                checks += 1
                got = euler_char(StratumQuery(GroupKind.SL, n, r, m))
                d = _square_block_divisor(m)
                if d is None:
                    want = 0
                else:
                    want = moebius(d) * n ** (r - 1) // d
                if got != want:
                    failures.append(
                        f"chi SL({n}) r={r} [{format_partition(m)}]: {got} != {want}"
                    )
                if euler_char(StratumQuery(GroupKind.GL, n, r, m)) != 0:
                    failures.append(
                        f"chi GL({n}) r={r} [{format_partition(m)}] nonzero"
                    )
    if failures:
        return False, "; ".join(failures[:6])
    return True, f"{checks} Euler values match the totient/moebius laws exactly"


def _criterion_worked_examples() -> tuple[bool, str]:
    failures = []
    checks = 0
    for r in range(2, 6):
        cases = [
            (4, "1^4", 4 ** (r - 1)),
            (4, "2^2", -2 * 4 ** (r - 2)),
            (4, None, 2 * 4 ** (r - 2)),
        ]
        for p in (2, 3, 5, 7):
            cases.extend(
                [
                    (p, f"1^{p}", p ** (r - 1)),
                    (p, f"{p}", -(p ** (r - 2))),
                    (p, None, (p - 1) * p ** (r - 2)),
                ]
            )
        for n, stratum_text, want in cases:
            checks += 1
            part = None
            if stratum_text is not None:
                part = parse_partition(stratum_text, n)
            got = euler_char(StratumQuery(GroupKind.SL, n, r, part))
            if got != want:
                label = f"[{stratum_text}]" if stratum_text else "total"
                failures.append(f"chi SL({n}) r={r} {label}: {got} != {want}")
    if failures:
        return False, "; ".join(failures)
    return True, f"{checks} worked Euler values match exactly"


ORACLE_CASES: list[tuple[int, int, list[int]]] = [
    (1, 2, [2, 3, 4, 5, 7]),
    (2, 2, [2, 3, 4, 5]),
    (2, 3, [2, 3]),
    (3, 2, [2]),
]


def _criterion_oracle() -> tuple[bool, str]:
    notes = []
    failed = False
    for n, r, qs in ORACLE_CASES:
        rows = verify_cases(n, r, qs)
        status = overall_status(rows)
        bad = [row for row in rows if not row.match]
        if status == "failure":
            failed = True
        for row in bad:
            notes.append(
                f"(n={row.n}, r={row.r}, q={row.q}): "
                f"counted {row.orbit_count}, symbolic {row.symbolic} [{status}]"
            )
    if failed:
        return False, "; ".join(notes)
    if notes:
        return True, "warnings (single characteristic): " + "; ".join(notes)
    total = sum(len(qs) for _, _, qs in ORACLE_CASES)
    return True, f"{total} brute-force counts equal the symbolic values"


def _random_poly(rng: random.Random) -> RatPoly:
    return RatPoly([rng.randint(-9, 9) for _ in range(rng.randint(0, 4))])


def _random_series(rng: random.Random, order: int, head: RatPoly) -> TruncSeries:
    return TruncSeries(order, [head] + [_random_poly(rng) for _ in range(order)])


def _criterion_plethystic_suite() -> tuple[bool, str]:
    rng = random.Random(RANDOM_SEED)
    order = 8
    cases = 200
    for i in range(cases):
        f = _random_series(rng, order, RatPoly.zero())
        g = _random_series(rng, order, RatPoly.zero())
        u = _random_series(rng, order, RatPoly.one())
        if plog(pexp(f)) != f:
            return False, f"plog(pexp(f)) != f at case {i}"
        if pexp(f + g) != pexp(f) * pexp(g):
            return False, f"pexp(f+g) != pexp(f)*pexp(g) at case {i}"
        if adams_inverse(adams(f)) != f or adams(adams_inverse(f)) != f:
            return False, f"adams round trip failed at case {i}"
        if plog(u) != plog_closed(u):
            return False, f"operator plog != partition-sum plog at case {i}"
    return True, f"{cases} random cases passed for each of the four laws"


_CRITERIA: list[tuple[int, str, object, float | None]] = [
    (1, "B-polynomial cross-path equality, n <= 6, r in 2..4", _criterion_cross_path, 60.0),
    (2, "frozen closed forms for B(n, r), n <= 4, r in 2..5", _criterion_golden_b, None),
    (3, "frozen SL(3) whole-variety closed form, ranks 2..5", _criterion_golden_sl3, None),
    (4, "frozen SL(4) whole-variety closed form, ranks 2..3", _criterion_golden_sl4, None),
    (5, "degree, leading coefficient and vanishing at x=1, n <= 8, r in 2..4", _criterion_degree_norm, None),
    (6, "stratum divisibility by (x-1)^r with integer quotients, n <= 6, r in 2..4", _criterion_divisibility, None),
    (7, "whole-variety series equals pexp of irreducible series, r in 2..4", _criterion_pexp_identity, None),
    (8, "Euler characteristic laws over all strata, n <= 8, r in 2..5", _criterion_euler, None),
    (9, "worked Euler values for n=4 and prime n in {2,3,5,7}", _criterion_worked_examples, None),
    (10, "finite-field brute-force oracle envelope", _criterion_oracle, 600.0),
    (11, "plethystic operator laws, 200 random cases each", _criterion_plethystic_suite, None),
]


def criterion_numbers() -> list[int]:
    return [number for number, _, _, _ in _CRITERIA]


def run_criteria(numbers: list[int] | None = None) -> list[CriterionResult]:
    """Run the requested criteria (default: all) in order."""
    wanted = set(numbers) if numbers is not None else None
    if wanted is not None:
        unknown = wanted - set(criterion_numbers())
        if unknown:
            raise CharvarError(f"unknown criteria: {sorted(unknown)}")
    results = []
    for number, title, fn, limit in _CRITERIA:
        if wanted is not None and number not in wanted:
            continue
        start = time.perf_counter()
        passed, detail = fn()
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed > limit:
            passed = False
            detail += f"; runtime {elapsed:.1f}s exceeded the {limit:.0f}s budget"
        results.append(
            CriterionResult(number, title, passed, round(elapsed, 2), detail)
        )
    return results
