"""Tests for the shared compute layer behind the CLI and the service."""

import pytest

from charvar.errors import CharvarError
from charvar.queries import (
    compute_epoly,
    compute_selftest,
    compute_table,
    compute_verify,
    thread_count,
)


class TestComputeEpoly:
    def test_whole_variety_payload(self):
        payload = compute_epoly("sl", 2, 2)
        assert payload["coefficients"] == [0, 0, 0, 1]
        assert payload["degree"] == 3
        assert payload["euler_char"] == 1
        assert "stratum" not in payload

    def test_stratum_payload_normalises_expression(self):
        payload = compute_epoly("sl", 2, 2, "1 1")
        assert payload["stratum"] == "1^2"
        assert payload["coefficients"] == [1, 0, 1]

    def test_group_name_case_insensitive(self):
        assert compute_epoly("SL", 2, 2) == compute_epoly("sl", 2, 2)

    def test_unknown_group(self):
        with pytest.raises(CharvarError):
            compute_epoly("sp", 2, 2)

    def test_bad_stratum_expression(self):
        with pytest.raises(CharvarError):
            compute_epoly("sl", 2, 2, "3")


class TestComputeTable:
    def test_deterministic_order(self):
        payloads = compute_table("sl", 2, 2)
        cells = [(p["n"], p["r"]) for p in payloads]
        assert cells == [(1, 1), (1, 2), (2, 1), (2, 2)]

    def test_per_stratum_rows_follow_their_cell(self):
        payloads = compute_table("gl", 2, 1, per_stratum=True)
        labels = [(p["n"], p["r"], p.get("stratum")) for p in payloads]
        assert labels == [
            (1, 1, None),
            (1, 1, "1"),
            (2, 1, None),
            (2, 1, "2"),
            (2, 1, "1^2"),
        ]

    def test_identical_across_thread_counts(self, monkeypatch):
        monkeypatch.setenv("CHARVAR_THREADS", "1")
        serial = compute_table("sl", 3, 3, per_stratum=True)
        monkeypatch.setenv("CHARVAR_THREADS", "4")
        threaded = compute_table("sl", 3, 3, per_stratum=True)
        assert serial == threaded

    def test_rejects_nonpositive_bounds(self):
        with pytest.raises(CharvarError):
            compute_table("sl", 0, 2)


class TestThreadCount:
    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("CHARVAR_THREADS", "3")
        assert thread_count() == 3

    def test_default_positive(self, monkeypatch):
        monkeypatch.delenv("CHARVAR_THREADS", raising=False)
        assert thread_count() >= 1

    @pytest.mark.parametrize("value", ["0", "-2", "abc", "1.5"])
    def test_bad_values(self, monkeypatch, value):
        monkeypatch.setenv("CHARVAR_THREADS", value)
        with pytest.raises(CharvarError):
            thread_count()


class TestComputeVerify:
    def test_rows_and_status(self):
        rows, status = compute_verify(1, 2, [2, 3])
        assert status == "ok"
        assert rows[0] == {
            "n": 1, "r": 2, "q": 2,
            "raw_count": 1, "orbit_count": 1, "symbolic": 1, "match": True,
        }

    def test_requires_at_least_one_q(self):
        with pytest.raises(CharvarError):
            compute_verify(1, 2, [])


class TestComputeSelftest:
    def test_subset_run(self):
        items = compute_selftest([3])
        assert len(items) == 1
        assert items[0]["number"] == 3
        assert items[0]["passed"] is True
        assert set(items[0]) == {"number", "title", "passed", "seconds", "detail"}

    def test_unknown_number_rejected(self):
        with pytest.raises(CharvarError):
            compute_selftest([99])
