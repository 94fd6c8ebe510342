"""Tests for the embedded exceptional-type invariant tables."""

from __future__ import annotations

import pytest

from weylsymbols.errors import DomainError, NotFoundError
from weylsymbols.exceptional import (
    EXPECTED_COUNTS,
    GROUPS,
    OMEGA_ORDERS,
    STATUS_AMBIGUOUS,
    STATUS_FAIL,
    STATUS_PASS,
    STATUS_UNCHECKED,
    load_tables,
    lookup,
    validate_tables,
)


def test_row_counts():
    tables = load_tables()
    assert {g: len(rows) for g, rows in tables.items()} == {
        "G2": 5,
        "F4": 16,
        "E6": 21,
        "E7": 45,
        "E8": 70,
    }
    assert EXPECTED_COUNTS == {g: len(tables[g]) for g in GROUPS}


def test_spot_values():
    row = lookup("F4", "12", 4)
    assert (row.a, row.a_prime) == (24, 1)
    assert (row.witness_J, row.witness_E1) == ("F4", "12")

    row = lookup("G2", "2", 1)
    assert row.a == 6
    assert (row.witness_J, row.witness_E1) == ("G2", "2")

    row = lookup("E8", "4480_y", 16)
    assert row.a == 120
    assert (row.witness_J, row.witness_E1) == ("E8", "4480_y")

    # dominant symmetry orders at the top of each table
    assert lookup("G2", "1", 0).a == 1
    assert lookup("E6", "80_s", 7).a == 6
    assert lookup("E7", "315'_a", 7).a == 6
    assert lookup("E7", "315'_a", 7).a_prime == 2


def test_lookup_errors():
    with pytest.raises(DomainError):
        lookup("H4", "1", 0)
    with pytest.raises(NotFoundError):
        lookup("G2", "3", 0)
    with pytest.raises(NotFoundError):
        lookup("E8", "4480_y", 17)


def test_keys_are_unique_per_group():
    for group, rows in load_tables().items():
        keys = [(r.rho_name, r.bbar) for r in rows]
        assert len(keys) == len(set(keys)), group


def test_a_prime_respects_the_automorphism_order():
    for group, rows in load_tables().items():
        omega = OMEGA_ORDERS[group]
        for row in rows:
            assert row.a >= 1
            assert omega % row.a_prime == 0
            if omega == 1:
                assert row.a_prime == 1
    orders = {g: {r.a_prime for r in load_tables()[g]} for g in GROUPS}
    assert orders["E6"] == {1, 3}
    assert orders["E7"] == {1, 2}
    assert orders["E8"] == {1}


def test_flagged_rows_are_exactly_the_source_anomalies():
    flagged = {
        (r.group, r.rho_name, r.bbar)
        for rows in load_tables().values()
        for r in rows
        if r.transcription_flags
    }
    assert flagged == {
        ("F4", "8", 3),
        ("F4", "8'", 3),
        ("F4", "8", 9),
        ("F4", "8'", 9),
        ("E7", "378'_a", 9),
        ("E7", "210_b", 10),
        ("E7", "210_b", 13),
        ("E7", "378'_a", 14),
        ("E7", "168'_a", 21),
        ("E8", "1400_z", 7),
        ("E8", "1400_z", 11),
        ("E8", "700'_x", 28),
        ("E8", "1400'_z", 29),
        ("E8", "525'_x", 36),
        ("E8", "1400'_z", 37),
        ("E8", "700'_x", 42),
    }


def test_raw_layer_preserves_the_anomalies():
    assert lookup("E7", "168'_a", 21).raw.bbar == "(21"
    assert lookup("E8", "525'_x", 36).raw.witness.endswith("))")
    # the curated suffix never leaks into the raw cells
    assert lookup("F4", "8'", 3).raw.rho == "8"
    assert lookup("F4", "8'", 9).raw.rho == "8"
    assert lookup("F4", "8'", 3).witness_J == "A2'"
    assert lookup("F4", "8'", 9).witness_J == "B4"


def test_validation_is_green():
    report = validate_tables()
    assert report.ok()
    assert report.schema_findings == ()
    assert len(report.checks) == sum(EXPECTED_COUNTS.values())
    assert report.status_counts() == {
        STATUS_PASS: 68,
        STATUS_FAIL: 0,
        STATUS_UNCHECKED: 89,
        STATUS_AMBIGUOUS: 0,
    }


def test_witness_checks_land_where_expected():
    report = validate_tables()
    by_key = {(c.group, c.rho_name, c.bbar): c for c in report.checks}

    assert by_key[("F4", "4", 7)].status == STATUS_PASS  # (A3A1, eps)
    assert by_key[("E7", "35_b", 4)].status == STATUS_PASS  # (A7, 14)
    assert by_key[("E8", "4536_z", 13)].status == STATUS_PASS  # (D8, 560)
    assert by_key[("E8", "4536_z", 13)].detail == "f = 2"
    assert by_key[("E7", "189'_b", 5)].detail == "f = 2"  # eps x 8 x eps
    assert by_key[("G2", "2", 1)].status == STATUS_UNCHECKED
    assert by_key[("E8", "4480_y", 16)].status == STATUS_UNCHECKED

    # mixed exceptional-classical products stay unchecked
    assert by_key[("E8", "560_z", 5)].status == STATUS_UNCHECKED


def test_rows_serialize_with_the_contract_fields():
    blob = lookup("E6", "30_p", 3).to_json()
    assert set(blob) == {
        "group",
        "rho_name",
        "bbar",
        "a",
        "a_prime",
        "witness_J",
        "witness_E1",
        "transcription_flags",
        "raw",
    }
    assert blob["a"] == 2 and blob["a_prime"] == 3
    assert set(blob["raw"]) == {"rho", "bbar", "a_times_a_prime", "witness"}

    report_blob = validate_tables().to_json()
    assert set(report_blob) == {"ok", "schema_findings", "status_counts", "checks"}
    assert report_blob["ok"] is True
