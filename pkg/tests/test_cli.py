"""Command-line driver behavior: formats, exit codes, determinism."""

from __future__ import annotations

import contextlib
import dataclasses
import io
import json

import pytest

from weylsymbols import cli
from weylsymbols.cli import lemma_suite, main, oracle_suite
from weylsymbols.engine import verify
from weylsymbols.irreps import FAMILY_A


def _run(argv: list[str]) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(argv)
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue(), err.getvalue()


def test_special_reps_table_lists_the_family():
    code, out, _ = _run(["special-reps", "--family", "B", "--rank", "3"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["label", "x", "b", "f"]
    assert len(lines) == 2 + 6
    assert lines[2].startswith("[0,1,2,3,7;0,1,2,3]")


def test_special_reps_json_carries_schema_version():
    code, out, _ = _run(
        ["special-reps", "--family", "C", "--rank", "3", "--format", "json"]
    )
    assert code == 0
    blob = json.loads(out)
    assert blob["schema_version"] == 1
    assert blob["command"] == "special-reps"
    assert blob["count"] == len(blob["rows"])
    assert all(set(r) == {"label", "x", "b", "f"} for r in blob["rows"])


def test_csv_rows_carry_schema_version():
    code, out, _ = _run(
        ["special-reps", "--family", "B", "--rank", "3", "--format", "csv"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("schema_version,")
    assert all(line.startswith("1,B,3,") for line in lines[1:])


def test_springer_matches_the_divisor_law():
    code, out, _ = _run(
        ["springer", "--family", "A", "--rank", "4", "--format", "json"]
    )
    assert code == 0
    blob = json.loads(out)
    assert blob["count"] == 5
    assert sorted({r["ztilde_over_z"] for r in blob["rows"]}) == [1, 2, 4]
    assert all(r["z"] == 1 and r["uz_over_z"] is None for r in blob["rows"])
    assert all(len(r["partners"]) >= 1 for r in blob["rows"])


def test_j_computes_one_induction():
    spec = json.dumps(
        {
            "embedding": {"kind": "B_SpWq", "p": 2, "q": 2},
            "factors": [
                {"family": "A", "n": 2, "z": [0, 3]},
                {"family": "BC", "n": 2, "z": [0, 1, 2, 4], "zp": [0, 1, 3]},
            ],
        }
    )
    code, out, _ = _run(["j", "--spec", spec, "--format", "json"])
    assert code == 0
    blob = json.loads(out)
    assert blob["image"] == {"family": "BC", "n": 4, "z": [0, 4], "zp": [1]}
    assert blob["b"] == 1
    assert blob["special"] is True


def test_j_reads_a_spec_file(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(
        json.dumps(
            {
                "embedding": {"kind": "A_split", "r": 2, "q": 1},
                "factors": [
                    {"family": "A", "n": 2, "z": [0, 3]},
                    {"family": "A", "n": 1, "z": [1]},
                ],
            }
        )
    )
    code, out, _ = _run(["j", "--spec-file", str(path), "--format", "json"])
    assert code == 0
    assert json.loads(out)["image"]["family"] == "A"


def test_j_rejects_malformed_specs():
    assert _run(["j", "--spec", "{not json"])[0] == 2
    assert _run(["j", "--spec", "{}"])[0] == 2
    spec = json.dumps({"embedding": {"kind": "nope"}, "factors": []})
    assert _run(["j", "--spec", spec])[0] == 2


def test_verify_reports_success_bytes_stably():
    first = _run(["verify", "--family", "B", "--rank", "6", "--format", "json"])
    second = _run(["verify", "--family", "B", "--rank", "6", "--format", "json"])
    assert first[0] == 0
    assert first[1] == second[1]
    blob = json.loads(first[1])
    assert blob["report"]["ok"] is True
    assert blob["report"]["holds_a"] is True
    assert len(blob["report"]["rows"]) == 35


def test_verify_signals_failure_with_exit_one(monkeypatch):
    report = verify("B", 2)
    broken = dataclasses.replace(report, image_in_stratum=False)
    monkeypatch.setattr(cli, "verify", lambda family, n: broken)
    code, out, _ = _run(["verify", "--family", "B", "--rank", "2"])
    assert code == 1
    assert "FAIL" in out


def test_usage_errors_exit_two():
    assert _run([])[0] == 2
    assert _run(["special-reps", "--family", "Z", "--rank", "3"])[0] == 2
    assert _run(["special-reps", "--family", "B"])[0] == 2
    assert _run(["verify", "--family", "D", "--rank", "2"])[0] == 2
    assert _run(["exceptional"])[0] == 2
    assert _run(["exceptional", "--group", "F4", "--rho", "4"])[0] == 2
    assert _run(["j", "--spec", "{}", "--spec-file", "x"])[0] == 2


def test_output_writes_the_payload_to_disk(tmp_path):
    path = tmp_path / "rows.json"
    code, out, _ = _run(
        [
            "springer", "--family", "A", "--rank", "4",
            "--format", "json", "--output", str(path),
        ]
    )
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text())["count"] == 5


def test_exceptional_table_has_the_source_row_count():
    code, out, _ = _run(["exceptional", "--group", "F4", "--format", "table"])
    assert code == 0
    assert len(out.splitlines()) == 2 + 16
    assert out.splitlines()[2].split() == ["1", "0", "1", "(empty,1)"]


def test_exceptional_single_row_lookup():
    code, out, _ = _run(
        [
            "exceptional", "--group", "E7", "--rho", "315'_a",
            "--bbar", "7", "--format", "json",
        ]
    )
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert (row["a"], row["a_prime"]) == (6, 2)
    assert _run(["exceptional", "--group", "E7", "--rho", "nope", "--bbar", "7"])[0] == 2


def test_exceptional_validate_is_green():
    code, out, _ = _run(["exceptional", "--validate"])
    assert code == 0
    assert out.endswith("result: ok\n")
    code, out, _ = _run(["exceptional", "--validate", "--format", "json"])
    assert code == 0
    assert json.loads(out)["report"]["ok"] is True


def test_lemma_suite_is_green_at_small_bounds():
    report = lemma_suite(max_m=4, max_weight=4)
    assert report.ok()
    assert [c.name for c in report.checks] == [
        "signature_parity",
        "interval_parity",
        "endpoint_count",
        "signature_subadditivity",
        "split_enumeration",
        "based_split_enumeration",
        "hat_roundtrip",
        "symmetric_witness_equivalence",
    ]
    assert all(c.cases > 0 for c in report.checks)


def test_oracle_suite_scales_down():
    report = oracle_suite(family=FAMILY_A, max_rank=2)
    assert report.ok()
    assert [b.name for b in report.blocks] == ["b_A", "j_A"]
    assert all(b.cases > 0 for b in report.blocks)


def test_workers_env_is_validated(monkeypatch):
    monkeypatch.setenv("WEYLSYMBOLS_WORKERS", "2")
    code, out, _ = _run(
        ["lemmas", "--max-m", "2", "--max-weight", "2", "--format", "json"]
    )
    assert code == 0
    assert json.loads(out)["workers"] == 2
    monkeypatch.setenv("WEYLSYMBOLS_WORKERS", "0")
    code, _, err = _run(["lemmas", "--max-m", "2", "--max-weight", "2"])
    assert code == 2
    assert "WEYLSYMBOLS_WORKERS" in err


def test_seed_is_echoed_not_consumed(monkeypatch):
    base = _run(["lemmas", "--max-m", "3", "--max-weight", "3", "--format", "json"])
    seeded = _run(
        [
            "lemmas", "--max-m", "3", "--max-weight", "3",
            "--format", "json", "--seed", "7",
        ]
    )
    lhs, rhs = json.loads(base[1]), json.loads(seeded[1])
    assert (lhs["seed"], rhs["seed"]) == (None, 7)
    assert lhs["report"] == rhs["report"]
