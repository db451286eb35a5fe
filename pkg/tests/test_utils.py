import pandas as pd

from src.core.words import Mask
from src.utils.history import (
    format_verify_history, format_verify_statistics, get_verify_statistics, load_verify_history,
    save_verify_run, search_verify_runs,
)
from src.utils.utils import format_frame, format_table, status_mark
from src.utils.validators import (
    validate_block_parameters, validate_coding, validate_depth, validate_deviation, validate_mask,
    validate_offset, validate_stride,
)

CUBE_MASK = Mask("", "F0")


def test_scalar_validators():
    assert validate_stride(2)[0]
    assert not validate_stride(0)[0]
    assert not validate_stride(True)[0]
    assert validate_offset(0)[0]
    assert not validate_offset(-1)[0]
    assert validate_deviation("0110")[0]
    assert not validate_deviation("012")[0]
    assert validate_depth(24)[0]
    assert not validate_depth(25)[0]
    assert not validate_depth(-1)[0]


def test_mask_and_coding_validators():
    assert validate_mask(CUBE_MASK)[0]
    assert not validate_mask(Mask("FF", "0"))[0]
    assert validate_coding(CUBE_MASK, 1, 4)[0]
    assert not validate_coding(CUBE_MASK, 0, 2)[0]


def test_block_parameter_report():
    errors, warnings = validate_block_parameters("fan", stride=0, offset=0, dev="")
    assert errors == ["Stride: Stride must be at least 1"]
    assert warnings == []
    errors, _ = validate_block_parameters("fanarray", mask=CUBE_MASK, start=0, step=2)
    assert len(errors) == 1 and errors[0].startswith("Coding:")
    errors, _ = validate_block_parameters("hexagon")
    assert errors == ["Unknown block kind 'hexagon'"]


def test_text_reports():
    assert status_mark(True) == "✅" and status_mark(False) == "❌"
    table = format_table("lgs", [("hasLeast", True), ("isolated", "fin{~0}")], width=20)
    assert table.splitlines()[1:4] == ["lgs", "=" * 20, "hasLeast  True"]
    frame = format_frame("suites", pd.DataFrame([{"suite": "closure", "failures": 0}]), width=10)
    assert "closure" in frame and frame.endswith("=" * 10)


def _run(suite, passed, failed=()):
    return {"suite": suite, "seeds": 2, "base_seed": 0, "passed": passed,
            "instances": 4, "failures": len(failed),
            "failed_instances": [{"suite": suite, "instance": i} for i in failed]}


def test_verify_history_roundtrip(tmp_path):
    path = str(tmp_path / "data" / "history.json")
    assert load_verify_history(path) == []
    assert format_verify_history(path) == "📭 No verify history found"

    first = save_verify_run(_run("closure", True), path)
    save_verify_run(_run("lgs", False, ["seed 3", "seed 1"]), path)
    assert first["id"] == 1
    assert [r["id"] for r in load_verify_history(path)] == [1, 2]

    assert [r["suite"] for r in search_verify_runs(passed=False, path=path)] == ["lgs"]
    assert len(search_verify_runs(suite="closure", path=path)) == 1

    stats = get_verify_statistics(path)
    assert stats["total_runs"] == 2 and stats["passed"] == 1 and stats["failed"] == 1
    assert stats["failing_seeds"] == {"lgs": ["seed 1", "seed 3"]}
    assert "📚 Verify History:" in format_verify_history(path)


def test_corrupt_history_reads_as_empty(tmp_path):
    path = tmp_path / "history.json"
    path.write_text("{not json")
    assert load_verify_history(str(path)) == []


def test_verify_statistics_table(tmp_path):
    path = str(tmp_path / "history.json")
    assert format_verify_statistics(path) == "📭 No verify history found"
    save_verify_run(_run("oracle", False, ["seed 4"]), path)
    save_verify_run(_run("oracle", True), path)
    table = format_verify_statistics(path)
    assert "Runs: 2" in table and f"{'oracle':<16} 2 run(s)" in table
    assert "❌ oracle: seed 4" in table
    assert format_verify_history(path, runs=[]) == "📭 No verify history found"
