import json

import pytest

from eala import counterexample as cx
from eala import suites
from eala.cli import main
from eala.errors import ConfigError, ReportWriteError
from eala.lie_torus import form_L
from eala.matrix import Matrix2
from eala.report import FAIL, PASS, VerificationReport, emit_report, render
from eala.suites import REGISTRY, SUITES, SuiteConfig, run_suite
from eala.torus import ONE_T, TorusElement
from eala.witness import parse_witness

FIELDS = ["check_id", "status", "box", "samples", "seed", "witness", "duration_ms"]


def test_empty_report_is_empty_array(capsys):
    emit_report([], "json")
    assert capsys.readouterr().out.strip() == "[]"


def test_single_pass_report():
    out = json.loads(render([VerificationReport("torus.relations", PASS, 0, 4, 0)], "json"))
    assert len(out) == 1 and out[0]["status"] == "pass"
    assert list(out[0]) == FIELDS


def test_failing_report_needs_witness():
    with pytest.raises(ValueError):
        VerificationReport("torus.relations", FAIL)
    with pytest.raises(ValueError):
        VerificationReport("torus.relations", "maybe")


def test_text_is_one_line_per_report():
    reports = [VerificationReport("a.b", PASS), VerificationReport("c.d", FAIL, witness="0")]
    assert len(render(reports, "text").splitlines()) == 2


def test_write_error(tmp_path):
    with pytest.raises(ReportWriteError):
        emit_report([], "json", tmp_path / "missing" / "r.json")


def test_cubic_failure_witness_parses():
    bad = Matrix2([[ONE_T, ONE_T], [TorusElement(), -ONE_T]]).scale(3)
    r = cx.ad_cubic_check(bad, 0)
    (x,) = parse_witness(r.witness)
    assert cx.ad_cubic(bad, x)


def test_suite_failure_witness_parses(monkeypatch):
    # a non-antisymmetric stand-in for the cocycle must be caught
    monkeypatch.setattr(suites, "cocycle", lambda x, y: form_L(x, y))
    reports = run_suite(SuiteConfig(box=1, samples=20), ["cocycle"])
    bad = [r for r in reports if r.check_id == "cocycle.antisymmetry"][0]
    assert bad.status == FAIL
    x, y = parse_witness(bad.witness)
    assert form_L(x, y) != -form_L(y, x) or form_L(x, x)


def test_config_validation():
    for cfg in (SuiteConfig(box=-1), SuiteConfig(samples=0), SuiteConfig(seed=-3), SuiteConfig(format="xml")):
        with pytest.raises(ConfigError):
            run_suite(cfg, ["torus"])
    with pytest.raises(ConfigError):
        run_suite(SuiteConfig(), ["nonsense"])
    with pytest.raises(ConfigError):
        run_suite(SuiteConfig(), [])


def test_registry_covers_every_suite():
    assert {suite for suite, _ in REGISTRY.values()} == set(SUITES)


def test_reports_follow_registry_order():
    reports = run_suite(SuiteConfig(box=1, samples=10), ["section", "torus"])
    ids = [r.check_id for r in reports]
    assert ids == [k for k in REGISTRY if k.split(".")[0] in ("torus", "section")]


def test_section_suite_reports_minimal_box():
    reports = run_suite(SuiteConfig(box=0), ["section"])
    assert [(r.check_id, r.status, r.box) for r in reports] == [
        ("section.box0", PASS, 0),
        ("section.solve", PASS, 1),
    ]


def test_cli_exit_codes(tmp_path, capsys, monkeypatch):
    assert main(["torus", "--box", "1", "--samples", "10"]) == 0
    assert main(["torus", "--box", "-1"]) == 2
    assert main(["nope"]) == 2
    assert main(["torus", "--box", "1", "--report", str(tmp_path / "no" / "r.json")]) == 3
    monkeypatch.setattr(suites, "cocycle", lambda x, y: form_L(x, y))
    assert main(["cocycle", "--box", "1", "--samples", "10"]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["torus", "--format", "xml"])
    assert exc.value.code == 2


def test_cli_json_report_file(tmp_path):
    path = tmp_path / "r.json"
    assert main(["section", "--format", "json", "--report", str(path)]) == 0
    data = json.loads(path.read_text())
    assert [d["check_id"] for d in data] == ["section.box0", "section.solve"]
    assert all(list(d) == FIELDS for d in data)
    assert all(d["duration_ms"] == 0 for d in data)


def test_jacobi_json_is_reproducible(tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.json"
        assert main(["jacobi", "--box", "2", "--samples", "50", "--seed", "11", "--format", "json", "--report", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_timing_flag_records_durations():
    reports = run_suite(SuiteConfig(box=1, samples=200, timing=True), ["jacobi"])
    assert any(r.duration_ms > 0 for r in reports)


def test_regenerate_fixture(tmp_path, monkeypatch):
    target = tmp_path / "section.txt"
    monkeypatch.setattr(cx, "fixture_path", lambda: target)
    assert main(["--regenerate-section-fixture"]) == 0
    sec, box = cx.load_section_fixture(target)
    assert box == 1 and sec.is_valid()
    monkeypatch.undo()
    assert target.read_text() == cx.fixture_path().read_text()


@pytest.mark.parametrize("box", [1, 2])
def test_torus_suite_passes_at_small_boxes(box):
    reports = run_suite(SuiteConfig(box=box, samples=50), ["torus"])
    assert all(r.status == PASS for r in reports), [str(r) for r in reports if r.status != PASS]
