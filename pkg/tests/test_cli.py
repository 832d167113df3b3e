import json
import subprocess
import sys
from pathlib import Path

import pytest

from quasitoric.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


@pytest.fixture()
def corpus(tmp_path, capsys):
    def write(name, **kwargs):
        argv = ["examples", name, "--dir", str(tmp_path)]
        if "a" in kwargs:
            argv += ["--a", kwargs["a"]]
        report = run_json(capsys, *argv)
        return Path(report["directory"])
    return write


class TestExamples:
    def test_writes_documents(self, corpus, tmp_path):
        directory = corpus("pentagon")
        names = sorted(p.name for p in directory.iterdir())
        assert names == ["polytope.json", "quasilattice.json",
                         "triple.json"]
        for p in directory.iterdir():
            json.loads(p.read_text())

    def test_unknown_name_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["examples", "dodecahedron"])
        assert exc.value.code == 2


class TestWorkflows:
    def test_integer_hirzebruch_charts(self, corpus, capsys):
        directory = corpus("hirzebruch", a="2/1")
        report = run_json(capsys, "charts", str(directory / "triple.json"))
        assert report["quasilattice_is_lattice"] is True
        assert all(c["classification"] in ("trivial", "finite")
                   for c in report["charts"])

    def test_sqrt2_hirzebruch_charts(self, corpus, capsys):
        directory = corpus("hirzebruch", a="sqrt2")
        report = run_json(capsys, "charts", str(directory / "triple.json"))
        assert report["quasilattice_is_lattice"] is False
        assert any(c["classification"] == "infinite"
                   for c in report["charts"])

    def test_pentagon_quasirational(self, corpus, capsys):
        directory = corpus("pentagon")
        report = run_json(capsys, "quasirational",
                          str(directory / "polytope.json"),
                          "--ql", str(directory / "quasilattice.json"))
        assert report["quasirational"] is True
        assert all(r["non_canonical"] for r in report["rays"])

    def test_thick_rhombus_validate(self, corpus, capsys):
        directory = corpus("thick-rhombus")
        report = run_json(capsys, "validate-config",
                          str(directory / "configuration.json"))
        assert report["balanced"] is True
        assert report["odd"] is True
        assert report["p"] == 7 and report["n"] == 2

    def test_augment_pipes_into_gale(self, corpus, capsys, tmp_path):
        directory = corpus("thin-rhombus")
        code, out, err = run(capsys, "augment",
                             str(directory / "triple.json"))
        assert code == 0
        aug_path = tmp_path / "augmented.json"
        aug_path.write_text(out)
        gale = run_json(capsys, "gale", str(aug_path))
        assert gale["m"] == 2
        assert all(len(s) == 5 for s in gale["virtual_chamber"])

    def test_polytopal_verdicts(self, corpus, capsys):
        directory = corpus("twisted-cube")
        report = run_json(capsys, "polytopal",
                          str(directory / "fan.json"))
        assert report["polytopal"] is False
        assert report["offsets"] is None

    def test_check_triple(self, corpus, capsys):
        directory = corpus("square")
        report = run_json(capsys, "check-triple",
                          str(directory / "triple.json"))
        assert report["valid"] is True
        assert report["simple"] is True
        assert report["normals_span_quasilattice"] is True

    def test_analyze_single(self, corpus, capsys):
        directory = corpus("square")
        report = run_json(capsys, "analyze",
                          str(directory / "polytope.json"))
        assert report["facet_count"] == 4
        assert report["is_simple"] is True
        assert report["fan_predicates"]["complete"] is True
        assert report["face_counts"] == {"0": 4, "1": 4, "2": 1}

    def test_analyze_all_directory(self, corpus, capsys):
        directory = corpus("square")
        report = run_json(capsys, "analyze", "--all", str(directory))
        assert len(report["reports"]) == 1
        assert report["reports"][0]["file"] == "polytope.json"

    def test_render_writes_svg(self, corpus, capsys, tmp_path):
        directory = corpus("pentagon")
        out = tmp_path / "pentagon.svg"
        report = run_json(capsys, "render",
                          str(directory / "polytope.json"),
                          "--out", str(out))
        assert report["target"] == "polytope"
        assert out.exists()
        assert out.read_text().startswith("<?xml")


class TestErrorHandling:
    def test_missing_file(self, capsys):
        code, out, err = run(capsys, "charts", "no-such-file.json")
        assert code == 1
        assert out == ""
        lines = err.strip().splitlines()
        assert len(lines) == 1
        assert lines[0].startswith("ParseError:")

    def test_wrong_document_kind(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"mystery": true}')
        code, _, err = run(capsys, "render", str(bad), "--out",
                           str(tmp_path / "x.svg"))
        assert code == 1
        assert err.startswith("ParseError:")

    def test_field_mismatch(self, capsys, tmp_path, corpus):
        pentagon = corpus("pentagon")
        square = corpus("square")
        code, _, err = run(capsys, "quasirational",
                           str(pentagon / "polytope.json"),
                           "--ql", str(square / "quasilattice.json"))
        assert code == 1
        assert err.startswith("FieldMismatch:")

    def test_domain_error_single_line(self, capsys, tmp_path):
        doc = {
            "field": {"minpoly": ["4", "-4", "1"], "interval": ["1", "3"]},
            "n": 1,
            "facets": [{"normal": [["1", "0"]], "offset": ["0", "0"]}],
        }
        path = tmp_path / "badfield.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "analyze", str(path))
        assert code == 1
        assert err.strip().splitlines() == [
            "NotSquarefree: gcd with derivative has degree 1"]


class TestEnvironmentResolution:
    def test_corpus_env_fallback(self, corpus, capsys, monkeypatch,
                                 tmp_path):
        corpus("square")
        monkeypatch.setenv("QUASITORIC_CORPUS", str(tmp_path))
        report = run_json(capsys, "check-triple", "square/triple.json")
        assert report["valid"] is True

    def test_examples_default_dir_from_env(self, capsys, monkeypatch,
                                           tmp_path):
        monkeypatch.setenv("QUASITORIC_CORPUS", str(tmp_path))
        report = run_json(capsys, "examples", "interval")
        assert report["directory"] == str(tmp_path / "interval")
        assert (tmp_path / "interval" / "triple.json").exists()


class TestDeterminismAndGoldens:
    def test_reports_identical_across_runs(self, corpus, capsys):
        directory = corpus("thick-rhombus")
        _, out1, _ = run(capsys, "gale",
                         str(directory / "configuration.json"))
        _, out2, _ = run(capsys, "gale",
                         str(directory / "configuration.json"))
        assert out1 == out2

    @pytest.mark.parametrize("entry,a,command,source,golden", [
        ("kite", None, "validate-config", "configuration.json",
         "kite-validate-config.json"),
        ("thick-rhombus", None, "validate-config", "configuration.json",
         "thick-rhombus-validate-config.json"),
        ("thick-rhombus", None, "gale", "configuration.json",
         "thick-rhombus-gale.json"),
        ("hirzebruch", "sqrt2", "gale", "configuration.json",
         "hirzebruch-sqrt2-gale.json"),
        ("orbifold-interval", None, "charts", "triple.json",
         "orbifold-interval-charts.json"),
        ("pentagon", None, "analyze", "polytope.json",
         "pentagon-analyze.json"),
    ])
    def test_golden_reports(self, corpus, capsys, entry, a, command,
                            source, golden):
        directory = corpus(entry, **({"a": a} if a else {}))
        code, out, err = run(capsys, command, str(directory / source))
        assert code == 0, err
        assert out == (GOLDEN / golden).read_text()


def test_console_script_entry_point(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "quasitoric.cli", "examples", "interval",
         "--dir", str(tmp_path)],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert (tmp_path / "interval" / "polytope.json").exists()
