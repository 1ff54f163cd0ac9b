"""JSON report documents and the command-line surface."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from proxrem import basic_generator, bounds, emit_graph6, parse_graph6
from proxrem.bounds import check_graph, complete_report
from proxrem.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_VIOLATION, cli
from proxrem.report import ReportDocument, encode_rational, render_table


def make_doc(g, source):
    report = complete_report(g)
    return ReportDocument(
        version="0.1.0",
        graph_source=source,
        edge_count=g.edge_count,
        invariants=report,
        checks=check_graph(g, report=report),
        construction_notes=["example note"],
    )


class TestReportDocument:
    def test_json_roundtrip(self, c5):
        doc = make_doc(c5, {"family": "cycle", "n": 5})
        assert ReportDocument.from_json(doc.to_json()) == doc

    def test_rational_encoding(self):
        enc = encode_rational(Fraction(3, 2))
        assert enc == {"num": 3, "den": 2, "decimal": "1.5"}

    def test_decimal_is_advisory(self, p5):
        doc = make_doc(p5, {"family": "path", "n": 5})
        payload = doc.to_json_dict()
        payload["invariants"]["proximity"]["decimal"] = "garbage"
        assert ReportDocument.from_json_dict(payload).invariants.proximity == Fraction(3, 2)

    def test_table_rendering(self, p5):
        text = render_table(make_doc(p5, {"family": "path", "n": 5}))
        assert "proximity" in text
        assert "3/2" in text
        assert "AH-diam-pi" in text
        assert "TIGHT" in text  # the path is the AH-diam-pi equality case
        assert "note: example note" in text


class TestCliGen:
    def test_gen_layered(self, capsys):
        assert cli(["gen", "layered", "--delta", "3", "--k", "2"]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        g = parse_graph6(out[0])
        assert g.order == 14
        notes = [line for line in out if line.startswith("# ")]
        assert any("order 14" in line for line in notes)
        assert any("median total distance 29" in line for line in notes)

    def test_gen_to_file_stays_loadable(self, tmp_path, capsys):
        target = tmp_path / "layered.g6"
        assert cli(["gen", "layered", "--delta", "3", "--k", "2", "--out", str(target)]) == EXIT_OK
        from proxrem.graph6 import load_graphs

        graphs = load_graphs(target)
        assert len(graphs) == 1 and graphs[0].order == 14

    def test_gen_path(self, capsys):
        assert cli(["gen", "path", "--n", "5"]) == EXIT_OK
        line = capsys.readouterr().out.splitlines()[0]
        assert parse_graph6(line) == basic_generator("path", 5)

    def test_gen_validation_failure(self, capsys):
        assert cli(["gen", "layered", "--delta", "2", "--k", "2"]) == EXIT_VALIDATION
        assert "delta >= 3" in capsys.readouterr().err

    def test_gen_odd_k_warns_and_succeeds(self, capsys):
        with pytest.warns(UserWarning, match="odd k"):
            assert cli(["gen", "layered", "--delta", "3", "--k", "3"]) == EXIT_OK
        g = parse_graph6(capsys.readouterr().out.splitlines()[0])
        assert g.order == 2 * 3 * 3 + 2

    def test_gen_unknown_family_is_usage_error(self):
        with pytest.raises(SystemExit) as err:
            cli(["gen", "moebius", "--n", "8"])
        assert err.value.code == EXIT_USAGE


class TestCliMeasure:
    def test_measure_family_json(self, capsys):
        assert cli(["measure", "--family", "path", "--n", "5", "--json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["invariants"]["proximity"] == {"num": 3, "den": 2, "decimal": "1.5"}
        assert payload["invariants"]["diameter"] == 4
        assert payload["class_flags"] == {"triangle_free": True, "c4_free": True}

    def test_measure_table(self, capsys):
        assert cli(["measure", "--family", "cycle", "--n", "5"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "proximity" in out and "3/2" in out

    def test_measure_from_file(self, tmp_path, capsys, petersen):
        path = tmp_path / "p.g6"
        path.write_text(emit_graph6(petersen) + "\n")
        assert cli(["measure", "--in", str(path), "--json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["invariants"]["diameter"] == 2
        assert payload["graph"] == {"file": str(path), "index": 0}

    def test_measure_missing_file(self, capsys):
        assert cli(["measure", "--in", "/nonexistent/x.g6"]) == EXIT_IO

    def test_measure_requires_a_source(self):
        with pytest.raises(SystemExit) as err:
            cli(["measure"])
        assert err.value.code == EXIT_USAGE

    def test_measure_conflicting_sources(self, tmp_path):
        path = tmp_path / "p.g6"
        path.write_text("Bw\n")
        with pytest.raises(SystemExit) as err:
            cli(["measure", "--in", str(path), "--family", "path", "--n", "3"])
        assert err.value.code == EXIT_USAGE

    def test_measure_bad_index(self, tmp_path, capsys):
        path = tmp_path / "p.g6"
        path.write_text("Bw\n")
        assert cli(["measure", "--in", str(path), "--index", "3"]) == EXIT_VALIDATION

    def test_measure_disconnected_input(self, tmp_path, capsys):
        path = tmp_path / "d.g6"
        path.write_text(emit_graph6(basic_generator("edgeless", 3)) + "\n")
        assert cli(["measure", "--in", str(path)]) == EXIT_VALIDATION
        assert "unreachable" in capsys.readouterr().err


class TestCliCheck:
    def test_check_chain(self, capsys):
        assert cli(["check", "--family", "chain", "--q", "4", "--k", "2"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "C4-rho-pi" in out

    def test_check_bounds_subset(self, capsys):
        assert (
            cli(["check", "--family", "path", "--n", "5", "--bounds", "AH-diam-pi,AH-rho-pi"])
            == EXIT_OK
        )
        out = capsys.readouterr().out
        assert "AH-diam-pi" in out and "AH-rad-pi" not in out

    def test_check_unknown_bound_id(self):
        with pytest.raises(SystemExit) as err:
            cli(["check", "--family", "path", "--n", "5", "--bounds", "AH-girth"])
        assert err.value.code == EXIT_USAGE

    def test_violation_exit_code(self, monkeypatch, capsys):
        # no sound bound can fail on a valid graph, so plant an impossible one
        from dataclasses import replace

        from proxrem.bounds import Const, _BY_ID

        impossible = replace(
            _BY_ID["AH-rho-pi"], rhs=Const(Fraction(-10)), rhs_even=None
        )
        monkeypatch.setitem(_BY_ID, "AH-rho-pi", impossible)
        rc = cli(["check", "--family", "cycle", "--n", "5", "--bounds", "AH-rho-pi"])
        assert rc == EXIT_VIOLATION
        assert "VIOLATION" in capsys.readouterr().err

    def test_scan_violation_exit_code(self, monkeypatch, capsys, tmp_path):
        from dataclasses import replace

        from proxrem.bounds import Const, _BY_ID

        impossible = replace(
            _BY_ID["AH-diam-pi"], rhs=Const(Fraction(-10)), rhs_even=None
        )
        monkeypatch.setitem(_BY_ID, "AH-diam-pi", impossible)
        path = tmp_path / "c.g6"
        path.write_text("Bw\n")
        rc = cli(["scan", "--in", str(path), "--bounds", "AH-diam-pi"])
        assert rc == EXIT_VIOLATION
        assert "VIOLATIONS" in capsys.readouterr().out


class TestCliScanAndEnum:
    def test_scan_enumerated(self, capsys):
        from proxrem import canonical_form

        assert cli(["scan", "--n", "5", "--bounds", "AH-diam-pi"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "violations 0" in out
        assert "tight 1" in out
        tight_line = next(ln for ln in out.splitlines() if "tight cases:" in ln)
        witness = parse_graph6(tight_line.split()[-1])
        assert canonical_form(witness) == canonical_form(basic_generator("path", 5))

    def test_scan_needs_one_source(self):
        with pytest.raises(SystemExit) as err:
            cli(["scan"])
        assert err.value.code == EXIT_USAGE

    def test_scan_file_corpus(self, tmp_path, capsys):
        path = tmp_path / "corpus.g6"
        path.write_text("Bw\nBg\n# comment\n")
        assert cli(["scan", "--in", str(path)]) == EXIT_OK
        assert "graphs scanned: 2" in capsys.readouterr().out

    def test_enum_writes_corpus(self, tmp_path, capsys):
        target = tmp_path / "n5.g6"
        assert cli(["enum", "--n", "5", "--out", str(target)]) == EXIT_OK
        lines = [ln for ln in target.read_text().splitlines() if ln]
        assert len(lines) == 21
        assert len({emit_graph6(parse_graph6(ln)) for ln in lines}) == 21

    def test_enum_filtered(self, tmp_path):
        target = tmp_path / "tf5.g6"
        assert cli(["enum", "--n", "5", "--filter", "tf", "--out", str(target)]) == EXIT_OK
        graphs = [parse_graph6(ln) for ln in target.read_text().splitlines() if ln]
        from proxrem import find_triangle

        assert graphs and all(find_triangle(g) is None for g in graphs)

    def test_catalog_prints_table(self, capsys):
        assert cli(["catalog"]) == EXIT_OK
        out = capsys.readouterr().out
        for bound_id in bounds.all_check_ids():
            assert bound_id in out
