"""Command-line behaviour: exit codes, report shapes, determinism."""

import json
from pathlib import Path

import pytest

from kakimizu.cli import EXIT_INVALID, EXIT_OK, EXIT_USAGE, main

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    doc = json.loads(captured.out) if captured.out else None
    return code, doc, captured.err


def fx(name):
    return str(FIXTURES / name)


# -- validate ---------------------------------------------------------------


def test_validate_good_fixture(capsys):
    code, doc, _ = run(capsys, "validate", fx("hopf.json"))
    assert code == EXIT_OK
    for flag in ("connected", "alternating", "special", "reduced", "prime"):
        assert doc[flag] is True
    assert not any(m.startswith("not ") for m in doc["messages"])


def test_validate_nugatory_fixture(capsys):
    code, doc, _ = run(capsys, "validate", fx("nugatory.json"))
    assert code == EXIT_INVALID
    assert doc["alternating"] is True and doc["special"] is True
    assert doc["reduced"] is False
    assert any("reduced" in m for m in doc["messages"])


def test_validate_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO((FIXTURES / "hopf.json").read_text()))
    code, doc, _ = run(capsys, "validate", "-")
    assert code == EXIT_OK and doc["connected"] is True


# -- pipeline stages --------------------------------------------------------


def test_seifert_hopf(capsys):
    code, doc, _ = run(capsys, "seifert", fx("hopf.json"))
    assert code == EXIT_OK
    assert doc["s"] == 2 and doc["chi"] == 0


def test_theta_dalpha(capsys):
    code, doc, _ = run(capsys, "theta", fx("dalpha.json"))
    assert code == EXIT_OK
    counts = sorted(len(comp["edges"]) for comp in doc["components"])
    assert counts == [2, 3]


def test_complex_from_diagram(capsys):
    code, doc, _ = run(capsys, "complex", fx("dalpha.json"))
    assert code == EXIT_OK
    assert len(doc["vertices"]) == 20
    assert len(doc["maximal_simplices"]) == 27


def test_complex_from_theta_document(capsys):
    code_d, doc_d, _ = run(capsys, "complex", fx("dalpha.json"))
    code_t, doc_t, _ = run(capsys, "complex", fx("dalpha.theta.json"))
    assert code_d == code_t == EXIT_OK
    assert doc_d == doc_t


# -- analyze ----------------------------------------------------------------


def test_analyze_reports(capsys):
    code, doc, _ = run(
        capsys,
        "analyze",
        fx("dalpha.theta.json"),
        "--homology",
        "--ball",
        "--flag-check",
    )
    assert code == EXIT_OK
    assert doc["vertex_count"] == 20
    assert doc["dimension"] == 3
    assert doc["pure"] is True
    assert doc["homology"]["reduced_betti"] == [0, 0, 0, 0]
    assert doc["homology"]["torsion"] == [[], [], [], []]
    assert doc["ball"]["ok"] is True
    assert doc["flag_check"] is True


def test_analyze_metric_symmetric(capsys):
    code, doc, _ = run(capsys, "analyze", fx("dalpha.theta.json"), "--metric", "0", "7")
    assert code == EXIT_OK
    forward = doc["metric"]["distance"]
    _, doc2, _ = run(capsys, "analyze", fx("dalpha.theta.json"), "--metric", "7", "0")
    assert doc2["metric"]["distance"] == forward >= 1


def test_analyze_metric_out_of_range(capsys):
    code, doc, _ = run(capsys, "analyze", fx("dalpha.theta.json"), "--metric", "0", "99")
    assert code == EXIT_INVALID
    assert "out of range" in doc["error"]


# -- structure subcommands --------------------------------------------------


def test_esd_counts(capsys):
    code, doc, _ = run(capsys, "esd", "--n", "2", "--m", "2")
    assert code == EXIT_OK
    assert len(doc["vertices"]) == 6
    assert len(doc["maximal_simplices"]) == 4


def test_verify_esd_sweep(capsys):
    code, doc, _ = run(capsys, "verify-esd", "--max-n", "2", "--max-m", "2")
    assert code == EXIT_OK
    assert doc["all_ok"] is True
    assert len(doc["checked"]) == 4
    assert all(entry["isomorphic"] for entry in doc["checked"])


def test_product_counts(capsys):
    code, doc, _ = run(capsys, "product", fx("dalpha.theta.json"))
    assert code == EXIT_OK
    assert len(doc["vertices"]) == 20
    assert len(doc["maximal_simplices"]) == 27


def test_verify_product(capsys):
    code, doc, _ = run(capsys, "verify-product", fx("dalpha.theta.json"))
    assert code == EXIT_OK
    assert doc["isomorphic"] is True
    assert doc["ball"]["ok"] is True


def test_fibred_trefoil(capsys):
    code, doc, _ = run(capsys, "fibred", fx("trefoil.json"))
    assert code == EXIT_OK
    assert doc["fibred"] is True
    assert doc["graph_vertices"] >= 1 and doc["graph_edges"] >= 1


# -- surface ----------------------------------------------------------------


def test_surface_every_vertex_in_the_unit_ball(capsys):
    _, complex_doc, _ = run(capsys, "complex", fx("dalpha.json"))
    vertices = complex_doc["vertices"]
    realized = []
    for idx in range(len(vertices)):
        code, doc, _ = run(capsys, "surface", fx("dalpha.json"), "--vertex", str(idx))
        if code == EXIT_OK:
            realized.append(idx)
            assert doc["n_a"] + doc["n_b"] == 10
            assert doc["euler_characteristic"] == -5
            assert doc["vertex_index"] == idx
        else:
            assert "distance 1" in doc["error"]
    # base plus its six flype neighbours
    assert len(realized) == 7
    assert vertices.index([1, 0, 2, 0, 1]) in realized


def test_surface_conventions_agree_on_counts(capsys):
    _, complex_doc, _ = run(capsys, "complex", fx("dalpha.json"))
    idx = complex_doc["vertices"].index([1, 0, 2, 0, 1])
    _, pos, _ = run(capsys, "surface", fx("dalpha.json"), "--vertex", str(idx))
    _, neg, _ = run(
        capsys,
        "surface",
        fx("dalpha.json"),
        "--vertex",
        str(idx),
        "--convention",
        "negative",
    )
    assert pos["n_a"] + pos["n_b"] == neg["n_a"] + neg["n_b"] == 10


def test_surface_vertex_out_of_range(capsys):
    code, doc, _ = run(capsys, "surface", fx("dalpha.json"), "--vertex", "99")
    assert code == EXIT_INVALID
    assert "out of range" in doc["error"]


# -- selftest and seeds -----------------------------------------------------


def test_selftest_small_family(capsys):
    code, doc, _ = run(capsys, "selftest", "--seed", "3", "--count", "3")
    assert code == EXIT_OK
    assert doc == {"all_ok": True, "failures": [], "instances": 3, "seed": 3}


def test_selftest_env_seed_override(capsys, monkeypatch):
    monkeypatch.setenv("KAKIMIZU_SEED", "99")
    code, doc, _ = run(capsys, "selftest", "--seed", "3", "--count", "2")
    assert code == EXIT_OK
    assert doc["seed"] == 99


def test_env_seed_must_be_integer(capsys, monkeypatch):
    monkeypatch.setenv("KAKIMIZU_SEED", "banana")
    code, doc, _ = run(capsys, "selftest", "--count", "1")
    assert code == EXIT_INVALID
    assert "KAKIMIZU_SEED" in doc["error"]


# -- output handling --------------------------------------------------------


def test_repeat_runs_are_byte_identical(capsys):
    main(["complex", fx("dalpha.json")])
    first = capsys.readouterr().out
    main(["complex", fx("dalpha.json")])
    second = capsys.readouterr().out
    assert first == second
    assert first.endswith("\n")


def test_output_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code = main(["seifert", fx("hopf.json"), "-o", str(target)])
    captured = capsys.readouterr()
    assert code == EXIT_OK
    assert captured.out == ""
    assert json.loads(target.read_text())["s"] == 2


# -- error paths ------------------------------------------------------------


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["frobnicate"]) == EXIT_USAGE
    capsys.readouterr()


def test_missing_required_option_is_usage_error(capsys):
    assert main(["esd"]) == EXIT_USAGE
    capsys.readouterr()


def test_missing_input_file(capsys):
    code = main(["validate", "no-such-file.json"])
    captured = capsys.readouterr()
    assert code == EXIT_USAGE
    assert "no-such-file.json" in captured.err


def test_malformed_document(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("this is not json")
    code, doc, _ = run(capsys, "validate", str(bad))
    assert code == EXIT_INVALID
    assert "malformed document" in doc["error"]


def test_help_exits_zero(capsys):
    assert main(["--help"]) == EXIT_OK
    capsys.readouterr()
