"""CLI behavior: certificates, exit codes, catalog persistence."""

import json

import pytest

from frobring import cli
from frobring.certificate import content_hash


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_ring(tmp_path, name, text):
    path = tmp_path / f"{name}.ring"
    path.write_text(text)
    return str(path)


def test_classify_json(tmp_path, capsys):
    path = write_ring(tmp_path, "zmod4", "zmod 4\n")
    code, out, _ = run_cli(capsys, "classify", path, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ring"]["order"] == 4
    cls = payload["classification"]
    assert cls["frobenius"] and not cls["semisimple"]
    assert payload["torsion_free_character"]["present"]
    assert payload["dual_module"]["cyclic"]
    assert payload["hash"] == content_hash(payload)


def test_classify_text_carries_same_verdicts(tmp_path, capsys):
    path = write_ring(tmp_path, "local8", "fpalgebra 2 3 labels 1 x y consts\n")
    code, text_out, _ = run_cli(capsys, "classify", path)
    assert code == 0
    code, json_out, _ = run_cli(capsys, "classify", path, "--format", "json")
    payload = json.loads(json_out)
    assert "quasi-Frobenius:     False" in text_out
    assert "torsion-free char:   absent" in text_out
    assert not payload["classification"]["quasi_frobenius"]
    assert not payload["torsion_free_character"]["present"]


def test_classify_deterministic_bytes(tmp_path, capsys):
    path = write_ring(tmp_path, "gf4", "gf 2 2\n")
    _, out1, _ = run_cli(capsys, "classify", path, "--format", "json")
    _, out2, _ = run_cli(capsys, "classify", path, "--format", "json")
    assert out1 == out2


def test_verify_reports_counterexample(tmp_path, capsys):
    path = write_ring(tmp_path, "local8", "fpalgebra 2 3 labels 1 x y consts\n")
    code, out, _ = run_cli(capsys, "verify", path, "--length", "1",
                           "--max-code-size", "8", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    mw = payload["macwilliams"][0]
    assert not mw["holds"]
    assert mw["counterexample"]["domain"] == [[0], [2]]
    assert mw["counterexample"]["image"] == [[0], [4]]


def test_verify_vacuous_scope(tmp_path, capsys):
    path = write_ring(tmp_path, "zmod4", "zmod 4\n")
    code, out, _ = run_cli(capsys, "verify", path, "--length", "1",
                           "--max-code-size", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    mw = payload["macwilliams"][0]
    assert mw["holds"] and mw["code_size_cap"] == 1
    assert mw["codes_checked"] == 1  # only the zero code fits the cap


def test_search_command(tmp_path, capsys):
    path = write_ring(tmp_path, "local8", "fpalgebra 2 3 labels 1 x y consts\n")
    code, out, _ = run_cli(capsys, "search", path, "--max-length", "2",
                           "--max-code-size", "8", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["counterexample_found"]
    assert payload["macwilliams"][0]["length"] == 1


def test_exit_codes(tmp_path, capsys):
    bad = write_ring(tmp_path, "bad", "zmod\n")
    code, _, err = run_cli(capsys, "classify", bad)
    assert code == cli.EXIT_PARSE and "parse error" in err
    big = write_ring(tmp_path, "big", "zmod 100000\n")
    code, _, err = run_cli(capsys, "classify", big)
    assert code == cli.EXIT_CAP and "cap exceeded" in err


def test_dual_and_character_commands(tmp_path, capsys):
    path = write_ring(tmp_path, "m2f2", "matrix 2 zmod 2\n")
    code, out, _ = run_cli(capsys, "dual", path, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["characters"] == 16
    assert payload["invariant_factors"] == [2, 2, 2, 2]
    assert payload["cyclic_right_module"]

    code, out, _ = run_cli(capsys, "character", path, "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["present"]

    path = write_ring(tmp_path, "local8", "fpalgebra 2 3 labels 1 x y consts\n")
    code, out, _ = run_cli(capsys, "character", path, "--format", "json")
    payload = json.loads(out)
    assert code == 0 and not payload["present"]


def test_catalog_run_and_skip(tmp_path, capsys):
    for name, text in (("zmod4", "zmod 4\n"), ("zmod6", "zmod 6\n"),
                       ("broken", "zmod\n")):
        write_ring(tmp_path, name, text)
    out_dir = tmp_path / "certs"
    code, out, _ = run_cli(capsys, "catalog", str(tmp_path), "--out", str(out_dir),
                           "--format", "json")
    assert code == 0
    index = json.loads((out_dir / "index.json").read_text())
    assert set(index["rings"]) == {"zmod4", "zmod6"}
    assert "broken" in index["errors"]
    assert index["summary"]["equivalence_violations"] == 0
    cert = json.loads((out_dir / "zmod4.cert.json").read_text())
    assert cert["classification"]["frobenius"]

    # re-run skips unchanged specs: certificates must be byte-identical
    before = (out_dir / "zmod4.cert.json").read_bytes()
    mtime = (out_dir / "zmod4.cert.json").stat().st_mtime_ns
    code, _, _ = run_cli(capsys, "catalog", str(tmp_path), "--out", str(out_dir),
                         "--format", "json")
    assert code == 0
    assert (out_dir / "zmod4.cert.json").read_bytes() == before
    assert (out_dir / "zmod4.cert.json").stat().st_mtime_ns == mtime


def test_catalog_empty_dir(tmp_path, capsys):
    empty = tmp_path / "nothing"
    empty.mkdir()
    code, out, _ = run_cli(capsys, "catalog", str(empty), "--format", "json")
    assert code == 0
    index = json.loads(out)
    assert index["rings"] == {} and index["summary"]["rings"] == 0


def test_certificate_round_trip(tmp_path, capsys):
    path = write_ring(tmp_path, "f2c3", "groupring zmod 2 cyclic 3\n")
    _, out, _ = run_cli(capsys, "classify", path, "--format", "json")
    payload = json.loads(out)
    assert json.loads(json.dumps(payload)) == payload
    assert payload["hash"] == content_hash(payload)
