import io
import json

from fgkit.cli import run


def _run(argv):
    out = io.StringIO()
    return run(argv, out=out), out.getvalue()


def test_verify_gb_cyclic():
    status, _ = _run(["verify-gb", "--catalog", "A~", "--n", "2", "--q", "2", "--field", "F7", "--max-degree", "12"])
    assert status == 0


def test_verify_central_reports_degree():
    status, out = _run(["verify-central", "--catalog", "E7~", "--element", "x", "--max-degree", "10", "--json", "-"])
    rep = json.loads(out)
    assert status == 0 and rep["results"][0]["degrees"] == [8]


def test_centre_generic_is_trivial():
    status, out = _run(["centre", "--catalog", "A~", "--n", "1", "--q", "t", "--field", "Q(t)",
                        "--max-degree", "8", "--json", "-"])
    rep = json.loads(out)
    assert status == 0 and all(v == 0 for d, v in rep["dims"].items() if d != "0")


def test_refuted_claims_exit_one(tmp_path):
    p = tmp_path / "p.txt"
    p.write_text("vertex 0\narrow x: 0 -> 0\narrow y: 0 -> 0\nrelation x*y - y*y\n")
    assert _run(["verify-gb", "--file", str(p), "-D", "6"])[0] == 1
    assert _run(["verify-central", "--catalog", "A~", "--n", "2", "--q", "2", "--field", "F7",
                 "--element", "x", "-D", "5"])[0] == 1


def test_errors_exit_two(tmp_path, capsys):
    assert _run(["gb", "--file", str(tmp_path / "missing")])[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("vertex 0\narrow x: 0 -> 0\nrelation x + x*x\n")
    assert _run(["gb", "--file", str(bad)])[0] == 2
    assert "line 3" in capsys.readouterr().err
    assert _run(["gb", "--catalog", "A~", "-D", "1"])[0] == 2


def test_inconclusive_exit_two():
    assert _run(["fg-check", "--catalog", "A~", "--n", "1", "--q", "2", "--field", "F7", "-D", "16"])[0] == 2


def test_fg_check_and_reproducible_json(tmp_path):
    argv = ["fg-check", "--catalog", "Z~", "--n", "1", "-D", "8", "--json"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert _run(argv + [str(a)])[0] == 0
    assert _run(argv + [str(b)])[0] == 0
    assert a.read_bytes() == b.read_bytes()
    rep = json.loads(a.read_text())
    assert rep["config"]["max_degree"] == 8 and rep["config"]["field"] == "Q" and rep["window"] == 4


def test_classify_and_dual_and_analyze():
    assert _run(["classify", "--catalog", "E8~"])[1].startswith("class: eq2")
    assert _run(["classify", "--matrix", "0,1;1,0"])[1].startswith("class: lt2")
    assert _run(["dual", "--catalog", "D~", "--n", "5"])[0] == 0
    status, out = _run(["analyze", "--catalog", "Z~", "--n", "2", "--json", "-"])
    assert status == 0 and json.loads(out)["weakly_symmetric"] is True


def test_betti_module_file(tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"dims": [0, 0, 0, 2], "matrices": {"b": [[0, 1], [0, 0]]}}))
    status, out = _run(["betti", "--catalog", "DZ~", "--n", "3", "--module", str(m), "--json", "-"])
    assert status == 0 and json.loads(out)["period"] == 5


def test_catalog_listing():
    status, out = _run(["catalog"])
    assert status == 0 and "E8~" in out
    status, out = _run(["catalog", "--catalog", "qext", "--n", "3", "--q", "-1", "--json", "-"])
    assert json.loads(out)["expected_fg"] is True
