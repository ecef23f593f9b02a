import io
import json

from gdmagic.cli import run


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_groups():
    code, out, _ = _run(["groups", "8"])
    assert code == 0
    assert out.splitlines() == ["Z8", "Z4xZ2", "Z2xZ2xZ2"]
    code, out, _ = _run(["groups", "8", "--json"])
    assert json.loads(out) == {"order": 8,
                               "groups": ["Z8", "Z4xZ2", "Z2xZ2xZ2"]}


def test_construct():
    code, out, _ = _run(["construct", "Kb(2,3)"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "vertices: 5"
    assert lines[1] == "degrees: 3 3 2 2 2"
    code, out, _ = _run(["construct", "C(4)", "--json"])
    data = json.loads(out)
    assert data["vertices"] == 4 and len(data["edges"]) == 4


def test_construct_bad_expr():
    code, _, err = _run(["construct", "C(2)"])
    assert code == 2 and "error" in err


def test_label_product_certificate():
    code, out, _ = _run(["label", "--graph", "C(3)", "--h", "C(4)",
                         "--product", "lex", "--group", "Z4xZ3"])
    assert code == 0
    assert "# theorem: even-degrees-lex" in out
    assert "mu: (3,0)" in out
    assert "graph: lex(C(3),C(4))" in out


def test_label_round_trip(tmp_path):
    cert_path = tmp_path / "cert.txt"
    code, out, _ = _run(["label", "--graph", "C(3)", "--h", "C(4)",
                         "--group", "Z4xZ3", "--out", str(cert_path)])
    assert code == 0 and "wrote certificate" in out
    code, out, _ = _run(["verify", "--cert", str(cert_path)])
    assert code == 0 and "ok: mu (3,0)" in out

    tampered = cert_path.read_text().replace("mu: (3,0)", "mu: (1,0)")
    cert_path.write_text(tampered)
    code, out, _ = _run(["verify", "--cert", str(cert_path)])
    assert code == 1 and "rejected" in out


def test_label_json():
    code, out, _ = _run(["label", "--graph", "Kb(2,3)", "--h", "C(4)",
                         "--group", "Z4xZ5", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["theorem"] == "kmn-mixed-lex"
    assert data["mu"] == "(3,0)"
    assert len(data["labels"]) == 20


def test_label_bare_graphs():
    code, out, _ = _run(["label", "--graph", "join(KmM(4),K(1))",
                         "--group", "Z5"])
    assert code == 0 and "# theorem: matching-join" in out and "mu: (0)" in out

    code, out, _ = _run(["label", "--graph", "S(4)", "--group", "Z5",
                         "--method", "star"])
    assert code == 0 and "# theorem: star" in out

    # star with no center solution is a verified negative
    code, out, _ = _run(["label", "--graph", "S(5)", "--group", "Z2xZ3"])
    assert code == 1 and "no labeling exists" in out


def test_label_method_forcing():
    code, out, _ = _run(["label", "--graph", "C(4)", "--h", "C(4)",
                         "--group", "Z2xZ8", "--method", "balanced-dir",
                         "--s", "1"])
    assert code == 0 and "# theorem: balanced-dir-small-s" in out
    code, _, err = _run(["label", "--graph", "C(4)", "--h", "C(4)",
                         "--group", "Z2xZ8", "--method", "balanced-dir"])
    assert code == 2 and "--s" in err


def test_label_precondition_diagnostics():
    code, _, err = _run(["label", "--graph", "P(3)", "--h", "C(4)",
                         "--product", "dir", "--group", "Z4xZ3"])
    assert code == 2
    assert "mod" in err


def test_search():
    code, out, _ = _run(["search", "--graph", "P(4)", "--group", "Z4",
                         "--mode", "count", "--naive"])
    assert code == 1 and out.strip() == "0"

    code, out, _ = _run(["search", "--graph", "C(4)", "--group", "Z4",
                         "--mode", "count"])
    assert code == 0 and out.strip() == "16"

    code, out, _ = _run(["search", "--graph", "C(4)", "--group", "Z4"])
    assert code == 0 and out.startswith("mu: ")

    code, out, _ = _run(["search", "--graph", "C(4)", "--group", "Z4",
                         "--mode", "all", "--json"])
    data = json.loads(out)
    assert data["count"] == 16 and len(data["labelings"]) == 16


def test_search_usage_errors():
    code, _, err = _run(["search", "--graph", "C(4)", "--group", "Z5"])
    assert code == 2 and "error" in err
    code, _, _ = _run(["search", "--graph", "C(13)", "--group", "Z13"])
    assert code == 2


def test_classify():
    code, out, _ = _run(["classify", "--graph", "C(4)"])
    assert code == 0
    assert "Z4: yes" in out and "group-distance-magic: yes" in out

    code, out, _ = _run(["classify", "--graph", "S(5)", "--json"])
    assert code == 1
    data = json.loads(out)
    assert data["group_distance_magic"] is False


def test_obstructions():
    code, out, _ = _run(["obstructions", "--graph", "P(4)"])
    assert code == 1
    assert "shared-neighborhood [0 3]" in out

    code, out, _ = _run(["obstructions", "--graph", "C(4)"])
    assert code == 0 and out.strip() == "none"

    # forced identity alone is not a negative verdict
    code, out, _ = _run(["obstructions", "--graph", "S(4)"])
    assert code == 0 and "forced-identity" in out

    code, out, _ = _run(["obstructions", "--graph", "K(4)", "--json"])
    assert code == 1
    kinds = {o["kind"] for o in json.loads(out)["obstructions"]}
    assert "two-universal" in kinds


def test_bad_group_spec():
    code, _, err = _run(["groups", "0"])
    assert code == 2
    code, _, err = _run(["label", "--graph", "C(4)", "--group", "Z1x"])
    assert code == 2


def test_unknown_verb():
    code, _, _ = _run(["frobnicate"])
    assert code == 2
