import json
from fractions import Fraction as F

import pytest

from sobolev2d.cli import format_value, main
from sobolev2d.document import BasisDocument
from sobolev2d.product_basis import ProductWeight
from sobolev2d.sobolev import build_basis


def gen(tmp_path, *extra, name="b.json"):
    out = tmp_path / name
    return main(["generate", *extra, "--out", str(out)]), out


def test_round_trip_and_determinism(tmp_path):
    doc = BasisDocument.from_basis(build_basis(ProductWeight.gegenbauer(F(3, 2), F(1, 2), (-1, 1)), 5, 3))
    again = BasisDocument.loads(doc.dumps())
    assert again == doc
    assert again.dumps() == doc.dumps()
    rc1, a = gen(tmp_path, "--family", "laguerre", "--alpha", "1/2", "--beta", "3/2", "--max-degree", "5", name="a")
    rc2, b = gen(tmp_path, "--family", "laguerre", "--alpha", "1/2", "--beta", "3/2", "--max-degree", "5", name="b")
    assert rc1 == rc2 == 0
    assert a.read_bytes() == b.read_bytes()


def test_generate_laguerre_contents(tmp_path):
    rc, out = gen(tmp_path, "--family", "laguerre", "--alpha", "0", "--beta", "0", "--max-degree", "3")
    assert rc == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    md = data["metadata"]
    assert md["family"] == "laguerre" and md["coupling"] == "A_hat" and md["corner"] == ["0", "0"]
    s12 = data["degrees"][1]["canonical"][1]
    assert {(t["i"], t["j"]): t["coeff"] for t in s12} == {(1, 1): "1", (1, 0): "-1", (0, 1): "-1"}


def test_generate_gegenbauer_H2(tmp_path):
    rc, out = gen(tmp_path, "--family", "gegenbauer", "--alpha", "1", "--beta", "1", "--max-degree", "2")
    assert rc == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["degrees"][1]["H_hat"] == [["1/2"]]
    assert data["metadata"]["corner"] == ["1", "1"]


@pytest.mark.parametrize("args, fragment", [
    (["--family", "gegenbauer", "--alpha", "0", "--beta", "1"], "singular"),
    (["--family", "laguerre", "--alpha", "-1", "--beta", "0"], "alpha > -1"),
    (["--family", "gegenbauer", "--alpha", "1", "--beta", "1", "--corner", "0,1"], "corner"),
    (["--family", "laguerre", "--alpha", "0", "--beta", "0", "--lambda", "0"], "lambda"),
])
def test_generate_rejects_bad_parameters(tmp_path, capsys, args, fragment):
    rc, out = gen(tmp_path, *args, "--max-degree", "3")
    assert rc == 2
    assert fragment in capsys.readouterr().err
    assert not out.exists()


def test_generate_rejects_bad_degree(tmp_path):
    rc, _ = gen(tmp_path, "--family", "laguerre", "--alpha", "0", "--beta", "0", "--max-degree", "0")
    assert rc == 2


def test_verify_passes(tmp_path, capsys):
    _, out = gen(tmp_path, "--family", "laguerre", "--alpha", "0", "--beta", "0", "--max-degree", "6")
    assert main(["verify", "--in", str(out)]) == 0
    report = capsys.readouterr().out
    assert "FAIL" not in report and "all checks passed" in report


def test_verify_gegenbauer_H4(tmp_path):
    _, out = gen(tmp_path, "--family", "gegenbauer", "--alpha", "1", "--beta", "1", "--max-degree", "4")
    assert main(["verify", "--in", str(out)]) == 0
    doc = BasisDocument.loads(out.read_text(encoding="utf-8"))
    from sobolev2d.linalg import RationalMatrix
    want = RationalMatrix.from_rows([[21, 0, -1], [0, 16, 0], [-1, 0, 21]]).scale(F(1, 128))
    assert doc.record(4).H_hat == want


def test_verify_detects_corruption(tmp_path, capsys):
    _, out = gen(tmp_path, "--family", "laguerre", "--alpha", "0", "--beta", "0", "--max-degree", "4")
    data = json.loads(out.read_text(encoding="utf-8"))
    data["degrees"][2]["shifted"][1][0]["coeff"] = "7/3"
    out.write_text(json.dumps(data), encoding="utf-8")
    assert main(["verify", "--in", str(out)]) == 1
    text = capsys.readouterr().out
    assert "FAIL" in text and "(n, k) = (3, 1)" in text


def test_verify_rejects_garbage(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["verify", "--in", str(bad)]) == 2
    assert main(["verify", "--in", str(tmp_path / "missing.json")]) == 2


@pytest.fixture
def geg_doc(tmp_path):
    _, out = gen(tmp_path, "--family", "gegenbauer", "--alpha", "1", "--beta", "1", "--max-degree", "4")
    return out


def run_eval(tmp_path, doc, points, n=4, k=2, digits=None):
    pts = tmp_path / "pts.csv"
    pts.write_text(points, encoding="utf-8")
    res = tmp_path / "res.csv"
    args = ["eval", "--in", str(doc), "--degree", str(n), "--index", str(k), "--points", str(pts), "--out", str(res)]
    if digits is not None:
        args += ["--digits", str(digits)]
    rc = main(args)
    return rc, (res.read_text(encoding="utf-8") if rc == 0 else None)


def test_eval_values(tmp_path, geg_doc):
    rc, text = run_eval(tmp_path, geg_doc, "x,y\n1,1\n0,0\n0.5,1/3\n\n")
    assert rc == 0
    assert text.splitlines() == ["x,y,value", "1,1,0", "0,0,-0.5", "0.5,1/3,-0.5625"]


def test_eval_digits(tmp_path, geg_doc):
    rc, text = run_eval(tmp_path, geg_doc, "1/3,0\n", n=2, k=0, digits=5)
    # x^2 - 1 at x = 1/3
    assert text.splitlines()[1] == "1/3,0,-0.88889"


def test_eval_errors(tmp_path, geg_doc):
    assert run_eval(tmp_path, geg_doc, "0,0\n", n=5, k=0)[0] == 2
    assert run_eval(tmp_path, geg_doc, "0,0\n", n=3, k=4)[0] == 2
    assert run_eval(tmp_path, geg_doc, "0,zero\n")[0] == 2
    assert run_eval(tmp_path, geg_doc, "0,0,0\n")[0] == 2


def test_format_value():
    assert format_value(F(0), 17) == "0"
    assert format_value(F(-1, 2), 17) == "-0.5"
    assert format_value(F(2, 3), 3) == "0.667"
    assert format_value(F(1, 8), 1) == "0.1"  # half-even


def test_module_entry_point():
    import subprocess
    import sys
    r = subprocess.run([sys.executable, "-m", "sobolev2d", "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "generate" in r.stdout
