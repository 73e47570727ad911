import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from filigrade import io
from filigrade.catalog import B, L, Q, ModelSpec, coeff_table, dixmier_lister, n74
from filigrade.cli import main
from filigrade.cohomology import dim9_family
from filigrade.gradings import enumerate_factor_gradings, standard_grading


def run(capsys, *argv):
    code = main([str(x) for x in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("alg", [L(5), Q(8), B(8, 1, (-1, 2)), n74(), dixmier_lister(), dim9_family(Fraction(1, 2))],
                         ids=["L5", "Q8", "B8", "n74", "DL", "dim9"])
@pytest.mark.parametrize("origin", [0, 1])
def test_algebra_round_trip(alg, origin):
    doc = io.algebra_to_doc(alg, origin)
    text = io.dumps(doc)
    back = io.algebra_from_doc(json.loads(text))
    assert back == alg and back.labels == alg.labels
    assert io.dumps(io.algebra_to_doc(back, origin)) == text


def test_coefficients_are_reduced_strings():
    doc = io.algebra_to_doc(dim9_family(Fraction(1, 2)))
    coeffs = {t["coeff"] for b in doc["brackets"] for t in b["terms"]}
    assert "3/10" in coeffs  # 3 alpha^2 / (alpha + 2) at alpha = 1/2
    assert all(isinstance(c, str) for c in coeffs)


def test_grading_round_trip():
    for g in enumerate_factor_gradings(ModelSpec("L", 5)):
        back = io.grading_from_doc(json.loads(io.dumps(io.grading_to_doc(g))), g.algebra)
        assert back == g


def test_bad_documents():
    doc = io.algebra_to_doc(L(4))
    doc["brackets"][0]["terms"][0]["coeff"] = 1
    with pytest.raises(io.DocumentError):
        io.algebra_from_doc(doc)
    g = io.grading_to_doc(standard_grading(ModelSpec("L", 4)))
    g["degrees"] = g["degrees"][:2]
    with pytest.raises(io.DocumentError):
        io.grading_from_doc(g, L(4))
    g["group"] = {"free_rank": 0, "torsion": [2, 3]}
    with pytest.raises(io.DocumentError):
        io.grading_from_doc(g, L(4))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(max_denominator=50), min_size=1, max_size=6))
def test_fraction_strings(values):
    for v in values:
        assert io.fraction_from_str(io.fraction_to_str(v)) == v


def test_make(capsys, tmp_path):
    code, out, _ = run(capsys, "make", "L", 6)
    assert code == 0 and len(json.loads(out)["brackets"]) == 4
    code, out, _ = run(capsys, "make", "Q", 6)
    assert len(json.loads(out)["brackets"]) == 5
    code, out, _ = run(capsys, "make", "A", 6, "--p", 1, "--alphas", "1")
    doc = json.loads(out)
    terms = {(b["i"], b["j"]): b["terms"] for b in doc["brackets"]}
    a = coeff_table(1, (1,), 6)
    assert terms[(1, 2)] == [{"k": 4, "coeff": str(a[1, 2])}]
    assert doc["provenance"]["model"] == {"kind": "A", "n": 6, "p": 1, "alphas": ["1"]}
    # deterministic bytes
    assert run(capsys, "make", "A", 6, "--p", 1, "--alphas", "1")[1] == out


def test_make_errors(capsys):
    assert run(capsys, "make", "A", 6, "--p", 1, "--alphas", "1,0")[0] == 2
    code, _, err = run(capsys, "make", "B", 8, "--p", 1, "--alphas", "1,1")
    assert code == 2 and "triple" in err
    assert run(capsys, "make", "Q", 7)[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "L", 4, "--format", "text")
    assert code == 0 and "L_4: 9 representatives" in out and "intro total: 9 AGREE" in out
    code, out, _ = run(capsys, "classify", "Q", 6)
    doc = json.loads(out)
    assert len(doc["representatives"]) == 19 and doc["enumerated_count"] == 20
    assert doc["agreement"] == {"list": "DISAGREE", "intro": "DISAGREE", "theorem": "DISAGREE"}
    code, out, _ = run(capsys, "classify", "A", 6, "--p", 1)
    doc = json.loads(out)
    assert len(doc["representatives"]) == 6
    assert doc["agreement"]["theorem"] == "DISAGREE" and doc["agreement"]["list"] == "AGREE"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "L", 5)
    assert code == 0 and json.loads(out)["count"] == 14
    code, out, _ = run(capsys, "enumerate", "L", 4, "--format", "text", "--basis-origin", 1)
    assert "1 | 2 | 3 | 4" in out


def test_check(capsys, tmp_path):
    alg, grd = tmp_path / "l5.json", tmp_path / "l5g.json"
    assert run(capsys, "make", "L", 5, "--out", alg, "--grading-out", grd)[0] == 0
    code, out, _ = run(capsys, "check", alg, grd)
    assert code == 0 and json.loads(out) == {"ok": True, "universal_group": "Z^2", "components": 5}
    doc = json.loads(grd.read_text())
    doc["degrees"][2] = [0, 0]
    grd.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "check", alg, grd, "--basis-origin", 1)
    assert code == 1 and json.loads(out) == {"ok": False, "i": 1, "j": 2, "witness": 3}


def test_check_dixmier_lister(capsys, tmp_path):
    alg, grd = tmp_path / "dl.json", tmp_path / "g.json"
    run(capsys, "make", "DL-gamma", "--out", alg, "--grading-out", grd)
    assert run(capsys, "check", alg, grd)[0] == 1
    run(capsys, "make", "DL", "--out", alg, "--grading-out", grd)
    assert run(capsys, "check", alg, grd)[0] == 0


def test_cn(capsys, tmp_path):
    f = tmp_path / "a.json"
    expected = {
        "n74": {"filiform": True, "nilindex": 6, "rank": 0, "char_nilpotent": True, "der_dim": 10},
        "DL": {"filiform": False, "nilindex": 3, "rank": 0, "char_nilpotent": True, "der_dim": 12},
    }
    for name, rep in expected.items():
        run(capsys, "make", name, "--out", f)
        assert json.loads(run(capsys, "cn", f)[1]) == rep
    run(capsys, "make", "L", 8, "--out", f)
    assert json.loads(run(capsys, "cn", f)[1]) == {
        "filiform": True, "nilindex": 7, "rank": 2, "char_nilpotent": False, "der_dim": 15}


def test_deform_and_zk(capsys, tmp_path):
    f = tmp_path / "d.json"
    assert run(capsys, "deform", 7, "--term", "1,4,1", "--term", "1,7,1", "--out", f)[0] == 0
    code, _, err = run(capsys, "deform", 8, "--term", "2,6,1")
    assert code == 2 and "triple" in err
    assert run(capsys, "deform", 7, "--term", "1,4,1", "--term", "2,6,1")[0] == 0
    assert run(capsys, "deform", 7, "--term", "4,6,1")[0] == 2
    k5 = tmp_path / "k5.json"
    run(capsys, "deform", 9, "--term", "1,4,1", "--term", "1,9,1", "--out", k5)
    code, out, _ = run(capsys, "zk", k5, 5)
    assert code == 0 and json.loads(out)["group"] == {"free_rank": 0, "torsion": [5]}
    assert run(capsys, "zk", k5, 3)[0] == 1
    assert run(capsys, "zk", k5, 2)[0] == 2


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "cn", tmp_path / "nope.json")[0] == 2
