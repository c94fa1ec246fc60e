import json

import pytest

from crossline.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cr(capsys):
    assert run(capsys, "cr", "--field", "q", "--points", "0;1;2;3")[:2] == (0, "4/3\n")
    assert run(capsys, "cr", "--field", "q", "--points", "1;-1;0;inf")[:2] == (0, "-1\n")
    code, _, err = run(capsys, "cr", "--points", "0;1;1;3")
    assert code == 2 and "B ≠ C violated" in err
    assert run(capsys, "cr", "--points", "0;1;2")[0] == 2
    assert run(capsys, "cr", "--field", "quat", "--points", "(0, 1, 0, 0);0;1;2")[0] == 0


def test_bad_field_and_missing_args_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cr", "--field", "reals", "--points", "0;1;2;3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_ratio(capsys):
    assert run(capsys, "ratio", "--points", "6;3")[:2] == (0, "2\n")
    assert run(capsys, "ratio", "--points", "3;2;1")[:2] == (0, "2\n")


def test_construct(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--op", "add", "--a", "2", "--b", "3", "--field", "rat",
                       "--svg", str(tmp_path / "c.svg"), "--trace", str(tmp_path / "t.json"))
    assert code == 0 and out.splitlines()[-1] == "result: 5"
    assert [l for l in out.splitlines() if l.startswith("Step.")] == ["Step.1", "Step.2", "Step.3"]
    assert (tmp_path / "c.svg").exists()
    assert run(capsys, "render", str(tmp_path / "t.json"), "--out", str(tmp_path / "r.svg"))[0] == 0
    assert (tmp_path / "r.svg").read_bytes() == (tmp_path / "c.svg").read_bytes()

    code, out, _ = run(capsys, "construct", "--op", "mul", "--a", "1", "--b", "9")
    assert code == 0 and "P1 = B1" in out and out.endswith("result: 9\n")
    code, out, _ = run(capsys, "construct", "--op", "mul", "--a", "(0,1,0,0)", "--b", "(0,0,1,0)", "--field", "quat")
    assert out.endswith("result: (0, 0, 0, 1)\n")
    assert run(capsys, "construct", "--op", "add", "--a", "1", "--b", "2", "--aux", "[3 ; 0]")[0] == 2
    assert run(capsys, "construct", "--op", "add", "--a", "(0,1)", "--b", "2", "--field", "gauss",
               "--svg", str(tmp_path / "g.svg"))[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "invariance", "--field", "quat",
                       "--samples", "500", "--seed", "7", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["failed"] == 0 and doc["passed"] == 2500
    assert run(capsys, "verify", "--suite", "nonsense")[0] == 2
    code, out, _ = run(capsys, "verify", "--suite", "preservation", "--field", "quat", "--samples", "30",
                       "--mutation", "right-dilation")
    assert code == 1 and "FAIL" in out


def test_verify_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("CROSSLINE_SEED", "99")
    _, out, _ = run(capsys, "verify", "--suite", "composition", "--samples", "3", "--json")
    assert json.loads(out)["seed"] == 99


def test_conformance(capsys, tmp_path):
    assert run(capsys, "conformance", "--samples", "0")[0] == 2
    out_file = tmp_path / "c.json"
    code, first, _ = run(capsys, "conformance", "--samples", "10", "--seed", "1", "--out", str(out_file))
    assert code == 0
    for ident in ("R1", "C10"):
        assert ident in first
    for field in ("rat", "gauss", "quat"):
        assert field in first
    doc = out_file.read_bytes()
    run(capsys, "conformance", "--samples", "10", "--seed", "1", "--out", str(out_file))
    assert out_file.read_bytes() == doc


def test_verify_identity_catalog_rat(capsys):
    # R4 and C7 are false as stated, so the full commutative catalog reports failures
    code, out, _ = run(capsys, "verify", "--suite", "identity-catalog", "--field", "rat", "--json")
    assert code == 1 and json.loads(out)["counterexample"]["part"] == "R4"
    rest = "R1,R2,R3,R6,R7,R8,R9,C0,C1,C2,C3,C4,C5,C6,C8,C9,C10"
    assert run(capsys, "verify", "--suite", "identity-catalog", "--field", "rat", "--parts", rest)[0] == 0
