import json
import random

import pytest

from qcube.cli import run


@pytest.fixture
def call(capsys, monkeypatch):
    def _call(argv, stdin=None):
        if stdin is not None:
            import io

            monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
        code = run(argv)
        out, err = capsys.readouterr()
        return code, out, err

    return _call


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_fixture_params_pipeline(call):
    code, out, _ = call(["fixture", "--name", "parity", "--q", "2", "--n", "4"])
    assert code == 0
    code, out2, _ = call(["params"], stdin=out)
    assert code == 0
    assert json.loads(out2) == {"r": 2, "rows": [[0, 4], [4, 0]]}


def test_theorem_col_cli(call, tmp_path):
    _, out, _ = call(["fixture", "--name", "coordinate", "--q", "3", "--n", "3"])
    path = tmp_path / "coord.json"
    path.write_text(out)
    code, out, _ = call(["theorem-col", "--face", "I=1,2;alpha=000", str(path)])
    assert code == 0
    data = json.loads(out)
    assert data["holds"] is True
    assert data["h"] == [0, 1, 1]


def test_ft_round_trip_byte_identical(call, tmp_path):
    rng = random.Random(5)
    values = [f"{rng.randint(-9, 9)}/{rng.randint(1, 5)}" for _ in range(27)]
    src = write(tmp_path, "f.json", {"q": 3, "n": 3, "values": values})
    code, spec, _ = call(["ft", src])
    assert code == 0
    code, spec_fast, _ = call(["ft", "--fast", src])
    assert spec_fast == spec
    spath = tmp_path / "spec.json"
    spath.write_text(spec)
    code, back, _ = call(["ft", "--inverse", str(spath)])
    assert code == 0
    canonical = json.loads(back)
    code, back_fast, _ = call(["ft", "--inverse", "--fast", str(spath)])
    assert back_fast == back
    # round trip reproduces the canonicalized input exactly
    from fractions import Fraction

    assert canonical["values"] == [str(Fraction(v)) for v in values]
    cpath = write(tmp_path, "canon.json", canonical)
    _, spec2, _ = call(["ft", cpath])
    s2 = tmp_path / "spec2.json"
    s2.write_text(spec2)
    _, back2, _ = call(["ft", "--inverse", str(s2)])
    assert back2 == back


def test_project_and_verify_eigen(call, tmp_path):
    src = write(tmp_path, "f.json", {"q": 2, "n": 3, "values": ["1", "0", "0", "0", "0", "0", "0", "0"]})
    code, proj, _ = call(["project", "--h", "1", src])
    assert code == 0
    ppath = tmp_path / "proj.json"
    ppath.write_text(proj)
    code, out, _ = call(["verify-eigen", "--lambda", "1", str(ppath)])
    assert code == 0 and json.loads(out) == {"lambda": 1, "h": 1, "holds": True}
    code, out, _ = call(["verify-eigen", "--lambda", "3", str(ppath)])
    assert code == 1 and json.loads(out)["holds"] is False
    code, out, _ = call(["verify-eigen", "--lambda", "2", str(ppath)])
    assert code == 1 and json.loads(out)["h"] is None
    code, out, _ = call(["theorem-eig", "--h", "1", "--face", "I=1;alpha=011", str(ppath)])
    assert code == 0
    assert set(json.loads(out)) == {"holds", "lhs", "rhs", "clearing"}
    code, _, err = call(["theorem-eig", "--h", "0", "--face", "I=1", src])
    assert code == 2 and "NotEigenfunction" in err
    code, out, _ = call(["theorem-eig", "--h", "0", "--face", "I=1", "--no-check", src])
    assert code == 1 and json.loads(out)["holds"] is False


def test_enum_commands(call, tmp_path):
    src = write(tmp_path, "f.json", {"q": 2, "n": 2, "values": ["1", "1", "1", "1"]})
    code, out, _ = call(["enum", "--face", "I=1,2", src])
    assert code == 0
    data = json.loads(out)
    assert data["enumerator"] == {"degree": 2, "coeffs": [["1", "0"], ["2", "0"], ["1", "0"]]}
    assert data["text"] == "1 · x^2 + 2 · y x + 1 · y^2"
    _, col, _ = call(["fixture", "--name", "parity", "--q", "2", "--n", "3"])
    code, out, _ = call(["enum-coloring", "--face", "I=1,2;alpha=000"], stdin=col)
    assert code == 0
    data = json.loads(out)
    assert data["matrix"] == [[1, 0, 1], [0, 2, 0]]
    assert data["text"] == ["1 · x^2 + 1 · y^2", "2 · y x"]


def test_verify_coloring(call):
    _, col, _ = call(["fixture", "--name", "parity", "--q", "2", "--n", "4"])
    code, out, _ = call(["verify-coloring", "--smatrix", "[[0,4],[4,0]]"], stdin=col)
    assert code == 0 and json.loads(out) == {"holds": True}
    code, out, _ = call(["verify-coloring", "--smatrix", '{"r":2,"rows":[[4,0],[0,4]]}'], stdin=col)
    assert code == 1


def test_spectral_hpower_search(call):
    code, out, _ = call(["spectral", "--smatrix", "[[0,8],[1,7]]", "--q", "3", "--n", "4"])
    assert code == 0
    data = json.loads(out)
    assert data["mu"] == [8, -1] and data["h"] == [0, 3]
    code, out, _ = call(["hpower", "--smatrix", "[[0,4],[4,0]]", "--k", "0", "--q", "2", "--n", "4"])
    assert code == 0
    data = json.loads(out)
    assert data["d"] == 0
    assert data["P"][0][0] == ["1/2", "0", "0", "0", "1/2"]
    code, out, _ = call(["search", "--smatrix", "[[0,1,1],[1,0,1],[1,1,0]]", "--q", "3", "--n", "1"])
    assert code == 0 and json.loads(out)["count"] == 6
    code, out, _ = call(
        ["search", "--smatrix", "[[0,1,1],[1,0,1],[1,1,0]]", "--q", "3", "--n", "1", "--limit", "1", "--fix-first"]
    )
    assert json.loads(out)["colorings"] == [{"q": 3, "n": 1, "r": 3, "colors": [0, 1, 2]}]


def test_fixture_variants(call):
    code, out, _ = call(["fixture", "--name", "hamming_code_distance", "--q", "3", "--m", "2"])
    assert code == 0 and json.loads(out)["n"] == 4
    code, out, _ = call(["fixture", "--name", "linear_form", "--q", "3", "--n", "3", "--c", "110"])
    assert code == 0 and json.loads(out)["r"] == 3


@pytest.mark.parametrize(
    "argv,stdin",
    [
        (["params"], "not json"),
        (["params"], '{"q": 2, "n": 2, "r": 2, "colors": [0, 1, 0, 0]}'),
        (["fixture", "--name", "parity", "--q", "3", "--n", "2"], None),
        (["enum", "--face", "I=7"], '{"q":2,"n":1,"values":["1","2"]}'),
        (["ft"], '{"q":2,"n":2,"values":["1"]}'),
        (["nosuch"], None),
        (["params", "/nonexistent/file.json"], None),
        (["spectral", "--smatrix", "[[1,3],[2,2]]", "--q", "2", "--n", "4"], None),
    ],
)
def test_input_errors_exit_2(call, argv, stdin):
    code, out, err = call(argv, stdin=stdin)
    assert code == 2
    assert out == ""
    assert err.strip()
