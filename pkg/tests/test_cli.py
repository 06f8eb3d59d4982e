import json

from magicstar.cli import run


def capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def test_roots_count(capsys):
    code, out = capture(capsys, ["roots", "E8", "--count"])
    assert code == 0
    assert out.strip() == "240"


def test_roots_listing(capsys):
    code, out = capture(capsys, ["roots", "A2"])
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 6
    assert all("," in line for line in lines)


def test_star_f4(capsys):
    code, out = capture(capsys, ["star", "F4"])
    assert code == 0
    data = json.loads(out)
    assert data["center"] == 6
    assert data["hexagon"] == 6
    assert data["tips"] == [6] * 6


def test_star_emits_files(tmp_path, capsys):
    svg = tmp_path / "g2.svg"
    csv = tmp_path / "g2.csv"
    code, _ = capture(capsys, ["star", "G2", "--svg", str(svg), "--csv", str(csv)])
    assert code == 0
    assert svg.read_text().startswith("<svg")
    assert len(csv.read_text().strip().split("\n")) == 12


def test_clifford_summary(capsys):
    code, out = capture(capsys, ["clifford", "9", "0", "--check"])
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 16
    assert data["reality_class"] == "Majorana"
    assert data["bilinears"]["+1"] == {"symmetry": 1}
    assert data["bilinears"]["-1"] is None


def test_clifford_emit(tmp_path, capsys):
    path = tmp_path / "g.txt"
    code, _ = capture(capsys, ["clifford", "1", "1", "--emit", str(path)])
    assert code == 0
    lines = path.read_text().strip().split("\n")
    assert len(lines) == 4  # two 2x2 generators, one entry per column
    assert all(len(line.split(",")) == 4 for line in lines)


def test_ep_der0_matches_claim(capsys):
    code, out = capture(capsys, ["ep", "--level", "der", "--n", "0", "--samples", "4"])
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 52
    assert data["jacobi_status"] == "lie-algebra"
    assert data["calibration"]["values"] == {"pair_so": "1"}


def test_ep_der1_violation(capsys):
    code, out = capture(capsys, ["ep", "--level", "der", "--n", "1", "--samples", "3"])
    assert code == 0
    data = json.loads(out)
    assert data["jacobi_status"] == "violated"
    assert "witness" in data
    assert data["certificate_rows"]


def test_ep_deterministic_output(capsys):
    _, out1 = capture(capsys, ["ep", "--level", "str0", "--n", "0", "--samples", "4"])
    _, out2 = capture(capsys, ["ep", "--level", "str0", "--n", "0", "--samples", "4"])
    assert out1 == out2


def test_talg_entropy_diag220(tmp_path, capsys):
    payload = {
        "q": 8,
        "n": 0,
        "r": ["2", "2", "0"],
        "v": ["0"] * 8,
        "psi": [["0"] * 16],
    }
    path = tmp_path / "diag220.json"
    path.write_text(json.dumps(payload))
    code, out = capture(capsys, ["talg", "--q", "8", "--n", "0", "entropy", "--input", str(path)])
    assert code == 0
    data = json.loads(out)
    assert data == {"N": "0", "rank": 2, "entropy": 0.0}


def test_talg_norm_and_grad(tmp_path, capsys):
    payload = {
        "q": 2,
        "n": 0,
        "r": ["1", "2", "3"],
        "v": ["1", "0"],
        "psi": [["1", "0"], ["0", "1"]],
    }
    path = tmp_path / "el.json"
    path.write_text(json.dumps(payload))
    code, out = capture(capsys, ["talg", "--q", "2", "--n", "0", "norm", "--input", str(path)])
    assert code == 0
    n = json.loads(out)["N"]
    code, out = capture(capsys, ["talg", "--q", "2", "--n", "0", "grad", "--input", str(path)])
    assert code == 0
    assert len(json.loads(out)["grad"]) == 9


def test_usage_errors_exit_1(capsys):
    assert run(["roots"]) == 1
    assert run(["roots", "E8", "--bogus"]) == 1
    assert run(["roots", "Z9"]) == 1
    assert run(["ep", "--level", "nope", "--n", "0"]) == 1


def test_missing_input_file_exit_3(capsys):
    assert run(["talg", "--q", "8", "--n", "0", "norm", "--input", "/nonexistent.json"]) == 3
