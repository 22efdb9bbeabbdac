import io
import json

import pandas as pd
import pytest

from src.cli import main, parse_args


@pytest.fixture
def distributions(tmp_path):
    paths = {}
    for name, p in (("a", [0.5, 0.5]), ("b", [0.9, 0.1]), ("p0", [0.2, 0.8])):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps({"atoms": len(p), "p": p}))
        paths[name] = str(path)
    return paths


class TestParseArgs:
    def test_tolerance_overrides(self):
        cmd = parse_args(["verify", "--suite", "mirror", "--seed", "3", "--tol", "mirror_isometry=1e-9", "--tol", "exact=0.5"])
        assert cmd.tol == {"mirror_isometry": 1e-9, "exact": 0.5}
        assert cmd.seed == 3

    def test_dash_operands_after_separator(self):
        cmd = parse_args(["pc", "add", "--", "-ε", "1"])
        assert cmd.op == "add"
        assert cmd.operands == ["-ε", "1"]

    def test_help_documents_separator(self, capsys):
        with pytest.raises(SystemExit) as info:
            parse_args(["pc", "--help"])
        assert info.value.code == 0
        assert "frobenius pc add -- -ε 1" in capsys.readouterr().out

    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "--suite", "algebra"],
            ["verify", "--suite", "nope", "--seed", "0"],
            ["pc", "mul", "1+ε"],
            ["pc", "conj", "1", "2"],
            ["signature", "--dim", "3", "--gram", "g.json"],
            ["signature"],
            ["geodesic", "--q", "1,0", "--s-max", "1", "--steps", "0", "p.json"],
            ["causal", "--tol", "causal", "1,0"],
            ["dist", "a.json", "b.json"],
        ],
    )
    def test_usage_errors(self, argv):
        with pytest.raises(SystemExit) as info:
            parse_args(argv)
        assert info.value.code == 2


class TestCommands:
    def test_pc_mul(self, capsys):
        assert main(["pc", "mul", "1+2ε", "3"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert (record["x"], record["y"]) == (3.0, 6.0)

    def test_pc_zero_divisor_product(self, capsys):
        assert main(["pc", "mul", "1+ε", "1-ε"]) == 0
        assert json.loads(capsys.readouterr().out)["idempotent"] == "(0|0)"

    def test_pc_inverse_of_zero_divisor(self, capsys):
        assert main(["pc", "inv", "1+ε"]) == 1
        assert capsys.readouterr().err.startswith("ZeroDivisor:")

    def test_dist(self, capsys, distributions):
        assert main(["dist", "--metric", "bhattacharyya", distributions["a"], distributions["b"]]) == 0
        assert json.loads(capsys.readouterr().out)["value"] == pytest.approx(0.89443, abs=1e-5)

    def test_dist_metrics_agree(self, capsys, distributions):
        values = {}
        for metric in ("fisher-rao", "hermitian", "cross-ratio"):
            main(["dist", "--metric", metric, distributions["a"], distributions["p0"]])
            values[metric] = json.loads(capsys.readouterr().out)["value"]
        assert values["fisher-rao"] == pytest.approx(2 * values["hermitian"])
        assert values["cross-ratio"] == pytest.approx(values["hermitian"], abs=1e-8)

    def test_missing_file(self, capsys, tmp_path):
        assert main(["dist", "--metric", "hellinger", str(tmp_path / "x.json"), str(tmp_path / "y.json")]) == 1
        assert capsys.readouterr().err.startswith("ParseError:")

    @pytest.mark.parametrize(
        "argv, expected",
        [
            (["pc", "add", "--", "-ε", "1"], (1.0, -1.0)),
            (["pc", "conj", "--", "-1+ε"], (-1.0, -1.0)),
            (["pc", "mul", "--", "-1+ε", "-ε"], (-1.0, 1.0)),
        ],
    )
    def test_pc_negative_operands(self, capsys, argv, expected):
        assert main(argv) == 0
        record = json.loads(capsys.readouterr().out)
        assert (record["x"], record["y"]) == expected

    def test_non_utf8_file(self, capsys, tmp_path):
        path = tmp_path / "latin.json"
        path.write_bytes(b"\xff\xfe\x00{")
        assert main(["dist", "--metric", "hellinger", str(path), str(path)]) == 1
        assert capsys.readouterr().err.startswith("ParseError:")

    def test_geodesic_csv_starts_at_p0(self, capsys, distributions):
        assert main(["geodesic", "--q", "1,-1", "--s-max", "3", "--steps", "4", distributions["p0"]]) == 0
        trace = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert list(trace.columns) == ["s", "p_1", "p_2"]
        assert trace.iloc[0].tolist() == [0.0, 0.2, 0.8]
        assert trace["s"].iloc[-1] == 3.0

    def test_geodesic_json(self, capsys, distributions):
        main(["geodesic", "--q", "1,0", "--s-max", "1", "--steps", "2", "--format", "json", distributions["a"]])
        records = json.loads(capsys.readouterr().out)
        assert records[1]["p_1"] == pytest.approx(0.73106, abs=1e-5)

    def test_signature(self, capsys):
        assert main(["signature", "--dim", "4", "--index", "1"]) == 0
        assert json.loads(capsys.readouterr().out) == {"neg": 1, "zero": 0, "pos": 3}

    def test_signature_from_gram(self, capsys, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"gram": [[0.0, 1.0], [1.0, 0.0]]}))
        assert main(["signature", "--gram", str(path)]) == 0
        assert json.loads(capsys.readouterr().out) == {"neg": 1, "zero": 0, "pos": 1}

    @pytest.mark.parametrize(
        "vector, expected", [("1,0,0,0", "Timelike"), ("1,1,0,0", "Null"), ("0.1,1,0,0", "Spacelike")]
    )
    def test_causal(self, capsys, vector, expected):
        assert main(["causal", vector]) == 0
        assert capsys.readouterr().out.strip() == expected

    def test_causal_negative_leading_coordinate(self, capsys):
        assert main(["causal", "--", "-1,1,0,0"]) == 0
        assert capsys.readouterr().out.strip() == "Null"

    def test_causal_zero_vector(self, capsys):
        assert main(["causal", "0,0,0"]) == 1
        assert capsys.readouterr().err.startswith("ZeroVector:")

    def test_verify(self, capsys):
        assert main(["verify", "--suite", "algebra", "--seed", "0", "--cases", "3"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["suite"] == "algebra"
        assert all(p["pass"] for p in report["properties"])

    def test_verify_failure_exit_code(self, capsys):
        argv = ["verify", "--suite", "mirror", "--seed", "0", "--cases", "2", "--tol", "affine_hyperplane_control=1e6"]
        assert main(argv) == 1
        report = json.loads(capsys.readouterr().out)
        assert not all(p["pass"] for p in report["properties"])

    def test_verify_csv(self, capsys):
        main(["verify", "--suite", "cover", "--seed", "0", "--cases", "2", "--format", "csv"])
        frame = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert set(frame["suite"]) == {"cover"}
        assert "max_residual" in frame.columns
