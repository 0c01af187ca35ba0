import json

from eqproj.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasis:
    def test_example_plane(self, capsys):
        code, out, _ = run(capsys, ["basis", "--p", "1", "--q", "2", "--plane", "0..0"])
        assert code == 0
        assert out.splitlines() == [
            "plane 0:",
            "  (0, 0, 0)\t1",
            "  (0, 2, 0)\tcxwm2*cw",
            "  (2, 2, 0)\tcw*cxw",
        ]

    def test_fixed_case(self, capsys):
        code, out, _ = run(capsys, ["basis", "--p", "1", "--q", "0", "--plane", "5..5"])
        assert code == 0
        assert "cwm2^5" in out

    def test_empty_parameters_rejected(self, capsys):
        code, _, err = run(capsys, ["basis", "--p", "0", "--q", "0", "--plane", "0..0"])
        assert code != 0
        assert "error" in err

    def test_json(self, capsys):
        code, out, _ = run(
            capsys,
            ["basis", "--p", "1", "--q", "2", "--plane", "-1..0", "--format", "json"],
        )
        doc = json.loads(out)
        assert [pl["n"] for pl in doc["planes"]] == [-1, 0]
        assert doc["planes"][1]["basis"][1]["expr"] == "cxwm2*cw"

    def test_grid_writes_figures(self, capsys, tmp_path):
        code, out, _ = run(
            capsys,
            [
                "basis",
                "--p", "1", "--q", "2",
                "--plane", "0..1",
                "--format", "grid",
                "--outdir", str(tmp_path),
            ],
        )
        assert code == 0
        pngs = sorted(tmp_path.glob("*.png"))
        assert [p.name for p in pngs] == ["basis_p1_q2_n0.png", "basis_p1_q2_n1.png"]
        rows = [line for line in out.splitlines() if not line.startswith("#")]
        assert rows[0].split("\t")[:3] == ["0", "0", "0"]
        assert len(rows) == 6  # three generators per plane, delimited


class TestMul:
    def test_corner_square(self, capsys):
        code, out, _ = run(
            capsys,
            ["mul", "--p", "1", "--q", "2", "--expr", "cxwm2*cw * cxwm2*cw"],
        )
        assert code == 0
        assert out.splitlines()[0] == "e^2*cxwm2*cw + xi*cw*cxw"
        assert out.splitlines()[1] == "# grading: (0, 4, 0)"

    def test_euler_saturation(self, capsys):
        code, out, _ = run(
            capsys, ["mul", "--p", "2", "--q", "2", "--expr", "cw^2*cxw^2"]
        )
        assert code == 0
        assert out.splitlines()[0] == "0"

    def test_constz_relation(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "mul",
                "--p", "1", "--q", "1",
                "--mode", "constz",
                "--expr", "cwm2*cxw - cxwm2*cw",
            ],
        )
        assert code == 0
        assert out.splitlines()[0] == "e^2"

    def test_constz_forbids_kappa(self, capsys):
        code, _, err = run(
            capsys,
            ["mul", "--p", "1", "--q", "1", "--mode", "constz", "--expr", "kappa*cw"],
        )
        assert code == 1
        assert "kappa" in err

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, ["mul", "--p", "1", "--q", "1", "--expr", "cw^-1"])
        assert code == 2
        assert "position" in err

    def test_infinite_parameters(self, capsys):
        code, out, _ = run(
            capsys, ["mul", "--p", "inf", "--q", "inf", "--expr", "cw^5*cxw^5"]
        )
        assert code == 0
        assert out.splitlines()[0] == "cw^5*cxw^5"


class TestMaps:
    def test_eta(self, capsys):
        code, out, _ = run(
            capsys, ["eta", "--p", "1", "--q", "2", "--expr", "cwm2"]
        )
        assert code == 0
        assert out.splitlines() == ["side0: cwm2", "side1: xi*cxwm2^-1"]

    def test_push(self, capsys):
        code, out, _ = run(
            capsys, ["push", "--from", "1,1", "--to", "2,1", "--expr", "1"]
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "unit: -(1-eps)"
        assert lines[1] == "cw"

    def test_restrict(self, capsys):
        code, out, _ = run(
            capsys,
            ["restrict", "--from", "2,2", "--to", "1,2", "--expr", "cxwm2^-1*cw^2"],
        )
        assert code == 0
        assert out.splitlines()[0] == "e^2*cxwm2^-2*cw + xi*cxwm2^-3*cw*cxw"

    def test_lewis_table(self, capsys):
        code, out, _ = run(capsys, ["lewis", "--p", "3", "--q", "2", "--table"])
        assert code == 0
        assert out.splitlines() == [
            "gamma\t(0, 2, 0)\tcxwm2*cw",
            "Gamma(1)\t(2, 2, 0)\tcw*cxw",
            "Gamma(2)\t(4, 4, 0)\tcw^2*cxw^2",
        ]


class TestCheck:
    def test_lewis_suite(self, capsys):
        code, out, _ = run(capsys, ["check", "--suite", "lewis", "--pmax", "4"])
        assert code == 0
        lines = out.splitlines()
        assert lines[-1].startswith("# PASS")
        for line in lines[:-1]:
            doc = json.loads(line)
            assert doc["failures"] == []

    def test_grading_suite_with_window(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "check",
                "--suite", "grading",
                "--pmax", "2", "--qmax", "2",
                "--window", "-8..8",
            ],
        )
        assert code == 0

    def test_determinism(self, capsys):
        argv = [
            "check",
            "--suite", "splitting",
            "--pmax", "2", "--qmax", "2",
            "--window", "-6..6",
        ]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2

    def test_seed_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("EQPROJ_SEED", "123")
        code, out, _ = run(
            capsys,
            ["check", "--suite", "ring", "--pmax", "1", "--qmax", "1",
             "--trials", "50", "--seed", "7"],
        )
        assert code == 0
