"""CLI behavior: output formats, exit codes, verification sweeps."""

import json

from chromsym.cli import main
from chromsym.families import FAMILIES, Family
from chromsym.formulas import x_kpkp
from chromsym.graphs import complete, format_edge_list, path, tadpole, twin
from chromsym.oracle import csf_bruteforce
from chromsym.symfunc import ESymFunc, e_term


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpand:
    def test_tw_cycle_constant(self, capsys):
        code, out, _ = run(capsys, "expand", "--family", "tw-cycle", "--n", "4")
        assert code == 0
        assert out.strip() == "50*e[5] + 6*e[4,1] + 4*e[3,2]"

    def test_bare_clique_lollipop(self, capsys):
        code, out, _ = run(capsys, "expand", "--family", "lollipop",
                           "--a", "3", "--l", "0")
        assert code == 0
        assert out.strip() == "6*e[3]"

    def test_structured_matches_oracle(self, capsys):
        code, out, _ = run(capsys, "expand", "--family", "kpkp", "--a", "3",
                           "--g", "1", "--b", "3", "--h", "1",
                           "--format", "structured")
        assert code == 0
        parsed = ESymFunc.from_records(json.loads(out))
        assert parsed == x_kpkp(3, 1, 3, 1)
        from chromsym.graphs import kpkp
        assert parsed == csf_bruteforce(kpkp(3, 1, 3, 1))

    def test_kchain_parts_flag(self, capsys):
        code, out, _ = run(capsys, "expand", "--family", "kchain",
                           "--parts", "3,3")
        assert code == 0 and "e[" in out

    def test_unknown_family_usage_error(self, capsys):
        code, _, err = run(capsys, "expand", "--family", "mystery", "--n", "4")
        assert code == 2 and "unknown family" in err

    def test_bad_parameter_value(self, capsys):
        code, _, err = run(capsys, "expand", "--family", "path", "--n", "0")
        assert code == 2 and "error" in err

    def test_missing_parameter(self, capsys):
        code, _, err = run(capsys, "expand", "--family", "kpk", "--a", "2")
        assert code == 2 and "--b" in err

    def test_extraneous_parameter(self, capsys):
        code, _, err = run(capsys, "expand", "--family", "path",
                           "--n", "4", "--a", "1")
        assert code == 2 and "no parameter" in err


class TestOracleCmd:
    def test_triangle_file(self, capsys, tmp_path):
        f = tmp_path / "triangle.txt"
        f.write_text("3\n0 1\n1 2\n0 2\n")
        code, out, _ = run(capsys, "oracle", "--graph", str(f))
        assert code == 0 and out.strip() == "6*e[3]"

    def test_twinned_tadpole_counterexample(self, capsys, tmp_path):
        g = twin(tadpole(4, 1), 2)  # twin at cycle distance 1 from the center
        f = tmp_path / "c411.txt"
        f.write_text(format_edge_list(g))
        code, out, _ = run(capsys, "oracle", "--graph", str(f))
        assert code == 0
        assert "- 4*e[4,2]" in out

    def test_family_input(self, capsys):
        code, out, _ = run(capsys, "oracle", "--family", "cycle", "--n", "5")
        assert code == 0
        from chromsym.formulas import x_cycle
        assert out.strip() == x_cycle(5).to_text()

    def test_budget_exit_code(self, capsys, tmp_path):
        f = tmp_path / "k8.txt"
        f.write_text(format_edge_list(complete(8)))
        code, _, err = run(capsys, "oracle", "--graph", str(f))
        assert code == 3 and "budget" in err

    def test_budget_override(self, capsys, tmp_path):
        f = tmp_path / "k8.txt"
        f.write_text(format_edge_list(complete(8)))
        code, out, _ = run(capsys, "oracle", "--graph", str(f),
                           "--edge-budget", "28")
        assert code == 0 and out.strip() == "40320*e[8]"

    def test_parse_error(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("3\n0 9\n")
        code, _, err = run(capsys, "oracle", "--graph", str(f))
        assert code == 2 and "line 2" in err


class TestPositivity:
    def test_counterexample_reported(self, capsys, tmp_path):
        g = twin(tadpole(4, 1), 2)
        f = tmp_path / "c411.txt"
        f.write_text(format_edge_list(g))
        code, out, _ = run(capsys, "positivity", "--graph", str(f))
        assert code == 0
        assert "NOT e-positive" in out
        assert "min coeff -4 at e[4,2]" in out

    def test_positive_twin(self, capsys, tmp_path):
        g = twin(tadpole(4, 1), 3)  # distance 2 from the center
        f = tmp_path / "c421.txt"
        f.write_text(format_edge_list(g))
        code, out, _ = run(capsys, "positivity", "--graph", str(f))
        assert code == 0
        assert out.startswith("e-positive")

    def test_family_positivity(self, capsys):
        code, out, _ = run(capsys, "positivity", "--family", "lollipop",
                           "--a", "4", "--l", "2")
        assert code == 0 and out.startswith("e-positive")


class TestVerify:
    def test_path_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--family", "path", "--max-n", "8")
        assert code == 0
        assert "FAIL" not in out
        assert out.count("PASS") == 8

    def test_tw_cycle_sweep_covers_known_constants(self, capsys):
        code, out, _ = run(capsys, "verify", "--family", "tw-cycle",
                           "--max-n", "6")
        assert code == 0
        for n in (4, 5, 6):
            assert f"PASS tw-cycle n={n}" in out

    def test_kpkp_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--family", "kpkp", "--max-n", "9")
        assert code == 0
        assert "FAIL" not in out

    def test_skips_reported_not_fatal(self, capsys):
        code, out, _ = run(capsys, "verify", "--family", "kchain",
                           "--max-n", "9")
        assert code == 0
        assert "SKIP kchain parts=(9,)" in out

    def test_mismatch_exit_code(self, capsys):
        broken = Family(
            tag="broken-test-family",
            params=("n",),
            summary="deliberately wrong evaluator",
            evaluate=lambda n: e_term((n,), 999),
            build_graph=path,
            grid=lambda max_n: iter([{"n": 3}]),
        )
        FAMILIES[broken.tag] = broken
        try:
            code, out, _ = run(capsys, "verify", "--family", broken.tag,
                               "--max-n", "3")
            assert code == 1
            assert "FAIL" in out
        finally:
            del FAMILIES[broken.tag]


class TestListFamilies:
    def test_lists_all_tags(self, capsys):
        code, out, _ = run(capsys, "list-families")
        assert code == 0
        for tag in ("path", "kayak", "kpkp", "tw-lollipop", "melting-lollipop"):
            assert tag in out

    def test_no_command_is_usage_error(self, capsys):
        assert run(capsys, )[0] == 2
