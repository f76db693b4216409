from __future__ import annotations

import subprocess
import sys

import pytest

from thetala import data
from thetala.cli import EXIT_BUDGET, EXIT_INVALID, EXIT_OK, EXIT_USAGE, main
from thetala.graphs import build_theta
from thetala.labeling import EdgeLabeling, parse_labeling, serialize_labeling, verify


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_labeling(path, g, f):
    path.write_text(serialize_labeling(g, f))
    return str(path)


def test_construct_theta_2s4(capsys, tmp_path):
    out_file = tmp_path / "t.txt"
    code, out, _ = run(capsys, "construct", "--family", "theta-2s4", "--s", "4", "-o", str(out_file))
    assert code == EXIT_OK
    assert "colors: 11 18 19" in out and "matches predicted colors 11 18 19" in out
    g, f = parse_labeling(out_file.read_text())
    assert verify(g, f).color_set == {11, 18, 19}


def test_output_is_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for target in (a, b):
        run(capsys, "construct", "--family", "size-4m", "--m", "6", "--xbreaks", "1,6",
            "--ybreaks", "13,14,18", "-o", str(target))
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("argv, colors", [
    (["--family", "paired", "--lengths", "2,2,4"], None),
    (["--family", "size-4m3", "--m", "3", "--k", "2"], "15 16 27"),
    (["--family", "size-4m3", "--m", "3", "--k", "2", "--l", "1"], "15 16 42"),
    (["--family", "lift", "--l", "2"], "23 85 105"),
    (["--family", "cycle-A", "--r", "3"], "25 30"),
    (["--family", "cycle-B", "--r", "5"], "45 55"),
    (["--family", "merge-cycles", "--r", "3", "--kind", "A", "--distances", "3,5,1"], "25 30 75"),
    (["--family", "spider-merge", "--legs", "2,2,2"], "6 7 15"),
])
def test_construct_families(capsys, argv, colors):
    code, out, _ = run(capsys, "construct", *argv)
    assert code == EXIT_OK
    assert "local antimagic: valid" in out
    if colors:
        assert f"colors: {colors}\n" in out


def test_merge_reports_sorted_lengths(capsys):
    _, out, _ = run(capsys, "construct", "--family", "merge-cycles", "--r", "3", "--kind", "A",
                    "--distances", "5,5,2")
    assert "sorted: theta(2,2,5,5,5,5)" in out


def test_construct_boundary_cases(capsys):
    code, out, _ = run(capsys, "construct", "--family", "size-4m3", "--m", "3", "--k", "1")
    assert code == EXIT_INVALID and "boundary case k = 1" in out
    code, out, _ = run(capsys, "construct", "--family", "size-4m3", "--m", "3", "--k", "2", "--l", "2")
    assert code == EXIT_INVALID and "boundary case l = m-1" in out
    code, out, _ = run(capsys, "construct", "--family", "paired", "--lengths", "1,3")
    assert code == EXIT_INVALID and "not simple" in out


def test_construct_usage_errors(capsys):
    code, _, err = run(capsys, "construct", "--family", "size-4m3", "--m", "3")
    assert code == EXIT_USAGE and "--k" in err
    code, _, err = run(capsys, "construct", "--family", "lift", "--l", "3")
    assert code == EXIT_USAGE and "--base" in err
    code, _, _ = run(capsys, "construct", "--family", "size-4m", "--m", "6", "--xbreaks", "6",
                     "--ybreaks", "13,14,18")
    assert code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--family", "nope"])
    assert exc.value.code == 2


def test_lift_with_base_file(capsys, tmp_path):
    g = build_theta(data.LIFT_BASE_L2_LENGTHS)
    base = write_labeling(tmp_path / "base.txt", g, EdgeLabeling.from_rows(g, data.LIFT_BASE_L2_ROWS))
    code, out, _ = run(capsys, "construct", "--family", "lift", "--l", "2", "--base", base)
    assert code == EXIT_OK and "colors: 23 85 105" in out


def test_spider_merge_with_base_file(capsys, tmp_path):
    from thetala.graphs import build_spider

    g = build_spider((2, 2, 2))
    good = write_labeling(tmp_path / "good.txt", g, EdgeLabeling.from_rows(g, [(1, 6), (2, 5), (3, 4)]))
    code, out, _ = run(capsys, "construct", "--family", "spider-merge", "--base", good)
    assert code == EXIT_OK and "colors: 6 7 15" in out
    bad = write_labeling(tmp_path / "bad.txt", g, EdgeLabeling.from_rows(g, [(6, 1), (5, 2), (4, 3)]))
    code, _, err = run(capsys, "construct", "--family", "spider-merge", "--base", bad)
    assert code == EXIT_INVALID and err


def test_verify_valid_and_corrupted(capsys, tmp_path):
    from thetala.constructions import label_paired_paths

    g = label_paired_paths(data.PAIRED_ALL_EVEN).graph
    f = EdgeLabeling.from_rows(g, data.PAIRED_ALL_EVEN_ROWS)
    path = write_labeling(tmp_path / "ok.txt", g, f)
    code, out, _ = run(capsys, "verify", path)
    assert code == EXIT_OK and "colors: 56 58 285" in out

    g = build_theta((2, 2, 4))
    labels = list(EdgeLabeling.from_rows(g, [(1, 8), (7, 2), (6, 3, 5, 4)]).labels)
    labels[0], labels[4] = labels[4], labels[0]
    path = write_labeling(tmp_path / "bad.txt", g, EdgeLabeling(tuple(labels)))
    code, out, _ = run(capsys, "verify", path)
    assert code == EXIT_INVALID
    assert "INVALID" in out and "violation: vertices 0 and 2 share color 14" in out


def test_verify_parse_error(capsys, tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("theta 2 2\npath 1: 1 x\n")
    code, _, err = run(capsys, "verify", str(path))
    assert code == EXIT_USAGE and "line 2" in err


def test_verify_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", str(tmp_path / "missing.txt"))
    assert code == EXIT_USAGE


def test_classify(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", "--theta", "2,4,4,4,6")
    assert code == EXIT_OK and "chi_la = 2, family 2b" in out
    out_file = tmp_path / "w.txt"
    code, out, _ = run(capsys, "classify", "--theta", "2,2,2", "-o", str(out_file))
    assert code == EXIT_OK and "chi_la = 3" in out and out_file.exists()
    code, out, _ = run(capsys, "classify", "--theta", "2,2,4,6,8", "--no-solver")
    assert code == EXIT_OK and "upper bound unknown" in out


def test_solve(capsys, tmp_path):
    code, out, _ = run(capsys, "solve", "--theta", "2,2,2")
    assert code == EXIT_OK and out.startswith("chi_la = 3")
    code, _, err = run(capsys, "solve", "--theta", "2,2,4,6")
    assert code == EXIT_BUDGET and "budget" in err
    code, out, _ = run(capsys, "solve", "--theta", "2,2,4,6", "--max-edges", "14", "--time-cap", "0")
    assert code == EXIT_BUDGET
    code, _, _ = run(capsys, "solve")
    assert code == EXIT_USAGE


def test_solve_from_file(capsys, tmp_path):
    g = build_theta((1, 3))
    path = write_labeling(tmp_path / "g.txt", g, EdgeLabeling((1, 2, 3, 4)))
    code, out, _ = run(capsys, "solve", "--file", path)
    assert code == EXIT_OK and "chi_la = 3" in out


def test_jobs_must_be_positive(capsys):
    code, _, _ = run(capsys, "solve", "--theta", "2,2,2", "--jobs", "0")
    assert code == EXIT_USAGE


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--max-q", "7")
    assert code == EXIT_OK
    assert "theta(1,3,3)" in out
    code, _, _ = run(capsys, "sweep", "--max-q", "20")
    assert code == EXIT_BUDGET


def test_export(capsys, tmp_path):
    g = build_theta((2, 2, 4))
    path = write_labeling(tmp_path / "t.txt", g, EdgeLabeling.from_rows(g, [(1, 8), (7, 2), (6, 3, 5, 4)]))
    code, out, _ = run(capsys, "export", "--dot", path)
    assert code == EXIT_OK and out.startswith("graph") and "--" in out
    dot = tmp_path / "t.dot"
    code, _, _ = run(capsys, "export", "--dot", path, "-o", str(dot))
    assert code == EXIT_OK and dot.read_text() == out


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == EXIT_OK
    assert "FAIL" not in out and out.strip().endswith("fixtures passed")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "thetala.cli", "construct", "--family", "cycle-A", "--r", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "colors: 25 30" in proc.stdout
