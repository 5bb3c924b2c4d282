import csv
import subprocess
import sys

import numpy as np
import pytest

from fasthough import analysis, fht2d, slow_hough
from fasthough.cli import hough_quadrants, main, quadrant_inputs
from fasthough.fileio import read_raster, write_pgm, write_raster


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_pattern_command(capsys):
    assert run(["pattern", "--n", "4", "--t", "3", "--strategy", "tweaked"], capsys)[:2] == (0, "0,1,2,3\n")
    assert run(["pattern", "--n", "1", "--t", "0"], capsys)[:2] == (0, "0\n")
    code, out, err = run(["pattern", "--n", "4", "--t", "4"], capsys)
    assert code != 0 and out == "" and err.count("\n") == 1


def _two_by_two(tmp_path):
    img = np.array([[3, 50], [70, 9]])
    path = tmp_path / "in.pgm"
    write_pgm(path, img, maxval=255)
    return img, path


@pytest.mark.parametrize("strategy", ["simple", "tweaked"])
def test_transform_raster_round_trip(tmp_path, capsys, rng, strategy):
    img = rng.integers(0, 256, size=(13, 21))
    src = tmp_path / "in.pgm"
    write_pgm(src, img, maxval=255)
    dst = tmp_path / "out.fht"
    code, out, _ = run(
        ["transform", "--input", str(src), "--strategy", strategy, "--output", str(dst), "--count"],
        capsys,
    )
    assert code == 0
    np.testing.assert_array_equal(read_raster(dst), fht2d(img, strategy))
    assert int(out.strip()) == analysis.count_additions(21, 13, strategy)


def test_transform_examples_end_to_end(tmp_path, capsys):
    img, src = _two_by_two(tmp_path)
    dst = tmp_path / "out.csv"
    code, out, _ = run(["transform", "--input", str(src), "--output", str(dst), "--count"], capsys)
    assert code == 0 and out == "4\n"
    rows = [[int(v) for v in r] for r in csv.reader(open(dst))]
    assert rows == [[53, 12], [79, 120]]

    one = tmp_path / "col.pgm"
    write_pgm(one, np.array([[5], [6], [7]]), maxval=9)
    run(["transform", "--input", str(one), "--output", str(tmp_path / "c.fht"), "--count"], capsys)
    np.testing.assert_array_equal(read_raster(tmp_path / "c.fht"), [[5], [6], [7]])

    big = tmp_path / "17.pgm"
    write_pgm(big, np.ones((17, 17), dtype=int), maxval=1)
    code, out, _ = run(
        ["transform", "--input", str(big), "--output", str(tmp_path / "17.fht"), "--count"], capsys
    )
    assert out == "1377\n"


def test_transform_accepts_raster_input(tmp_path, capsys):
    img = np.array([[-5, 2, 9]])
    write_raster(tmp_path / "in.fht", img)
    assert run(["transform", "--input", str(tmp_path / "in.fht"), "--output", str(tmp_path / "o.fht")], capsys)[0] == 0
    np.testing.assert_array_equal(read_raster(tmp_path / "o.fht"), fht2d(img))


def test_transform_errors(tmp_path, capsys):
    code, _, err = run(["transform", "--input", str(tmp_path / "missing.pgm"), "--output", "x"], capsys)
    assert code != 0 and err.startswith("fasthough: error:")
    write_raster(tmp_path / "huge.fht", np.full((2, 4), 2**60))
    code, _, err = run(["transform", "--input", str(tmp_path / "huge.fht"), "--output", str(tmp_path / "o")], capsys)
    assert code != 0 and "overflow" in err


def test_quadrants_files(tmp_path, capsys, rng):
    img = rng.integers(0, 256, size=(6, 9))
    src = tmp_path / "in.pgm"
    write_pgm(src, img, maxval=255)
    code, out, _ = run(
        ["transform", "--input", str(src), "--output", str(tmp_path / "q.fht"), "--quadrants", "--count"],
        capsys,
    )
    assert code == 0
    expected = hough_quadrants(img)
    for name, (j, _) in expected.items():
        np.testing.assert_array_equal(read_raster(tmp_path / f"q_{name}.fht"), j)
    assert int(out) == sum(c for _, c in expected.values())


@pytest.mark.parametrize("strategy", ["simple", "tweaked"])
def test_quadrants_match_oracle(rng, strategy):
    for h in range(1, 17, 3):
        for w in range(1, 17, 2):
            img = rng.integers(-20, 20, size=(h, w))
            inputs = quadrant_inputs(img)
            for name, (j, _) in hough_quadrants(img, strategy).items():
                np.testing.assert_array_equal(j, slow_hough(inputs[name], strategy))
            assert inputs["vpos"].shape == (w, h)


def test_negative_quadrant_follows_negative_slope(rng):
    # hneg column t sums along x -> (pat_t(w-1-x) + s) on the original image.
    from fasthough import fht2d_pattern

    img = rng.integers(0, 100, size=(7, 5))
    j = hough_quadrants(img)["hneg"][0]
    for t in range(5):
        pat = fht2d_pattern(5, t).values
        for s in range(7):
            assert j[s, t] == sum(img[(pat[4 - x] + s) % 7, x] for x in range(5))


def test_analyze_complexity(tmp_path, capsys):
    dst = tmp_path / "c.csv"
    assert run(["analyze", "complexity", "--n-max", "20", "--output", str(dst)], capsys)[0] == 0
    rows = list(csv.reader(open(dst)))
    assert rows[0] == ["n", "f_simple", "f_tweaked", "norm_simple", "norm_tweaked"]
    assert rows[1] == ["1", "0", "0", "", ""]
    assert rows[3][:4] == ["3", "15", "15", "1.05154958929"]
    assert rows[17][2:] == ["1377", rows[17][3], "1.16568787715"]
    assert len(rows) == 21


def test_analyze_error(tmp_path, capsys):
    dst = tmp_path / "e.csv"
    code, out, _ = run(["analyze", "error", "--n-max", "8", "--output", str(dst)], capsys)
    assert code == 0
    rows = list(csv.reader(open(dst)))
    assert rows[0] == ["n", "e_simple", "e_tweaked", "bound", "norm_simple", "norm_tweaked"]
    assert rows[1] == ["1", "0", "0", "0", "", ""]
    assert rows[4] == ["4", "0.333333333333", "0.333333333333", "1.08333333333", "1", "1"]
    assert out.startswith("separation_fraction 0 (0/8")


def test_analyze_error_fast_and_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(["analyze", "error", "--n-max", "1500", "--fast", "--output", str(a)], capsys)
    run(["analyze", "error", "--n-max", "1500", "--fast", "--output", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()
    rows = list(csv.reader(open(a)))
    assert [r[0] for r in rows[-2:]] == ["1024", "1451"]


def test_analyze_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "complexity", "--n-max", "0", "--output", "-"])
    assert exc.value.code != 0


def test_module_entry_point(tmp_path):
    res = subprocess.run(
        [sys.executable, "-m", "fasthough", "pattern", "--n", "4", "--t", "2"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and res.stdout == "0,1,1,2\n"
