import json
import math

import pytest

from invmills import cli


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_R(capsys):
    code, out, _ = run(["eval", "--z", "1,0", "--q", "R"], capsys)
    assert code == 0
    q, re, im, err, method = out.split()
    assert q == "R"
    assert float(re) == pytest.approx(1.5251352761609812, rel=1e-13)
    assert float(im) == 0.0
    assert float(err) >= 0.0
    assert method in ("taylor", "continued_fraction", "scaled_imaginary_axis")


def test_eval_rejects_left_halfplane(capsys):
    code, _, err = run(["eval", "--z=-1,0", "--q", "R"], capsys)
    assert code == 2
    assert "error" in err


def test_eval_bad_point_syntax(capsys):
    code, _, err = run(["eval", "--z", "1;0", "--q", "S"], capsys)
    assert code == 2


def test_constants_json(capsys):
    code, out, _ = run(["constants", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert 1.6267 < payload["y_star"] < 1.6268
    assert 0.6861 <= payload["s_at_y_star"] <= 0.6863
    lo, hi = payload["brackets"]["y_star"]
    assert hi - lo <= 1e-6


def test_deriv_within_bound(capsys):
    code, out, _ = run(["deriv", "--n", "3", "--z", "2,1"], capsys)
    assert code == 0
    assert "within_bound" in out


def test_deriv_requires_interior(capsys):
    code, _, err = run(["deriv", "--n", "1", "--z", "0,2"], capsys)
    assert code == 2


def test_verify_quick_exit_zero(capsys):
    code, out, _ = run(["verify", "--level", "quick", "--seed", "5"], capsys)
    assert code == 0
    assert out.count("\n") >= 22  # one line per suite plus the summary


def test_sum_both_methods(capsys):
    code, out, err = run(
        ["sum", "--x0", "25", "--delta", "0.05", "--n", "200", "--method", "both"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert any("direct" in ln for ln in lines)
    assert any("euler_maclaurin" in ln for ln in lines)
    assert any("discrepancy" in ln for ln in lines)


def test_sum_warns_when_bound_exceeds_tol(capsys):
    code, _, err = run(
        ["sum", "--x0", "1", "--delta", "0.5", "--n", "50",
         "--order", "8", "--method", "em", "--tol", "1e-12"],
        capsys,
    )
    assert code == 0
    assert "warning" in err.lower()


def test_grid_small_file(tmp_path, capsys):
    out_file = tmp_path / "g.dat"
    code, _, _ = run(
        ["grid", "--quantity", "absS", "--out", str(out_file),
         "--rows", "5", "--cols", "4"],
        capsys,
    )
    assert code == 0
    blocks = out_file.read_text().strip().split("\n\n")
    assert len(blocks) == 4
    for block in blocks:
        rows = block.splitlines()
        assert len(rows) == 5
        x0 = rows[0].split()[0]
        assert all(r.split()[0] == x0 for r in rows)  # constant x per block
        for r in rows:
            x, y, v = map(float, r.split())
            assert 0.0 < v <= 1.0 + 1e-12


def test_grid_header(tmp_path, capsys):
    out_file = tmp_path / "h.dat"
    code, _, _ = run(
        ["grid", "--quantity", "imS", "--out", str(out_file),
         "--rows", "3", "--cols", "3", "--header"],
        capsys,
    )
    assert code == 0
    first = out_file.read_text().splitlines()[0]
    assert first.startswith("# quantity=imS")


def test_grid_rejects_bad_shape(capsys):
    code, _, err = run(
        ["grid", "--quantity", "absS", "--out", "/dev/null", "--rows", "1"],
        capsys,
    )
    assert code == 2
