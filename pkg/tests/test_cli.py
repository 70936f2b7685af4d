from pathlib import Path

from qcss.cli import load_css, main
from qcss.named import extended_hamming_8


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_rm_quantum(capsys):
    code, out = run(capsys, "rm", "--m", "4", "--r", "1")
    assert code == 0
    assert "[[16,6,4]]" in out


def test_rm_code_roundtrip(tmp_path, capsys):
    code, out = run(capsys, "rm", "--m", "3", "--r", "1", "--emit", "code")
    assert code == 0
    assert out.splitlines()[0] == "4 8"


def test_pg_quantum(capsys):
    code, out = run(capsys, "pg", "--k", "3", "--q", "2", "--l", "2")
    assert code == 0
    assert "[[16,6,4]]" in out


def test_bch_search_contains_table_row(capsys):
    code, out = run(capsys, "bch-search", "--n", "15")
    assert code == 0
    assert "0x9AF" in out


def test_construct_shorten(tmp_path, capsys):
    src = tmp_path / "ext.code"
    src.write_text(extended_hamming_8().to_text())
    out_path = tmp_path / "steane.code"
    code, out = run(
        capsys, "construct", "shorten", "--in", str(src), "--out", str(out_path),
        "--coordinate", "0",
    )
    assert code == 0
    assert "[7,3]" in out
    assert out_path.read_text().splitlines()[0] == "3 7"


def test_construct_plotkin(tmp_path, capsys):
    from qcss.reedmuller import rm_generator

    a = tmp_path / "a.code"
    b = tmp_path / "b.code"
    a.write_text(rm_generator(3, 1).code.to_text())
    b.write_text(rm_generator(3, 0).code.to_text())
    out_path = tmp_path / "out.code"
    code, out = run(
        capsys, "construct", "plotkin", "--in", str(a), "--in", str(b),
        "--out", str(out_path),
    )
    assert code == 0
    assert "[16,5]" in out


def test_construct_arity_error(tmp_path, capsys):
    src = tmp_path / "ext.code"
    src.write_text(extended_hamming_8().to_text())
    code = main(["construct", "plotkin", "--in", str(src), "--out", str(tmp_path / "x")])
    assert code == 2


def test_min_distance_and_spectrum(tmp_path, capsys):
    src = tmp_path / "ext.code"
    src.write_text(extended_hamming_8().to_text())
    code, out = run(capsys, "min-distance", "--code", str(src))
    assert code == 0 and "minimum distance 4" in out
    code, out = run(capsys, "min-distance", "--code", str(src), "--split", "--bound", "3")
    assert code == 0 and "no codeword of weight <= 3" in out
    csv = tmp_path / "spec.csv"
    code, _ = run(capsys, "spectrum", "--code", str(src), "--out", str(csv))
    assert code == 0
    assert "4,14" in csv.read_text()


def test_css_build_and_simulate(tmp_path, capsys):
    css_path = tmp_path / "rm.css"
    code, out = run(
        capsys, "css-build", "--decoder", "reed", "--decoder-args", "4", "1",
        "--out", str(css_path),
    )
    assert code == 0 and "[[16,6,4]]" in out
    css = load_css(str(css_path))
    assert css.parameters() == (16, 6, 4)
    code, out = run(
        capsys, "simulate", "--css", str(css_path), "--p", "0.01",
        "--trials", "500", "--seed", "5",
    )
    assert code == 0 and "trials=500" in out


def test_css_build_lookup_roundtrip(tmp_path, capsys):
    from qcss.named import steane_component

    src = tmp_path / "steane.code"
    src.write_text(steane_component().to_text())
    css_path = tmp_path / "steane.css"
    code, out = run(
        capsys, "css-build", "--decoder", "lookup", "--c1", str(src),
        "--out", str(css_path),
    )
    assert code == 0
    css = load_css(str(css_path))
    assert css.parameters()[:2] == (7, 1)


def test_error_reporting(tmp_path, capsys):
    bad = tmp_path / "bad.code"
    bad.write_text("not a matrix\n")
    code = main(["min-distance", "--code", str(bad)])
    assert code == 1
