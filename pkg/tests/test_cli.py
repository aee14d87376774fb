import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import cyclomat as cy
from cyclomat.cli import DigraphDocument, ParseError, emit, main, parse


def run_cli(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_examples():
    assert parse("n 2\ne 1 2 1 4\n").to_digraph().a == ((0, 1), (4, 0))
    assert parse("n 2\nc 1 1\nc 2 -1\ne 1 2 1 2\n").to_digraph().a == ((1, 1), (2, -1))
    assert parse("n 1\n").to_digraph().a == ((0,),)
    assert parse("# all comments\nn 2 # trailing\ne 1 2 1 1\n").to_digraph().a == (
        (0, 1),
        (1, 0),
    )


@pytest.mark.parametrize(
    "text,line,column",
    [
        ("n 2\ne 1 2 1\n", 2, 1),
        ("n 2\ne 1 1 1 1\n", 2, 5),
        ("e 1 2 1 1\n", 1, 1),
        ("n 2\nn 3\n", 2, 1),
        ("n 2\ne 1 2 1 2\ne 2 1 2 1\n", 3, 3),
        ("n 2\nc 1 1\nc 1 2\n", 3, 3),
        ("n 2\ne 1 5 1 1\n", 2, 5),
        ("n 2\nz 1\n", 2, 1),
        ("n 0\n", 1, 3),
        ("", 1, 1),
    ],
)
def test_parse_errors_with_location(text, line, column):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert (err.value.line, err.value.column) == (line, column)


@st.composite
def documents(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    doc = DigraphDocument(n)
    for v in range(1, n + 1):
        if draw(st.booleans()):
            c = draw(st.integers(min_value=-3, max_value=3))
            if c:
                doc.charges[v] = c
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if draw(st.booleans()):
                aij = draw(st.integers(min_value=-4, max_value=4))
                aji = draw(st.integers(min_value=-4, max_value=4))
                if aij or aji:
                    doc.edges.append((i, j, aij, aji))
    return doc


@settings(max_examples=80, deadline=None)
@given(documents())
def test_parse_emit_roundtrip(doc):
    parsed = parse(emit(doc))
    assert parsed.to_digraph() == doc.to_digraph()


def test_check_command(tmp_path, capsys):
    f = tmp_path / "a1p.dg"
    f.write_text("n 2\ne 1 2 1 4\n")
    code, out, _ = run_cli(capsys, "check", str(f))
    assert code == 0
    assert "sign symmetric: yes" in out
    assert "cyclotomic: yes" in out
    assert "open interval: no" in out
    code, out, _ = run_cli(capsys, "check", str(f), "--json")
    facts = json.loads(out)
    assert facts["a2_equals_4i"] is True


def test_spectrum_command(tmp_path, capsys):
    f = tmp_path / "a1p.dg"
    f.write_text("n 2\ne 1 2 1 4\n")
    code, out, _ = run_cli(capsys, "spectrum", str(f), "--json", "--approx")
    data = json.loads(out)
    assert code == 0
    assert data["char_poly"] == [-4, 0, 1]
    assert data["counts"] == {
        "(-inf,-2)": 0,
        "[-2]": 1,
        "(-2,2)": 0,
        "[2]": 1,
        "(2,inf)": 0,
    }
    assert data["eigenvalues_approx"] == pytest.approx([-2.0, 2.0], abs=1e-9)


def test_spectrum_json_golden(tmp_path, capsys):
    f = tmp_path / "b2.dg"
    f.write_text("n 2\ne 1 2 1 2\n")
    code, out, _ = run_cli(capsys, "spectrum", str(f), "--json")
    assert code == 0
    golden = (
        '{\n  "char_poly": [\n    -2,\n    0,\n    1\n  ],\n  "counts": {\n'
        '    "(-2,2)": 2,\n    "(-inf,-2)": 0,\n    "(2,inf)": 0,\n    "[-2]": 0,\n'
        '    "[2]": 0\n  }\n}\n'
    )
    assert out == golden


def test_symmetrize_command(tmp_path, capsys):
    f = tmp_path / "g2t.dg"
    f.write_text("n 3\ne 1 2 1 1\ne 2 3 1 3\n")
    code, out, _ = run_cli(capsys, "symmetrize", str(f), "--json")
    data = json.loads(out)
    assert code == 0 and data["dsq"] == [1, 1, 3]
    bad = tmp_path / "bad.dg"
    bad.write_text("n 3\ne 1 2 1 1\ne 2 3 1 1\ne 1 3 2 1\n")
    code, out, _ = run_cli(capsys, "symmetrize", str(bad))
    assert code == 1 and "not symmetrizable" in out


def test_equiv_command(tmp_path, capsys):
    o4p = cy.generate("O4prime")
    f1 = tmp_path / "a.dg"
    f2 = tmp_path / "b.dg"
    f1.write_text(emit(DigraphDocument.from_digraph(o4p)))
    f2.write_text(emit(DigraphDocument.from_digraph(cy.transpose(o4p))))
    code, out, _ = run_cli(capsys, "equiv", str(f1), str(f2), "--json")
    data = json.loads(out)
    assert code == 0 and data["equivalent"]
    w = cy.SignedPermutation(
        tuple(data["witness"]["perm"]),
        tuple(data["witness"]["signs"]),
        data["witness"]["negate"],
    )
    assert cy.apply(o4p, w) == cy.transpose(o4p)
    f3 = tmp_path / "c.dg"
    f3.write_text("n 4\ne 1 2 1 1\ne 2 3 1 1\ne 3 4 1 1\n")
    code, out, _ = run_cli(capsys, "equiv", str(f1), str(f3))
    assert code == 0 and "not equivalent" in out


def test_family_command_roundtrip(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "family", "C~4'")
    assert code == 0
    assert parse(out).to_digraph() == cy.generate("Ctilde_prime", 4)
    code, out, _ = run_cli(capsys, "family", "L", "6")
    assert parse(out).to_digraph() == cy.generate("L", 6)
    code, out, err = run_cli(capsys, "family", "Q9")
    assert code == 2 and "error" in err


def test_classify_command(tmp_path, capsys):
    png = tmp_path / "classes.png"
    code, out, _ = run_cli(
        capsys, "classify", "--max-order", "3", "--nonsymmetric", "--json",
        "--plot", str(png),
    )
    assert code == 0
    data = json.loads(out)
    assert set(data["orders"]) == {"2", "3"}
    assert png.stat().st_size > 1000
    fams = {e["family"] for e in data["orders"]["2"]}
    assert "A~1'" in fams


def test_verify_command_exit_codes(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "verify", "theorem1", "--max-order", "4")
    assert code == 0 and "PASS" in out
    code, out, _ = run_cli(capsys, "verify", "theorem2", "--max-order", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"] is True
    code, out, _ = run_cli(capsys, "verify", "corollary5", "--max-order", "3")
    assert code == 0 and "PASS" in out
    png = tmp_path / "verify.png"
    code, out, _ = run_cli(
        capsys, "verify", "corollary3", "--max-order", "4", "--plot", str(png)
    )
    assert code == 0 and "G~2" in out


def test_usage_and_parse_error_exit_codes(tmp_path, capsys):
    assert main(["bogus-subcommand"]) == 2
    capsys.readouterr()
    missing = tmp_path / "missing.dg"
    assert main(["check", str(missing)]) == 2
    capsys.readouterr()
    bad = tmp_path / "bad.dg"
    bad.write_text("n 2\ne 1 5 1 1\n")
    code, _, err = run_cli(capsys, "check", str(bad))
    assert code == 2 and "line 2" in err


def test_env_cap_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("CYCLOMAT_MAX_ORDER", "2")
    code, _, err = run_cli(capsys, "classify", "--max-order", "3")
    assert code == 2 and "cap" in err
    monkeypatch.setenv("CYCLOMAT_MAX_ORDER", "3")
    code, _, _ = run_cli(capsys, "classify", "--max-order", "3")
    assert code == 0


def test_spectrum_plot(tmp_path, capsys):
    f = tmp_path / "b2.dg"
    f.write_text("n 2\ne 1 2 1 2\n")
    png = tmp_path / "spectrum.png"
    code, _, _ = run_cli(capsys, "spectrum", str(f), "--plot", str(png))
    assert code == 0 and png.stat().st_size > 1000
