import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ratliffrush.cli import run
from ratliffrush.monomial import MonomialIdeal
from ratliffrush.parsing import IdealSpec, ParseError, parse_ideal, serialize

from known_ideals import THREE_29, THREE_41_COUNTS

EX1_TEXT = "x^29, y^29, z^29, x^28*y^8*z^8, x^8*y^28*z^8, x^8*y^8*z^28"
EX3_TEXT = "x^41, y^41, z^41, x^40*y^5*z^5, x^5*y^40*z^5, x^5*y^5*z^40"
BAD_TEXT = "x^3, y^3, z^3, x*y*z"


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_examples():
    spec = parse_ideal(BAD_TEXT)
    assert spec.variables == ("x", "y", "z")
    assert spec.to_ideal() == MonomialIdeal([(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)])
    assert parse_ideal(EX1_TEXT).to_ideal() == THREE_29
    unit = parse_ideal("x^0").to_ideal()
    assert unit.is_unit and unit.n == 1


def test_parse_header_and_comments():
    spec = parse_ideal("# ideal\nvars: z, y, x\nx^2,  # first\n y*x, z\n")
    assert spec.variables == ("z", "y", "x")
    assert spec.to_ideal() == MonomialIdeal([(0, 0, 2), (0, 1, 1), (1, 0, 0)])


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("x^3, y^-2", 1, 8),
        ("x^3,\ny^2 z", 2, 5),
        ("vars: x, y\nx, w", 2, 4),
        ("x^, y", 1, 3),
        ("", 1, 1),
        ("x $ y", 1, 3),
    ],
)
def test_parse_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse_ideal(text)
    assert (exc.value.line, exc.value.col) == (line, col)


names = st.sampled_from(["x", "y", "z", "w", "t1"])


@given(st.lists(names, min_size=1, max_size=5, unique=True).flatmap(
    lambda vs: st.tuples(
        st.just(tuple(vs)),
        st.lists(st.dictionaries(st.sampled_from(vs), st.integers(1, 40)), min_size=1, max_size=6),
    )
))
def test_round_trip(args):
    variables, gens = args
    spec = IdealSpec(variables, tuple({v: g[v] for v in variables if v in g} for g in gens))
    assert parse_ideal(serialize(spec)) == spec


def test_classify_reports_witness(capsys):
    code, out, _ = call(capsys, "classify", BAD_TEXT)
    assert code == 0
    assert "verdict: bad" in out and "x^2*y^2*z^2" in out


def test_closure_text_and_json(capsys):
    code, out, _ = call(capsys, "closure", EX1_TEXT)
    assert code == 0 and "added: x^26*y^26*z^26" in out
    code, out, _ = call(capsys, "closure", EX1_TEXT, "--format", "json")
    data = json.loads(out)
    assert data["command"] == "closure" and data["input"]["vars"] == ["x", "y", "z"]
    assert data["result"]["added"] == [[26, 26, 26]]


def test_json_is_byte_stable(capsys):
    outs = [call(capsys, "stabilize", EX1_TEXT, "--format", "json", "--threads", str(t))[1] for t in (1, 2, 1)]
    assert outs[0] == outs[1] == outs[2]


def test_exit_codes(capsys):
    assert call(capsys, "classify", "x^3, y^")[0] == 2
    assert call(capsys, "classify", "x^3, x*y")[0] == 3
    code, out, err = call(capsys, "closure", BAD_TEXT, "--format", "json")
    assert code == 4
    assert "oracle" in err and "x^2*y^2*z^2" in err
    assert json.loads(out)["error"]["witness"]["monomial"] == [2, 2, 2]
    assert call(capsys, "box-ideal", BAD_TEXT, "--box", "1,0")[0] == 2
    assert call(capsys, "closure", BAD_TEXT, "--skip-classify")[0] == 0


def test_other_commands(capsys, tmp_path):
    f = tmp_path / "ideal.txt"
    f.write_text("vars: x, y\nx^5, y^5, x*y^4, x^4*y\n")
    code, out, _ = call(capsys, "box-ideal", "-f", str(f), "--box", "1,0")
    assert code == 0 and "<y^5, x*y^4, x^3*y^2, x^4*y, x^5>" in out
    code, out, _ = call(capsys, "power", "-f", str(f), "--exp", "2")
    assert "size: 9" in out
    code, out, _ = call(capsys, "colon", EX1_TEXT, "--by", "x^29")
    assert code == 0 and "colon: <" in out
    code, out, _ = call(capsys, "very-good", "x^2, x*y, y^2")
    assert "very_good: True" in out
    code, out, _ = call(capsys, "freiman", "x^2, x*y, y^2, x*z, y*z, z^2", "--format", "json")
    assert json.loads(out)["result"]["verdict"] == "freiman"
    code, out, _ = call(capsys, "stabilize", EX1_TEXT, "--axis", "y")
    assert "axis y: q = 2" in out and "x^16*y^27*z^16" in out


def test_stdin_through_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ratliffrush", "very-good", "-"],
        input="x^2, x*y, y^2\n", capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "very_good: True" in proc.stdout


@pytest.mark.slow
def test_oracle_chain_on_three_41(capsys):
    code, out, _ = call(capsys, "oracle", EX3_TEXT, "--kmax", "14", "--format", "json")
    data = json.loads(out)["result"]
    assert code == 0
    assert data["counts"][1:] == THREE_41_COUNTS
    assert sorted(map(tuple, data["added"])) == [(34, 35, 35), (35, 34, 35), (35, 35, 34)]
