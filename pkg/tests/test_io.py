import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matpatience import io as mio
from matpatience.games import shapley_snow_kernels, solve_game
from matpatience.switching import CutInstance
from strategies import matrices, rationals


@given(rationals(10 ** 6, 10 ** 6))
def test_rational_round_trip(q):
    assert mio.parse_rational(mio.format_rational(q)) == q


def test_rational_format():
    assert mio.format_rational(Fraction(3)) == "3"
    assert mio.format_rational(Fraction(-6, 4)) == "-3/2"
    assert mio.parse_rational(" 7/14 ") == Fraction(1, 2)
    assert mio.parse_rational(5) == 5
    for bad in (0.5, "0.5", "1e3", "abc", "1/0", True, None):
        with pytest.raises(mio.FormatError):
            mio.parse_rational(bad)


@given(matrices(st.integers(1, 4), st.integers(1, 4)))
def test_matrix_json_and_csv_round_trip(M):
    obj = json.loads(mio.dumps(mio.matrix_to_json(M)))
    assert (mio.matrix_from_json(obj) == M).all()
    assert (mio.matrix_from_csv(mio.matrix_to_csv(M)) == M).all()


def test_bare_arrays_and_errors():
    assert mio.matrix_from_json([[1, "1/2"]]).shape == (1, 2)
    with pytest.raises(mio.FormatError) as exc:
        mio.matrix_from_json({"rows": 1, "cols": 2, "entries": [[1]]})
    assert exc.value.field == "entries[0]"
    with pytest.raises(mio.FormatError):
        mio.matrix_from_json([])
    with pytest.raises(mio.FormatError):
        mio.matrix_from_json({"rows": 1, "cols": 1})
    with pytest.raises(mio.FormatError):
        mio.matrix_from_json("x")
    with pytest.raises(mio.FormatError):
        mio.matrix_from_csv("\n")


def test_load_matrix(tmp_path):
    p = tmp_path / "m.csv"
    p.write_text("1,0\n0,1\n")
    assert mio.load_matrix(p).shape == (2, 2)
    p = tmp_path / "m.json"
    p.write_text("{not json")
    with pytest.raises(mio.FormatError):
        mio.load_matrix(p)


def test_dumps_is_deterministic():
    sol = solve_game([[1, -1], [-1, 1]])
    a = mio.dumps(mio.solution_to_json(sol))
    assert a == mio.dumps(mio.solution_to_json(solve_game([[1, -1], [-1, 1]])))
    assert a.endswith("\n") and "\r" not in a
    assert json.loads(a)["maximin"] == ["1/2", "1/2"]
    (k,) = shapley_snow_kernels([[1, -1], [-1, 1]])
    assert mio.kernel_to_json(k)["rows"] == [0, 1]


def test_cut_round_trip_and_errors():
    G = CutInstance(3, ((0, 1, Fraction(1, 2)), (1, 2, -2)), (0, 1, 0))
    assert mio.cut_from_json(json.loads(mio.dumps(mio.cut_to_json(G)))) == G
    for bad in ([], {"vertices": -1}, {"vertices": 2, "edges": [[0, 0, 1]]}, {"vertices": 2, "edges": [[0, 1]]}):
        with pytest.raises(mio.FormatError):
            mio.cut_from_json(bad)
