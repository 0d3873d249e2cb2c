import json
from fractions import Fraction

import pytest

from quantale.ddf import StepDDF, unit_jump
from quantale.errors import ParseError
from quantale.formats import (
    ddf_from_json,
    ddf_to_json,
    distance_to_csv,
    dump_json,
    fuzzy_from_json,
    fuzzy_to_json,
    parse_distance_csv,
    parse_map_file,
    parse_quantale_tables,
    parse_relation,
)

F = Fraction

THREE_Q = """
# a 3-chain with the drastic tensor
elements = [bot, x, top]
leq = [(bot, x), (x, top)]
tensor = { (bot,bot): bot, (bot,x): bot, (bot,top): bot,
           (x,x): bot, (x,top): x, (top,top): top }
unit = top
"""


def test_quantale_file_parses_with_closure_and_symmetry():
    labels, leq, tensor, unit = parse_quantale_tables(THREE_Q)
    assert labels == ["bot", "x", "top"]
    assert leq[0][2]  # transitive closure filled bot <= top
    assert leq[1][1]  # reflexivity implied
    assert tensor[2][1] == tensor[1][2] == 1  # symmetric fill
    assert unit == 2


def test_quantale_file_rejects_incomplete_tensor():
    broken = THREE_Q.replace("(x,top): x,", "")
    with pytest.raises(ParseError) as exc:
        parse_quantale_tables(broken)
    assert "incomplete" in str(exc.value)


def test_quantale_file_rejects_ambiguous_tensor():
    broken = THREE_Q.replace("(x,top): x,", "(x,top): x, (top,x): top,")
    with pytest.raises(ParseError) as exc:
        parse_quantale_tables(broken)
    assert "ambiguous" in str(exc.value)


def test_quantale_file_rejects_unknown_label():
    broken = THREE_Q.replace("unit = top", "unit = zap")
    with pytest.raises(ParseError):
        parse_quantale_tables(broken)


def test_ddf_json_round_trip():
    f = StepDDF.from_jumps([(F(1, 2), F(1, 3)), (2, 1)])
    data = ddf_to_json(f)
    assert ddf_from_json(data) == f
    assert ddf_from_json(json.loads(dump_json(data))) == f


def test_ddf_json_accepts_bare_array():
    f = ddf_from_json([{"breakpoint": "1/2", "value": "1"}])
    assert f == unit_jump(F(1, 2))


def test_ddf_json_checks_value_at_infinity():
    data = {"steps": [{"breakpoint": "1", "value": "1/2"}], "value_at_infinity": "1"}
    with pytest.raises(ParseError):
        ddf_from_json(data)


def test_ddf_json_rejects_noncanonical_data():
    with pytest.raises(ParseError):
        ddf_from_json([{"breakpoint": "2", "value": "1"}, {"breakpoint": "1", "value": "1/2"}])


def test_distance_csv_round_trip():
    d = parse_distance_csv(",a,b\na,0,1/2\nb,inf,0\n")
    assert d.entries[1][0].is_infinite
    assert distance_to_csv(d) == ",a,b\na,0,1/2\nb,inf,0\n"


def test_distance_csv_rejects_bad_labels():
    with pytest.raises(ParseError):
        parse_distance_csv(",a,b\nb,0,1\na,1,0\n")


def test_distance_csv_rejects_float_noise():
    with pytest.raises(ParseError):
        parse_distance_csv(",a,b\na,0,0.5x\nb,1,0\n")


def test_relation_parse():
    points, pairs = parse_relation("points = a b c\na a # self\na b\n")
    assert points == ["a", "b", "c"]
    assert pairs == [("a", "a"), ("a", "b")]
    points, _ = parse_relation("a b\nb c\n")
    assert points == ["a", "b", "c"]


def test_map_file_parse():
    assert parse_map_file("bot -> x\nx->bot\n# done\n") == [("bot", "x"), ("x", "bot")]
    with pytest.raises(ParseError):
        parse_map_file("bot x\n")
    with pytest.raises(ParseError):
        parse_map_file("\n")


def test_fuzzy_json_round_trip():
    fam_data = {
        "points": ["a", "b"],
        "tnorm": "min",
        "entries": {
            "a,a": [{"breakpoint": "0", "value": "1"}],
            "b,b": [{"breakpoint": "0", "value": "1"}],
            "a,b": [{"breakpoint": "1", "value": "1"}],
            "b,a": [{"breakpoint": "2", "value": "1"}],
        },
    }
    fam = fuzzy_from_json(fam_data)
    assert fam.entries[0][1] == unit_jump(1)
    back = fuzzy_to_json(fam)
    assert fuzzy_from_json(back).entries == fam.entries


def test_fuzzy_json_missing_entry():
    with pytest.raises(ParseError):
        fuzzy_from_json({"points": ["a", "b"], "tnorm": "min", "entries": {}})


def test_dump_json_is_deterministic():
    data = {"b": 1, "a": [2, 1]}
    assert dump_json(data) == dump_json(dict(reversed(list(data.items()))))
    assert dump_json(data).endswith("\n")
