"""Canonical JSON round-trips and input validation."""

from fractions import Fraction

import pytest

from roncoalg.homology import HomologyReport, hr0
from roncoalg.jsonio import (
    algebra_to_obj,
    dumps_algebra,
    dumps_canonical,
    loads_algebra,
    obj_to_algebra,
    report_to_obj,
    ronco_element_to_obj,
    vectors_to_obj,
)
from roncoalg.lincomb import LinComb
from roncoalg.ronco import eval_term, truncate_to_structure
from roncoalg.structure import MuAlgebra, StructureAlgebra, free_nil2, ronco_to_mu
from roncoalg.terms import parse_term

GOLDEN_T12 = """\
{
  "dim": 2,
  "kind": "leibniz",
  "bracket": [
    {
      "i": 1,
      "j": 1,
      "c": [
        {
          "k": 2,
          "v": "1"
        }
      ]
    }
  ]
}
"""


def test_golden_dump():
    assert dumps_algebra(truncate_to_structure(1, 2)) == GOLDEN_T12


def test_round_trips():
    for x in (
        truncate_to_structure(1, 2),
        truncate_to_structure(2, 3),
        free_nil2(3),
        StructureAlgebra(0),
        ronco_to_mu(truncate_to_structure(2, 3)),
        MuAlgebra(2, lie_bracket={(0, 1): {0: Fraction(-1, 3)}, (1, 0): {0: Fraction(1, 3)}}),
    ):
        assert loads_algebra(dumps_algebra(x)) == x


def test_dump_is_insertion_order_independent():
    one = Fraction(1)
    a = StructureAlgebra(3, {(0, 1): {2: one}, (1, 0): {2: -one}})
    b = StructureAlgebra(3, {(1, 0): {2: -one}, (0, 1): {2: one}})
    assert dumps_algebra(a) == dumps_algebra(b)


def test_dumps_canonical_shape():
    assert dumps_canonical({"a": 1}) == '{\n  "a": 1\n}\n'
    obj = algebra_to_obj(ronco_to_mu(truncate_to_structure(1, 2)))
    assert obj["kind"] == "mu"
    assert obj["lie_bracket"] == []
    assert obj["product"] == [{"i": 1, "j": 1, "c": [{"k": 2, "v": "1"}]}]


@pytest.mark.parametrize("obj", [
    [],
    {"kind": "leibniz", "bracket": []},
    {"dim": -1, "kind": "leibniz", "bracket": []},
    {"dim": "2", "kind": "leibniz", "bracket": []},
    {"dim": 2},
    {"dim": 2, "kind": "lie", "bracket": []},
    {"dim": 2, "kind": "leibniz"},
    {"dim": 2, "kind": "mu", "lie_bracket": []},
    {"dim": 2, "kind": "leibniz", "bracket": {}},
    {"dim": 2, "kind": "leibniz", "bracket": [{"i": 1, "j": 1}]},
    {"dim": 2, "kind": "leibniz", "bracket": [{"i": 1, "j": 3, "c": []}]},
    {"dim": 2, "kind": "leibniz", "bracket": [{"i": 0, "j": 1, "c": []}]},
    {"dim": 2, "kind": "leibniz",
     "bracket": [{"i": 1, "j": 1, "c": []}, {"i": 1, "j": 1, "c": []}]},
    {"dim": 2, "kind": "leibniz",
     "bracket": [{"i": 1, "j": 1, "c": [{"k": 2, "v": "1"}, {"k": 2, "v": "1"}]}]},
    {"dim": 2, "kind": "leibniz", "bracket": [{"i": 1, "j": 1, "c": [{"k": 3, "v": "1"}]}]},
    {"dim": 2, "kind": "leibniz", "bracket": [{"i": 1, "j": 1, "c": [{"k": 2}]}]},
    {"dim": 2, "kind": "leibniz", "bracket": [{"i": 1, "j": 1, "c": [{"k": 2, "v": "0.5"}]}]},
    {"dim": 2, "kind": "leibniz", "bracket": [{"i": 1, "j": 1, "c": [{"k": 2, "v": "1/0"}]}]},
    {"dim": 2, "kind": "leibniz", "bracket": [{"i": 1, "j": 1, "c": [{"k": 2, "v": 1}]}]},
])
def test_rejects_malformed_algebra_objects(obj):
    with pytest.raises(ValueError):
        obj_to_algebra(obj)


def test_ronco_element_to_obj():
    x = eval_term(parse_term("2*g1 - 1/2*[g1,g2]"), num_gens=2)
    assert ronco_element_to_obj(x, 2) == {
        "deg1": ["2", "0"],
        "higher": [["1", 2, "-1/2"]],
    }
    assert ronco_element_to_obj(LinComb(), 3) == {"deg1": ["0", "0", "0"], "higher": []}
    # higher-degree entries come out in graded order
    y = eval_term(parse_term("[[g1,g2],[g1,g3]]"), num_gens=3)
    obj = ronco_element_to_obj(y, 3)
    assert obj["deg1"] == ["0", "0", "0"]
    words = [entry[0] for entry in obj["higher"]]
    assert words == sorted(words, key=lambda w: (len(w), w))


def test_report_to_obj():
    report = HomologyReport(1, ((Fraction(1, 2), Fraction(0)),))
    assert report_to_obj(report) == {"dimension": 1, "representatives": [["1/2", "0"]]}
    obj = report_to_obj(hr0(free_nil2(2)))
    assert obj["dimension"] == 3
    assert len(obj["representatives"]) == 3
    assert all(len(vec) == 6 for vec in obj["representatives"])


def test_vectors_to_obj():
    assert vectors_to_obj([(Fraction(1), Fraction(-2, 3))]) == [["1", "-2/3"]]
    assert vectors_to_obj([]) == []
