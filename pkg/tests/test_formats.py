import json

import pytest

from catmirror import (
    EMPTY_PCDD, LEAF, POINT_PCDD, NctLabeledTree, Node, QuadDissection, ValidationError,
    format_obj, gen_dissections, gen_ncts, gen_pcdds, gen_ternary, medial, parse, phi,
)
from catmirror.formats import ParseError, from_json, kind_of, to_json


def test_format_examples(fig_dissection):
    assert format_obj(phi(fig_dissection)) == "nct 5: 1-2,1-3,3-4,3-5"
    assert format_obj(fig_dissection) == "qd 5: 1-4,5-8,5-10"
    assert format_obj(NctLabeledTree(1, [])) == "nct 1:"
    assert format_obj(QuadDissection(2, [])) == "qd 2:"
    assert format_obj(LEAF) == "*"
    assert format_obj(Node(LEAF, LEAF, LEAF)) == "(* * *)"
    assert format_obj(EMPTY_PCDD) == "pcdd 0:"


def test_parse_examples():
    assert parse("qd", "qd 3: 1-4") == QuadDissection(3, [(1, 4)])
    assert parse("nct", "  nct 3 :  2-3 , 1-2 ") == NctLabeledTree(3, [(1, 2), (2, 3)])
    assert parse(None, "((* * *) * *)") == Node(Node(LEAF, LEAF, LEAF), LEAF, LEAF)
    assert parse(None, "pcdd 0:") == EMPTY_PCDD
    assert parse("nct", "nct 1:") == NctLabeledTree(1, [])


def test_edges_are_sorted_on_output():
    assert format_obj(parse("nct", "nct 4: 3-4,2-1,1-3")) == "nct 4: 1-2,1-3,3-4"


def test_point_pcdd_text():
    text = format_obj(POINT_PCDD)
    assert text.startswith("pcdd 1:")
    assert parse("pcdd", text) == POINT_PCDD


def test_medial_text(fig_tree):
    p = medial(fig_tree)
    text = format_obj(p)
    assert text.startswith("pcdd 4: darts=")
    assert parse(None, text) == p


@pytest.mark.parametrize("text,pos", [
    ("nct 3: 1-2,x-3", 11),
    ("(* * *", 6),
    ("(* * *) *", 8),
    ("(* * #)", 5),
])
def test_parse_error_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        parse(None, text)
    assert exc.value.pos == pos
    assert "position" in str(exc.value)


def test_parse_header_errors():
    with pytest.raises(ParseError):
        parse("qd", "nct 3: 1-2")
    with pytest.raises(ParseError):
        parse("pcdd", "pcdd 2: darts=0>1 chains=[0 1] flag=5")
    with pytest.raises(ParseError):
        parse("pcdd", "pcdd 0: darts=")


def test_validation_runs_after_parse():
    with pytest.raises(ValidationError):
        parse("nct", "nct 4: 1-3,2-4,1-2")
    with pytest.raises(ValidationError):
        parse("qd", "qd 3: 1-3")
    # check=False skips validation
    t = parse("nct", "nct 4: 1-3,2-4,1-2", check=False)
    assert len(t.edges) == 3


def test_parse_errors_are_value_errors():
    assert issubclass(ParseError, ValueError)


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_trees_and_dissections(n):
    for t in gen_ncts(n):
        s = format_obj(t)
        assert parse("nct", s) == t
        assert format_obj(parse(None, s)) == s
    for q in gen_dissections(n):
        s = format_obj(q)
        assert parse("qd", s) == q
        assert format_obj(parse(None, s)) == s


@pytest.mark.parametrize("m", range(0, 6))
def test_round_trip_ternary_and_pcdd(m):
    seen = set()
    for T in gen_ternary(m):
        s = format_obj(T)
        assert parse("ternary", s) == T
        seen.add(s)
    assert len(seen) == len(gen_ternary(m))
    for p in gen_pcdds(m):
        s = format_obj(p)
        assert parse("pcdd", s) == p
        assert format_obj(parse(None, s)) == s


def test_format_is_injective():
    texts = [format_obj(t) for t in gen_ncts(6)]
    assert len(set(texts)) == len(texts)


def test_json_round_trip(fig_tree, fig_dissection):
    objs = [fig_tree, fig_dissection, Node(LEAF, Node(LEAF, LEAF, LEAF), LEAF),
            EMPTY_PCDD, POINT_PCDD, medial(fig_tree)]
    for obj in objs:
        d = to_json(obj)
        assert d["kind"] == kind_of(obj)
        assert from_json(json.loads(json.dumps(d))) == obj


def test_json_shape(fig_tree):
    assert to_json(fig_tree) == {"kind": "nct", "n": 5, "edges": [[1, 2], [1, 3], [3, 4], [3, 5]]}
    with pytest.raises(ValueError):
        from_json({"kind": "graph"})
    with pytest.raises(TypeError):
        kind_of(42)
