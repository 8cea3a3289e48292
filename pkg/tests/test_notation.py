"""Parser, canonical printer, and result encoding."""

import json

import pytest

from liftprop import (
    CODIAG,
    EMPTY,
    EMPTY_TO_PT,
    INDISC,
    PT,
    SIERP,
    VEE,
    MonotoneMap,
    ParseError,
    ValidationError,
    elaborate,
    encode_result,
    enumerate_preorders,
    lifting_check,
    parse,
    print_map,
    print_query,
    print_result,
    print_space,
)
from liftprop.notation import (
    CheckQuery,
    CountsOutcome,
    EnumerateQuery,
    EpiQuery,
    HomQuery,
    LiftOutcome,
    LiftQuery,
    MapListOutcome,
    MonoQuery,
    OrthogonalQuery,
)


def test_parse_minimal_program():
    program = parse(
        "space S = { a < b }\n"
        "map f : S -> PT = { a |-> pt, b |-> pt }\n"
        "lift f |> f\n"
    )
    assert len(program.declarations) == 2
    assert program.queries == (LiftQuery("f", "f"),)


def test_parse_space_items():
    program = parse("space S = { a, b < c, d <> e }")
    decl = program.declarations[0]
    assert decl.labels == ("a", "b", "c", "d", "e")
    assert decl.generators == (("b", "c"), ("d", "e"), ("e", "d"))


def test_parse_empty_space_and_empty_assignment():
    env = elaborate(parse("space S = { }\nmap f : S -> PT = { }"))
    assert env.spaces["S"] == EMPTY
    assert env.maps["f"].assign == ()


def test_comments_and_spacing_are_insignificant():
    program = parse("# header\nspace S={a<b}  # trailing\n\n\ncheck T0 S")
    assert program.declarations[0].labels == ("a", "b")
    assert program.queries == (CheckQuery("T0", "S"),)


def test_names_may_contain_digits_and_underscores():
    env = elaborate(parse("space S_1 = { x0, _y }"))
    assert env.spaces["S_1"].labels == ("x0", "_y")


def test_two_way_generator_matches_indiscrete_pair():
    one = elaborate(parse("space X = { a < b, b < a }")).spaces["X"]
    two = elaborate(parse("space X = { a <> b }")).spaces["X"]
    assert one == two
    assert one.leq == INDISC.leq


def test_parse_all_query_kinds():
    program = parse(
        "lift CODIAG |> SIERP_TO_PT\n"
        "check pi0-injective CODIAG\n"
        "check hausdorff VEE\n"
        "orthogonal left [] size 2\n"
        "orthogonal right [EMPTY_TO_PT, CODIAG] size 3\n"
        "mono PT_TO_SIERP_CLOSED size 2\n"
        "epi CODIAG size 2\n"
        "hom SIERP PT\n"
        "enumerate 4\n"
    )
    assert program.queries == (
        LiftQuery("CODIAG", "SIERP_TO_PT"),
        CheckQuery("pi0-injective", "CODIAG"),
        CheckQuery("hausdorff", "VEE"),
        OrthogonalQuery("left", (), 2),
        OrthogonalQuery("right", ("EMPTY_TO_PT", "CODIAG"), 3),
        MonoQuery("PT_TO_SIERP_CLOSED", 2),
        EpiQuery("CODIAG", 2),
        HomQuery("SIERP", "PT"),
        EnumerateQuery(4),
    )


def expect_error(text, fragment, line, col):
    with pytest.raises(ParseError) as info:
        parse(text)
    err = info.value
    assert fragment in err.message
    assert (err.line, err.col) == (line, col)


def test_lexical_error_location():
    expect_error("space S = { a ? b }", "unexpected character", 1, 15)
    expect_error("lift f | g", "unexpected character", 1, 8)


def test_unknown_name_errors():
    expect_error("lift NOPE |> CODIAG", "unknown map", 1, 6)
    expect_error("hom NOPE PT", "unknown space", 1, 5)
    expect_error("map f : S -> PT = { }", "unknown space", 1, 9)


def test_declaration_name_errors():
    expect_error("space size = { a }", "keyword", 1, 7)
    expect_error("space PT = { a }", "built-in", 1, 7)
    expect_error("map CODIAG : PT -> PT = { pt |-> pt }", "built-in", 1, 5)
    expect_error("space S = { a }\nspace S = { b }", "already declared", 2, 7)


def test_map_assignment_errors():
    expect_error(
        "space S = { a, b }\nmap f : S -> PT = { a |-> pt }", "not total", 2, 19
    )
    expect_error(
        "space S = { a }\nmap f : S -> PT = { a |-> pt, a |-> pt }", "duplicate assignment", 2, 31
    )
    expect_error(
        "space S = { a }\nmap f : S -> PT = { z |-> pt }", "unknown label 'z'", 2, 21
    )
    expect_error(
        "space S = { a }\nmap f : S -> PT = { a |-> zz }", "unknown label 'zz'", 2, 27
    )


def test_property_errors():
    expect_error("check bogus SIERP", "unknown property", 1, 7)
    expect_error("check pi0-surjective CODIAG", "unknown property", 1, 7)
    expect_error("check T0 CODIAG", "unknown space", 1, 10)
    expect_error("check dense SIERP", "unknown map", 1, 13)


def test_size_errors():
    expect_error("enumerate 6", "hard cap", 1, 11)
    expect_error("mono CODIAG size x", "expected a number", 1, 18)
    expect_error("orthogonal up [] size 2", "'left' or 'right'", 1, 12)


def test_monotonicity_is_a_validation_error_not_a_parse_error():
    text = "space S = { a < b }\nmap f : S -> SIERP = { a |-> s, b |-> b }"
    program = parse(text)
    with pytest.raises(ValidationError) as info:
        elaborate(program)
    assert "not monotone" in info.value.message
    assert info.value.line == 2


def test_space_round_trip_is_exact_up_to_size_3():
    for space in enumerate_preorders(3):
        text = print_space(space, "S")
        env = elaborate(parse(text))
        assert env.spaces["S"] == space
        assert print_space(env.spaces["S"], "S") == text


def test_print_space_is_presentation_insensitive():
    redundant = elaborate(parse("space S = { a < b, b < c, a < c }")).spaces["S"]
    minimal = elaborate(parse("space S = { a < b, b < c }")).spaces["S"]
    assert print_space(redundant) == print_space(minimal)
    loops = elaborate(parse("space S = { x < y, y < x }")).spaces["S"]
    chained = elaborate(parse("space S = { x <> y }")).spaces["S"]
    assert print_space(loops) == print_space(chained) == "space S = { x, y, x <> y }"


def test_print_space_known_forms():
    assert print_space(SIERP) == "space S = { b, s, b < s }"
    assert print_space(VEE) == "space S = { l, m, r, m < l, m < r }"
    assert print_space(EMPTY) == "space S = { }"
    assert print_space(PT, "P") == "space P = { pt }"


def test_map_round_trip_with_declared_spaces():
    f = MonotoneMap(VEE, SIERP, (1, 0, 1))
    env = elaborate(parse(print_map(f, "f")))
    assert env.maps["f"] == f


def test_map_round_trip_uses_builtin_names():
    text = print_map(CODIAG, "g")
    assert text == "map g : TWO -> PT = { p |-> pt, q |-> pt }"
    assert elaborate(parse(text)).maps["g"] == CODIAG


def test_map_round_trip_with_shared_endpoint():
    f = MonotoneMap(*_chain_pair())
    env = elaborate(parse(print_map(f, "f")))
    assert env.maps["f"] == f


def _chain_pair():
    chain = elaborate(parse("space C = { a < b }")).spaces["C"]
    return chain, chain, (0, 0)


def test_map_round_trip_everywhere_small():
    from liftprop import hom_enumerate

    for p in enumerate_preorders(2):
        for q in enumerate_preorders(2):
            for f in hom_enumerate(p, q):
                assert elaborate(parse(print_map(f, "f"))).maps["f"] == f


def test_query_round_trip_all_kinds():
    texts = [
        "lift CODIAG |> SIERP_TO_PT",
        "check pi0-injective CODIAG",
        "check hausdorff VEE",
        "orthogonal left [] size 2",
        "orthogonal right [EMPTY_TO_PT, CODIAG] size 3",
        "mono PT_TO_SIERP_CLOSED size 2",
        "epi CODIAG size 2",
        "hom SIERP PT",
        "enumerate 4",
    ]
    for text in texts:
        query = parse(text).queries[0]
        assert print_query(query) == text
        assert parse(print_query(query)).queries[0] == query


def test_print_result_shapes():
    holding = LiftOutcome("lift EMPTY_TO_PT |> CODIAG", lifting_check(EMPTY_TO_PT, CODIAG))
    assert print_result(holding) == "lift EMPTY_TO_PT |> CODIAG\n  HOLDS"
    failing = LiftOutcome("lift CODIAG |> CODIAG", lifting_check(CODIAG, CODIAG))
    text = print_result(failing)
    assert "FAILS" in text
    assert "top:    { p |-> p, q |-> q }" in text
    assert "bottom: { pt |-> pt }" in text


def test_print_result_lists_and_counts():
    listing = MapListOutcome("hom SIERP PT", (MonotoneMap(SIERP, PT, (0, 0)),))
    text = print_result(listing)
    assert "count 1" in text
    assert "{ b, s, b < s } -> { pt } = { b |-> pt, s |-> pt }" in text
    counting = CountsOutcome("enumerate 2", (1, 1, 4))
    assert print_result(counting).splitlines() == [
        "enumerate 2",
        "  size 0: 1",
        "  size 1: 1",
        "  size 2: 4",
        "  total 6",
    ]


def test_encode_failing_self_lift_of_point_inclusion():
    outcome = LiftOutcome(
        "lift EMPTY_TO_PT |> EMPTY_TO_PT", lifting_check(EMPTY_TO_PT, EMPTY_TO_PT)
    )
    assert encode_result(outcome) == {
        "format": 1,
        "query": "lift EMPTY_TO_PT |> EMPTY_TO_PT",
        "holds": False,
        "counterexample": {"top": [], "bottom": [["pt", "pt"]]},
    }


def test_encode_holding_lift_has_null_counterexample():
    outcome = LiftOutcome("lift EMPTY_TO_PT |> CODIAG", lifting_check(EMPTY_TO_PT, CODIAG))
    record = encode_result(outcome)
    assert record["holds"] is True
    assert record["counterexample"] is None
    assert record["format"] == 1


def test_encoded_records_serialize_stably():
    outcome = LiftOutcome("lift CODIAG |> CODIAG", lifting_check(CODIAG, CODIAG))
    first = json.dumps(encode_result(outcome), sort_keys=True)
    second = json.dumps(encode_result(outcome), sort_keys=True)
    assert first == second
    assert first.startswith('{"counterexample"')


def test_encode_map_list_and_counts():
    listing = MapListOutcome("hom INDISC PT", (MonotoneMap(INDISC, PT, (0, 0)),))
    record = encode_result(listing)
    assert record["count"] == 1
    assert record["maps"][0] == {
        "source": "{ x, y, x <> y }",
        "target": "{ pt }",
        "assign": [["x", "pt"], ["y", "pt"]],
    }
    counts = encode_result(CountsOutcome("enumerate 3", (1, 1, 4, 29)))
    assert counts == {
        "format": 1,
        "query": "enumerate 3",
        "counts": [1, 1, 4, 29],
        "total": 35,
    }
