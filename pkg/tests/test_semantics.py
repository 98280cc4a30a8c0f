import pytest
from hypothesis import given, settings, strategies as st

from pacbelief.formula import BOTTOM, Atom, Implies, Signature, atoms_of, parse
from pacbelief.semantics import (
    MATRICES, MAX_ATOMS, SignatureTooLarge, TruthValue, corrupted, cn_member, dump_tables,
    entails, equivalent, evaluate, is_tautology, is_trivial, table_entries, truth_vector,
    valuations,
)
from strategies import REF, formulas, ref_entails, ref_eval

SIG3 = Signature(["p", "q", "r"])


def test_thirty_entries_match_reference():
    entries = table_entries()
    assert len(entries) == 30
    for name, args, value in entries:
        key = args[0] if name == "not" else tuple(args)
        assert REF[name][key] == value, (name, args)


def test_designation():
    assert TruthValue.TRUE.designated and TruthValue.BOTH.designated
    assert not TruthValue.FALSE.designated


@pytest.mark.parametrize("v, text, value", [
    ({"p": 1, "q": 0}, "p & q", 0),
    ({"p": -1, "q": -1}, "p -> q", 1),
    ({"p": 0}, "~p", 0),
    ({"p": 0}, "p & ~p", 0),
    ({}, "_|_", -1),
])
def test_evaluate(v, text, value):
    assert evaluate(v, parse(text)) == value


def test_valuations_enumerate_every_assignment_once():
    vs = list(valuations(SIG3))
    assert len(vs) == 27
    assert len({tuple(v.values()) for v in vs}) == 27
    assert vs[1]["p"] != vs[0]["p"]  # first atom varies fastest


@settings(max_examples=200)
@given(formulas())
def test_truth_vector_matches_pointwise_evaluation(f):
    t, b, fl = truth_vector(f, SIG3)
    for k, v in enumerate(valuations(SIG3)):
        x = ref_eval({a: int(y) for a, y in v.items()}, f)
        bits = (t >> k & 1, b >> k & 1, fl >> k & 1)
        assert bits == {1: (1, 0, 0), 0: (0, 1, 0), -1: (0, 0, 1)}[x]


@settings(max_examples=200)
@given(st.lists(formulas(max_leaves=6), max_size=3), formulas(max_leaves=8))
def test_entails_matches_brute_force(premises, f):
    assert entails(premises, f, SIG3) == ref_entails(premises, f, ("p", "q", "r"))


@pytest.mark.parametrize("premises, goal, expected", [
    (["p", "~p"], "q", False),
    (["p", "p -> q"], "q", True),
    ([], "p", False),
    (["p & ~p"], "q", False),
    (["_|_"], "q", True),
    (["p"], "p | q", True),
])
def test_entails_examples(premises, goal, expected):
    assert entails([parse(x) for x in premises], parse(goal)) is expected


@pytest.mark.parametrize("text, expected", [
    ("p | ~p", True),
    ("p", False),
    ("~(p & q) <-> ~p | ~q", True),
    ("p -> p", True),
    ("~(p & ~p)", True),  # p & ~p never takes 1
    ("p & ~p -> q", False),
])
def test_is_tautology(text, expected):
    assert is_tautology(parse(text)) is expected


@pytest.mark.parametrize("a, b, expected", [
    ("p", "p | p", True),
    ("~~p", "p", True),
    ("p", "~p", False),
])
def test_equivalent(a, b, expected):
    assert equivalent(parse(a), parse(b)) is expected


@pytest.mark.parametrize("base, goal, expected", [
    (["p"], "p | q", True),
    (["p", "~p"], "q", False),
    ([], "p | ~p", True),
])
def test_cn_member(base, goal, expected):
    assert cn_member([parse(x) for x in base], parse(goal)) is expected


@pytest.mark.parametrize("base, expected", [
    (["_|_"], True),
    (["p", "~p"], False),
    ([], False),
    (["p", "p -> _|_"], True),
])
def test_is_trivial(base, expected):
    assert is_trivial([parse(x) for x in base]) is expected


@settings(max_examples=150)
@given(st.lists(formulas(max_leaves=5), max_size=3), formulas(max_leaves=5), formulas(max_leaves=5))
def test_deduction_theorem(premises, a, b):
    assert entails(premises + [a], b, SIG3) == entails(premises, Implies(a, b), SIG3)


def test_signature_size_cap():
    sig = Signature([f"a{k}" for k in range(MAX_ATOMS + 1)])
    with pytest.raises(SignatureTooLarge):
        entails([], Atom("a0"), sig)


def test_corruption_is_temporary():
    f = parse("p | q")
    before = truth_vector(f, SIG3)
    with corrupted("or", (-1, -1), 1):
        assert MATRICES["or"][TruthValue.FALSE, TruthValue.FALSE] == 1
        assert truth_vector(f, SIG3) != before
        assert is_tautology(f)
    assert truth_vector(f, SIG3) == before
    assert not is_tautology(f)


def test_dump_tables():
    assert dump_tables().splitlines() == [
        "  &|  1  0 -1     ||  1  0 -1    ->|  1  0 -1     ~|",
        "  1|  1  0 -1     1|  1  1  1     1|  1  0 -1     1| -1",
        "  0|  0  0 -1     0|  1  0  0     0|  1  0 -1     0|  0",
        " -1| -1 -1 -1    -1|  1  0 -1    -1|  1  1  1    -1|  1",
    ]
