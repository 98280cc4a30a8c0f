import pytest
from hypothesis import given

from pacbelief.formula import (
    BOTTOM, TOP, And, Atom, FormulaSyntaxError, Iff, Implies, Not, Or, Signature,
    UnknownAtomError, atoms_of, depth, parse, render,
)
from strategies import formulas

p, q, r = Atom("p"), Atom("q"), Atom("r")


@pytest.mark.parametrize("text, tree", [
    ("p & ~p", And(p, Not(p))),
    ("p -> q -> r", Implies(p, Implies(q, r))),
    ("p <-> q", And(Implies(p, q), Implies(q, p))),
    ("p | q & r", Or(p, And(q, r))),
    ("p & q & r", And(And(p, q), r)),
    ("p | q | r", Or(Or(p, q), r)),
    ("~p -> q", Implies(Not(p), q)),
    ("~~p", Not(Not(p))),
    ("_|_ | ^T^", Or(BOTTOM, TOP)),
    ("top", TOP),
    ("(p -> q) -> r", Implies(Implies(p, q), r)),
    ("  p\t&q ", And(p, q)),
])
def test_parse(text, tree):
    assert parse(text) == tree


def test_iff_is_right_associative_and_loosest():
    assert parse("p <-> q <-> r") == Iff(p, Iff(q, r))
    assert parse("p -> q <-> r") == Iff(Implies(p, q), r)


@pytest.mark.parametrize("tree, text", [
    (And(p, Not(p)), "p & ~p"),
    (BOTTOM, "_|_"),
    (TOP, "^T^"),
    (Implies(Or(p, q), r), "(p | q) -> r"),
    (Implies(p, Implies(q, r)), "p -> q -> r"),
    (Implies(Implies(p, q), r), "(p -> q) -> r"),
    (And(And(p, q), r), "p & q & r"),
    (And(p, And(q, r)), "p & (q & r)"),
    (Not(And(p, q)), "~(p & q)"),
    (Not(Not(p)), "~~p"),
])
def test_render(tree, text):
    assert render(tree) == text
    assert str(tree) == text


@given(formulas())
def test_render_parse_roundtrip(f):
    assert parse(render(f)) == f


@given(formulas())
def test_equal_trees_hash_equal(f):
    g = parse(render(f))
    assert g == f and hash(g) == hash(f)


@pytest.mark.parametrize("text, pos", [
    ("p &", 3), ("(p", 2), ("p q", 2), ("p $ q", 2), ("", 0), ("->", 0),
])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(FormulaSyntaxError) as err:
        parse(text)
    assert err.value.position == pos


def test_unknown_atom_against_signature():
    sig = Signature(["p", "q"])
    assert parse("p | q", sig) == Or(p, q)
    with pytest.raises(UnknownAtomError) as err:
        parse("p | r", sig)
    assert err.value.name == "r" and err.value.position == 4


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature([])
    with pytest.raises(ValueError):
        Signature(["p", "p"])
    with pytest.raises(ValueError):
        Signature(["P"])
    with pytest.raises(ValueError):
        Signature(["top"])
    sig = Signature.covering(parse("q & p"), base=Signature(["r"]))
    assert sig.atoms == ("r", "p", "q")


def test_operators_and_helpers():
    assert (p & ~q) | (q >> r) == Or(And(p, Not(q)), Implies(q, r))
    assert atoms_of(parse("p -> q & p")) == {"p", "q"}
    assert depth(p) == 0 and depth(parse("~(p & q)")) == 2
