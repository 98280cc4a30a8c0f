import pytest
from hypothesis import given, settings, strategies as st

from pacbelief.entrenchment import (
    B, Input, RankedBase, Reliability, Source, SourceRegistry, UnknownSourceError, bar_input,
    dump_ranked_base, dump_registry, epistemic_value, load_ranked_base, load_registry,
    reliability, validate_epistemic, validate_reliability,
)
from pacbelief.formula import BOTTOM, Atom, Not, Or, Signature, parse
from strategies import formulas, ref_entails

ATOMS = ("p", "q", "r")
SIG = Signature(ATOMS)


def ref_value(entries, f, ceiling):
    """E by brute force: scan the cuts from the top down."""
    if ref_entails([], f, ATOMS):
        return ceiling + 1
    for r in range(ceiling, 0, -1):
        if ref_entails([g for g, k in entries if k >= r], f, ATOMS):
            return r
    return B


ranked = st.lists(st.tuples(formulas(max_leaves=5), st.integers(1, 3)), max_size=4)


@settings(max_examples=150)
@given(ranked, formulas(max_leaves=6))
def test_epistemic_value_matches_brute_force(entries, f):
    rb = RankedBase(tuple(entries), SIG, 3)
    assert epistemic_value(rb, f) == ref_value(entries, f, 3)


def test_examples():
    rb = RankedBase.of([("p", 1), ("q", 2)])
    assert epistemic_value(rb, parse("q")) == 2
    assert epistemic_value(rb, parse("p")) == 1
    assert epistemic_value(rb, parse("p | ~p")) == rb.top == 4
    assert epistemic_value(RankedBase.of([("p", 1)]), parse("q")) == B


def test_value_ladder():
    rb = RankedBase.of([("p", 3), ("p -> q", 2), ("r", 1)])
    assert [epistemic_value(rb, parse(x)) for x in ("p", "q", "r", "s", "q | s")] == [3, 2, 1, B, 2]


def test_atom_outside_signature_widens():
    rb = RankedBase.of([("p", 2)])
    assert epistemic_value(rb, parse("p | zz")) == 2
    assert epistemic_value(rb, parse("zz")) == B


def test_rank_bounds():
    with pytest.raises(ValueError):
        RankedBase.of([("p", 4)], ceiling=3)
    with pytest.raises(ValueError):
        RankedBase.of([("p", 0)])


def test_cuts():
    rb = RankedBase.of([("p", 1), ("q", 3)])
    assert rb.cut(1) == (Atom("p"), Atom("q"))
    assert rb.cut(2) == (Atom("q"),)
    assert rb.cut(4) == ()


def test_reliability_modes():
    s = Source("s", 3)
    assert reliability(Input(Atom("p"), s)) == 3
    assert reliability(Input(BOTTOM, s), "absurdity-aware") == B
    assert reliability(Input(parse("p & ~p"), s), "absurdity-aware") == 3
    assert reliability(Input(BOTTOM, s), "constant") == 3
    with pytest.raises(ValueError):
        Reliability("eager")


@pytest.mark.parametrize("mode", ["constant", "absurdity-aware"])
def test_reliability_dominance_examples(mode):
    s = Source("s", 2)
    p, q = Atom("p"), Atom("q")
    assert reliability(Input(p, s), mode) <= reliability(Input(Or(p, q), s), mode)
    assert reliability(Input(p & q, s), mode) <= reliability(Input(p, s), mode)
    assert reliability(Input(p, s), mode) == reliability(Input(p, s), mode)


def test_bar_input_is_syntactic():
    s = Source("s", 1)
    assert bar_input(Input(Atom("p"), s)) == Input(Not(Atom("p")), s)
    assert bar_input(Input(Not(Atom("p")), s)).proposition == Not(Not(Atom("p")))
    assert str(Input(parse("p | q"), s)) == "(p | q, s)"


def test_registry():
    reg = SourceRegistry(3, {"a": 0, "b": 4})
    assert reg["b"].trust == 4 and len(reg) == 2
    with pytest.raises(ValueError):
        reg.register("c", 5)
    with pytest.raises(UnknownSourceError):
        reg["zz"]
    assert Reliability("constant", reg)(reg.input(Atom("p"), "b")) == 4


def test_validate_epistemic_skips_minimality_on_trivial_base():
    rb = RankedBase.of([("_|_", 1)])
    report = validate_epistemic(rb, [parse(x) for x in ("p", "q", "p | q", "p & ~p")])
    assert report.passed
    assert report["E3"].checked == 0 and report["E3"].skipped == 4


def test_validate_epistemic_passes():
    rb = RankedBase.of([("p", 2), ("q -> r", 1), ("~p | q", 3)])
    probes = [parse(x) for x in ("p", "q", "r", "p | q", "p & q", "~p", "q -> r", "p | ~p")]
    report = validate_epistemic(rb, probes)
    assert report.passed and report["E1"].checked > 0


def test_validate_reliability_counts_cross_source_as_skipped():
    reg = SourceRegistry(3, {"a": 1, "b": 3})
    probes = [parse(x) for x in ("p", "p | q", "_|_")]
    report = validate_reliability(reg, "absurdity-aware", probes)
    assert report.passed
    assert report["R"].skipped == 2 * 1 * 9


def test_ranked_base_file_roundtrip():
    text = "# beliefs\nT=4\n4: p -> q\n1: ~r   # weak\n\n"
    rb = load_ranked_base(text)
    assert rb.ceiling == 4 and rb.entries == ((parse("p -> q"), 4), (parse("~r"), 1))
    assert dump_ranked_base(rb) == "T=4\n4: p -> q\n1: ~r\n"
    assert load_ranked_base(dump_ranked_base(rb)).entries == rb.entries


@pytest.mark.parametrize("text", ["1: p\n", "T=3\np\n", "T=3\nT=3\n", "T=3\n5: p\n", "T=3\n1: p &\n"])
def test_ranked_base_file_errors(text):
    with pytest.raises(ValueError):
        load_ranked_base(text)


def test_registry_file_roundtrip():
    reg = load_registry("a 1\nb 4  # trusted\n", 3)
    assert dump_registry(reg) == "a 1\nb 4\n"
    with pytest.raises(ValueError):
        load_registry("a one\n", 3)
