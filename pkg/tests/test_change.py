import pytest
from hypothesis import given, settings, strategies as st

from pacbelief.change import (
    BeliefState, ContractedView, NotBaseBacked, StrictMaterializationError, contract, expand,
    is_trivial_state, materialize, member, revise_levi, revise_reverse_levi,
)
from pacbelief.entrenchment import B, Input, RankedBase, Reliability, Source, epistemic_value
from pacbelief.formula import Atom, Not, Or, Signature, parse
from strategies import formulas, ref_entails

p, q, r = Atom("p"), Atom("q"), Atom("r")
REL = Reliability("constant")
SIG = Signature(["p", "q", "r"])


def inp(text, trust, sid="s"):
    return Input(parse(text), Source(sid, trust))


def state(*entries):
    return BeliefState(RankedBase.of(entries))


# -- expansion ---------------------------------------------------------------

def test_expansion_accepts_reliable_input():
    after, rec = expand(state(("q", 1)), inp("p", 2), REL)
    assert rec.accepted and member(after, p) and member(after, q)
    assert str(rec) == "expand accepted (p, s) (b=0 < R(I)=2)"


def test_expansion_rejects_minimal_reliability():
    K = state(("q", 1))
    after, rec = expand(K, inp("p", B), REL)
    assert not rec.accepted and not member(after, p)
    assert after.pending == K.pending and after.base == K.base
    assert rec.comparison == (B, B)


def test_expansion_vacuous_when_already_believed():
    K = state(("p & q", 2))
    after, rec = expand(K, inp("p", 2), REL)
    probes = [parse(x) for x in ("p", "q", "r", "p & r", "q | r", "~p")]
    assert [member(after, f) for f in probes] == [member(K, f) for f in probes]


def test_expansion_with_contradiction_does_not_explode():
    after, _ = expand(state(("p", 1)), inp("~p", 2), REL)
    assert member(after, Not(p)) and not member(after, q)
    assert not is_trivial_state(after)


def test_absurd_input_in_absurdity_aware_mode():
    after, rec = expand(state(), inp("_|_", 3), Reliability("absurdity-aware"))
    assert not rec.accepted and not is_trivial_state(after)


# -- contraction ---------------------------------------------------------------

def test_contraction_accepted():
    view, rec = contract(state(("p", 1)), inp("p", 2), REL)
    assert rec.accepted and not member(view, p)
    assert str(rec) == "contract accepted (p, s) (E(P)=1 < R(I)=2)"


def test_contraction_rejected_by_entrenchment():
    view, rec = contract(state(("p", 2)), inp("p", 1), REL)
    assert not rec.accepted and member(view, p)
    assert str(rec.guards[0]) == "E(P)=2 >= R(I)=1"


def test_contraction_tie_rejects():
    view, rec = contract(state(("p", 2)), inp("p", 2), REL)
    assert not rec.accepted and member(view, p)


def test_tautology_cannot_be_contracted():
    for trust in range(0, 5):
        view, rec = contract(state(("p", 1)), inp("p | ~p", trust), REL)
        assert not rec.accepted and member(view, parse("p | ~p"))


def test_contraction_keeps_more_entrenched_beliefs():
    view, _ = contract(state(("p", 1), ("q", 2)), inp("p", 2), REL)
    assert member(view, q) and not member(view, p)
    assert member(view, parse("p | q"))


def test_recovery_through_reexpansion():
    K = state(("p", 1), ("p -> q", 1), ("r", 3))
    view, rec = contract(K, inp("p", 2), REL)
    assert rec.accepted
    back, rec2 = expand(view, inp("p", 2), REL)
    assert rec2.accepted
    for f in ("p", "q", "r", "p -> q", "q & r"):
        assert member(back, parse(f))


def test_tautologies_belong_to_every_state():
    K = state(("p", 1))
    view, _ = contract(K, inp("p", 3), REL)
    grown, _ = expand(view, inp("q", 1), REL)
    for st_ in (K, view, grown):
        assert member(st_, parse("r | ~r"))


ranked = st.lists(st.tuples(formulas(max_leaves=4), st.integers(1, 3)), max_size=4)


@settings(max_examples=100, deadline=None)
@given(ranked, formulas(max_leaves=4), formulas(max_leaves=5), st.integers(0, 4))
def test_view_membership_matches_entrenchment(entries, pivot, f, trust):
    rb = RankedBase(tuple(entries), SIG, 3)
    view, rec = contract(rb, Input(pivot, Source("s", trust)), REL)
    in_k = ref_entails(rb.formulas, f, ("p", "q", "r"))
    if rec.accepted:
        e = epistemic_value(rb, pivot)
        expected = in_k and e < epistemic_value(rb, Or(pivot, f))
    else:
        expected = in_k
    assert member(view, f) == expected


def test_contraction_needs_a_ranked_base():
    grown, _ = expand(state(("p", 1)), inp("q", 1), REL)
    with pytest.raises(NotBaseBacked):
        contract(grown, inp("p", 2), REL)
    view, _ = contract(state(("p", 1)), inp("p", 2), REL)
    with pytest.raises(NotBaseBacked):
        revise_levi(view, inp("q", 2), REL)


# -- revision ------------------------------------------------------------------

def test_levi_revision_replaces_negation():
    after, rec = revise_levi(state(("~p", 1)), inp("p", 2), REL)
    assert rec.accepted and member(after, p) and not member(after, Not(p))
    assert [g.holds for g in rec.guards] == [True, True]


def test_levi_revision_rejects_unreliable_input():
    K = state(("~p", 1))
    after, rec = revise_levi(K, inp("p", B), REL)
    assert not rec.accepted and not member(after, p) and member(after, Not(p))


def test_levi_revision_blocked_by_entrenched_negation():
    after, rec = revise_levi(state(("~p", 3)), inp("p", 2), REL)
    assert not rec.accepted and member(after, Not(p)) and not member(after, p)
    assert str(rec.guards[0]) == "E(~P)=3 >= R(~I)=2"


def test_levi_revision_of_empty_base():
    after, rec = revise_levi(state(), inp("p", 1), REL)
    assert rec.accepted
    for f in ("p", "q", "p | q", "p -> q"):
        assert member(after, parse(f)) == ref_entails([p], parse(f), ("p", "q"))


def test_reverse_levi_replaces_negation():
    after, rec = revise_reverse_levi(RankedBase.of([("~p", 1)]), inp("p", 2), REL)
    assert rec.accepted and after.base.formulas == (p,)
    assert member(after, p) and not member(after, Not(p))


def test_reverse_levi_rejects_unreliable_input():
    K = state(("~p", 1))
    after, rec = revise_reverse_levi(K, inp("p", B), REL)
    assert not rec.accepted and after.base == K.base


def test_reverse_levi_of_empty_base():
    after, rec = revise_reverse_levi(state(), inp("p", 1), REL)
    assert rec.accepted and after.base.entries == ((p, 1),)


# -- materialization -------------------------------------------------------------

def test_materialize_naive():
    K = state(("p", 3), ("q", 1))
    view, _ = contract(K, inp("q", 2), REL)
    view, _ = expand(view, inp("r", 2), REL)
    out = materialize(view, "naive")
    assert out.base_backed and out.base.entries == ((p, 3), (r, 1))


def test_materialize_strict_needs_every_rank():
    view, _ = expand(state(("p", 3)), inp("r", 2), REL)
    with pytest.raises(StrictMaterializationError) as err:
        materialize(view)
    assert err.value.missing == (p, r)
    out = materialize(view, "strict", {p: 2, r: 3})
    assert out.base.entries == ((p, 2), (r, 3))


def test_materialize_keeps_highest_rank_of_duplicates():
    grown, _ = expand(state(("p", 2)), inp("p", 2), REL)
    assert materialize(grown, "naive").base.entries == ((p, 2),)


def test_provenance_accumulates():
    K = state(("p", 1))
    a, _ = expand(K, inp("q", 1), REL)
    b, _ = expand(a, inp("r", 0), REL)
    assert [rec.accepted for rec in b.provenance] == [True, False]
    assert isinstance(contract(K, inp("p", 1), REL)[0], ContractedView)
