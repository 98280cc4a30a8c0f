"""Source-sensitive expansion, contraction and revision.

Every operator first decides, then acts: it evaluates its guard, records the
comparison in a :class:`ChangeRecord`, and either performs the whole change or
leaves the belief set as it was.

Belief sets are infinite, so they are represented intensionally.

``BeliefState``
    A ranked base plus the propositions accepted by expansion since; its
    belief set is Cn(base formulas + pending).
``ContractedView``
    The result of contracting a ranked base by a pivot whose epistemic value
    is ``cutlevel``.  A formula ``f`` belongs to the contracted set iff the
    base entails ``f`` and the cut strictly above ``cutlevel`` entails
    ``pivot | f``.  That is the entrenchment condition E(pivot) < E(pivot | f)
    restated in terms of cuts, which avoids a rank search per query.
    Expansions on top of a view are kept in ``pending`` and decided through
    the deduction theorem: ``f`` is in Cn(view + {a}) iff ``a -> f`` is in
    the view.

Contraction and both revisions need the epistemic function of the current
belief set, which is only defined for a ranked base.  They refuse anything
else; :func:`materialize` turns a changed state back into a ranked base.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence, Union

from .entrenchment import B, Input, RankedBase, bar_input, epistemic_value
from .formula import BOTTOM, Formula, Implies, Or, Signature, atoms_of
from .semantics import entails

__all__ = [
    "Guard", "ChangeRecord", "BeliefState", "ContractedView", "NotBaseBacked",
    "StrictMaterializationError", "expand", "contract", "member", "revise_levi",
    "revise_reverse_levi", "materialize", "is_trivial_state",
]

ReliabilityFn = Callable[[Input], int]


@dataclass(frozen=True)
class Guard:
    """One strict comparison ``left < right`` on the value scale."""

    left_name: str
    left: int
    right_name: str
    right: int

    @property
    def holds(self) -> bool:
        return self.left < self.right

    def __str__(self) -> str:
        op = "<" if self.holds else ">="
        return f"{self.left_name}={self.left} {op} {self.right_name}={self.right}"


@dataclass(frozen=True)
class ChangeRecord:
    kind: str
    input: Input
    accepted: bool
    guards: tuple[Guard, ...]

    @property
    def comparison(self) -> tuple[int, int]:
        """(E-value or b, R-value) of the deciding guard."""
        g = self.guards[0]
        return g.left, g.right

    def __str__(self) -> str:
        verdict = "accepted" if self.accepted else "rejected"
        why = "; ".join(map(str, self.guards))
        return f"{self.kind} {verdict} {self.input} ({why})"


@dataclass(frozen=True)
class BeliefState:
    base: RankedBase
    pending: tuple[Formula, ...] = ()
    provenance: tuple[ChangeRecord, ...] = ()

    @classmethod
    def of(cls, base: RankedBase) -> BeliefState:
        return cls(base)

    @property
    def base_backed(self) -> bool:
        return not self.pending


@dataclass(frozen=True)
class ContractedView:
    origin: RankedBase
    pivot: Formula
    cutlevel: int
    accepted: bool
    pending: tuple[Formula, ...] = ()
    provenance: tuple[ChangeRecord, ...] = ()

    base_backed = False


State = Union[BeliefState, ContractedView]


class NotBaseBacked(ValueError):
    """The operator needs an epistemic function the state does not have."""


class StrictMaterializationError(ValueError):
    def __init__(self, missing: Sequence[Formula]):
        self.missing = tuple(missing)
        names = ", ".join(str(f) for f in self.missing)
        super().__init__(f"strict materialization needs explicit ranks for: {names}")


def _sig(base_sig: Signature, formulas: Iterable[Formula]) -> Signature:
    formulas = tuple(formulas)
    for f in formulas:
        if any(a not in base_sig for a in atoms_of(f)):
            return Signature.covering(*formulas, base=base_sig)
    return base_sig


def _chain(assumptions: Sequence[Formula], f: Formula) -> Formula:
    for a in reversed(assumptions):
        f = Implies(a, f)
    return f


def member(state: State, f: Formula, assuming: Sequence[Formula] = ()) -> bool:
    """Is ``f`` in the belief set of ``state``, or in Cn(state + assuming)?"""
    if isinstance(state, BeliefState):
        premises = state.base.formulas + state.pending + tuple(assuming)
        return entails(premises, f, _sig(state.base.sig, premises + (f,)))
    g = _chain(state.pending + tuple(assuming), f)
    origin = state.origin
    sig = _sig(origin.sig, (g, state.pivot))
    if not entails(origin.formulas, g, sig):
        return False
    if not state.accepted:
        return True
    return entails(origin.cut(state.cutlevel + 1), Or(state.pivot, g), sig)


def is_trivial_state(state: State) -> bool:
    return member(state, BOTTOM)


def _base_of(state: State | RankedBase, op: str) -> RankedBase:
    if isinstance(state, RankedBase):
        return state
    if isinstance(state, BeliefState) and state.base_backed:
        return state.base
    raise NotBaseBacked(
        f"{op} needs a ranked base; materialize the changed state first")


def expand(state: State, i: Input, rel: ReliabilityFn) -> tuple[State, ChangeRecord]:
    """Accept ``i`` wholesale iff its reliability is above the minimum."""
    guard = Guard("b", B, "R(I)", rel(i))
    record = ChangeRecord("expand", i, guard.holds, (guard,))
    provenance = state.provenance + (record,)
    if guard.holds:
        return dataclasses.replace(state, pending=state.pending + (i.proposition,),
                                   provenance=provenance), record
    return dataclasses.replace(state, provenance=provenance), record


def contract(state: BeliefState | RankedBase, i: Input,
             rel: ReliabilityFn) -> tuple[ContractedView, ChangeRecord]:
    """Give up ``i``'s proposition iff it is less entrenched than ``i`` is reliable."""
    base = _base_of(state, "contraction")
    e = epistemic_value(base, i.proposition)
    guard = Guard("E(P)", e, "R(I)", rel(i))
    record = ChangeRecord("contract", i, guard.holds, (guard,))
    provenance = (state.provenance if isinstance(state, BeliefState) else ()) + (record,)
    return ContractedView(base, i.proposition, e, guard.holds, (), provenance), record


def revise_levi(state: BeliefState | RankedBase, i: Input,
                rel: ReliabilityFn) -> tuple[State, ChangeRecord]:
    """Contract by the negated input, then expand by the input, if both guards pass."""
    base = _base_of(state, "revision")
    if isinstance(state, RankedBase):
        state = BeliefState(state)
    neg = bar_input(i)
    g_contract = Guard("E(~P)", epistemic_value(base, neg.proposition), "R(~I)", rel(neg))
    g_expand = Guard("b", B, "R(I)", rel(i))
    accepted = g_contract.holds and g_expand.holds
    record = ChangeRecord("revise-levi", i, accepted, (g_contract, g_expand))
    if not accepted:
        return dataclasses.replace(state, provenance=state.provenance + (record,)), record
    view, _ = contract(state, neg, rel)
    view, _ = expand(view, i, rel)
    return dataclasses.replace(view, provenance=state.provenance + (record,)), record


def revise_reverse_levi(state: BeliefState | RankedBase, i: Input,
                        rel: ReliabilityFn) -> tuple[BeliefState, ChangeRecord]:
    """Experimental: expand the *base*, then contract the base by the negation.

    The input joins the base at rank 1.  If the negation is then less
    entrenched than the negated input is reliable, every base entry ``g``
    with E(~P) >= E(~P | g) is dropped; the rest keep their ranks.
    """
    base = _base_of(state, "reverse-Levi revision")
    if isinstance(state, RankedBase):
        state = BeliefState(state)
    g_expand = Guard("b", B, "R(I)", rel(i))
    if not g_expand.holds:
        record = ChangeRecord("revise-reverse-levi", i, False, (g_expand,))
        return dataclasses.replace(state, provenance=state.provenance + (record,)), record
    grown = base.add(i.proposition, 1)
    neg = bar_input(i)
    e_neg = epistemic_value(grown, neg.proposition)
    g_contract = Guard("E(~P)", e_neg, "R(~I)", rel(neg))
    record = ChangeRecord("revise-reverse-levi", i, True, (g_expand, g_contract))
    if g_contract.holds:
        kept = tuple((g, r) for g, r in grown.entries
                     if e_neg < epistemic_value(grown, Or(neg.proposition, g)))
        grown = RankedBase(kept, grown.sig, grown.ceiling)
    return BeliefState(grown, (), state.provenance + (record,)), record


def materialize(state: State, policy: str = "strict",
                ranks: Mapping[Formula, int] | None = None) -> BeliefState:
    """Turn a changed state into a base-backed one.

    The candidates are the base entries still believed plus the pending
    expansions.  ``strict`` takes every rank from ``ranks`` and fails if one
    is missing.  ``naive`` keeps surviving entries' ranks and puts pending
    expansions at rank 1.
    """
    if policy not in ("strict", "naive"):
        raise ValueError(f"unknown materialization policy {policy!r}")
    if isinstance(state, BeliefState):
        if state.base_backed:
            return state
        origin, survivors = state.base, list(state.base.entries)
    else:
        origin = state.origin
        core = dataclasses.replace(state, pending=())
        survivors = [(g, r) for g, r in origin.entries if member(core, g)]
    candidates = survivors + [(p, 1) for p in state.pending]
    if policy == "strict":
        ranks = ranks or {}
        missing = [f for f, _ in candidates if f not in ranks]
        if missing:
            raise StrictMaterializationError(missing)
        candidates = [(f, ranks[f]) for f, _ in candidates]
    # drop duplicates, keeping the highest rank
    best: dict[Formula, int] = {}
    for f, r in candidates:
        best[f] = max(r, best.get(f, 0))
    sig = Signature.covering(*best, base=origin.sig)
    return BeliefState(RankedBase(tuple(best.items()), sig, origin.ceiling), (), state.provenance)
