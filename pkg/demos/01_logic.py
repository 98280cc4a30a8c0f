"""A tour of the three-valued logic: matrices, entailment, proofs."""

from pacbelief import (
    Atom, Implies, entails, evaluate, is_tautology, is_trivial, parse, truth_vector,
)
from pacbelief.formula import Signature
from pacbelief.hilbert import Axiom, ModusPonens, Premise, ProofLine, check_proof
from pacbelief.semantics import dump_tables

# Values are 1 (true), 0 (both true and false) and -1 (false).  The first
# two are designated: a formula holds at a valuation when it takes 1 or 0.
print(dump_tables())
print()

# A contradiction can hold at a valuation: p & ~p takes 0 when p does.
contradiction = parse("p & ~p")
print("v(p)=0:", evaluate({"p": 0}, contradiction))

# ...so it does not entail everything.
print("{p, ~p} |= q ?", entails([parse("p"), parse("~p")], parse("q")))
print("{p, ~p} trivial ?", is_trivial([parse("p"), parse("~p")]))
# Falsum, on the other hand, never holds.
print("{_|_} trivial ?", is_trivial([parse("_|_")]))

# Modus ponens survives, and the implication obeys the deduction theorem.
print("{p, p -> q} |= q ?", entails([parse("p"), parse("p -> q")], parse("q")))
print("{} |= (p & ~p) -> q ?", entails([], parse("p & ~p -> q")))
print("excluded middle a tautology ?", is_tautology(parse("p | ~p")))

# Truth vectors: three bitmasks over the 3^n valuations (first atom fastest).
sig = Signature(["p", "q"])
t, b, f = truth_vector(parse("p | q"), sig)
print(f"p | q over 9 valuations: true={t:09b} both={b:09b} false={f:09b}")

# Proofs are checked line by line against the fourteen axiom schemata.
p, q = Atom("p"), Atom("q")
proof = [
    ProofLine(p, Premise()),
    ProofLine(Implies(p, q), Premise()),
    ProofLine(q, ModusPonens(1, 2)),
    ProofLine(parse("q -> (p -> q)"), Axiom(1)),
    ProofLine(parse("p -> q"), ModusPonens(3, 4)),
]
print("proof checks:", check_proof(proof, [p, Implies(p, q)]))
