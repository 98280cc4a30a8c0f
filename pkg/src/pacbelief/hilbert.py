"""Hilbert-style axiomatisation of PAC and a checker for proofs in it.

Schemata are formulas over the schema variables ``p``, ``q`` and ``r``; a
formula is an instance when one simultaneous substitution of formulas for
those variables turns the schema into it.  Biconditional schemata are stored
in their expanded form, exactly as the parser produces them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .formula import And, Atom, Formula, Implies, Not, Or, parse

__all__ = [
    "SCHEMATA", "Axiom", "Premise", "ModusPonens", "ProofLine", "Proof",
    "ProofError", "match_schema", "instantiate", "verify_proof", "check_proof",
]

_SCHEMA_TEXT = (
    "p -> (q -> p)",
    "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
    "((p -> q) -> p) -> p",
    "p & q -> p",
    "p & q -> q",
    "p -> (q -> p & q)",
    "p -> p | q",
    "q -> p | q",
    "(p -> r) -> ((q -> r) -> (p | q -> r))",
    "~(p | q) <-> ~p & ~q",
    "~(p & q) <-> ~p | ~q",
    "~~p <-> p",
    "~(p -> q) <-> p & ~q",
    "p | ~p",
)

#: Axiom schemata numbered 1..14.
SCHEMATA: dict[int, Formula] = {i + 1: parse(t) for i, t in enumerate(_SCHEMA_TEXT)}


def match_schema(schema: Formula, f: Formula,
                 binding: dict[str, Formula] | None = None) -> dict[str, Formula] | None:
    """Substitution making ``schema`` equal to ``f``, or None."""
    binding = {} if binding is None else binding
    stack = [(schema, f)]
    while stack:
        s, g = stack.pop()
        if isinstance(s, Atom):
            bound = binding.get(s.name)
            if bound is None:
                binding[s.name] = g
            elif bound != g:
                return None
        elif type(s) is not type(g):
            return None
        elif isinstance(s, Not):
            stack.append((s.arg, g.arg))
        elif isinstance(s, (And, Or, Implies)):
            stack.append((s.left, g.left))
            stack.append((s.right, g.right))
        # Top and Bottom match themselves
    return binding


def instantiate(schema: Formula, binding: Mapping[str, Formula]) -> Formula:
    if isinstance(schema, Atom):
        return binding[schema.name]
    if isinstance(schema, Not):
        return Not(instantiate(schema.arg, binding))
    if isinstance(schema, (And, Or, Implies)):
        return type(schema)(instantiate(schema.left, binding), instantiate(schema.right, binding))
    return schema


@dataclass(frozen=True)
class Axiom:
    schema: int


@dataclass(frozen=True)
class Premise:
    pass


@dataclass(frozen=True)
class ModusPonens:
    """Lines are 1-based: ``minor`` holds A, ``major`` holds A -> B."""
    minor: int
    major: int


Justification = Union[Axiom, Premise, ModusPonens]


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    justification: Justification


Proof = Sequence[ProofLine]


class ProofError(ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


def verify_proof(proof: Proof, premises: Iterable[Formula] = ()) -> None:
    """Raise :class:`ProofError` at the first line that is not justified."""
    premises = set(premises)
    for n, line in enumerate(proof, start=1):
        f, why = line.formula, line.justification
        if isinstance(why, Axiom):
            schema = SCHEMATA.get(why.schema)
            if schema is None:
                raise ProofError(n, f"no axiom schema {why.schema}")
            if match_schema(schema, f) is None:
                raise ProofError(n, f"not an instance of axiom {why.schema}")
        elif isinstance(why, Premise):
            if f not in premises:
                raise ProofError(n, "not a listed premise")
        elif isinstance(why, ModusPonens):
            i, j = why.minor, why.major
            if not (1 <= i < n and 1 <= j < n):
                raise ProofError(n, f"modus ponens cites lines {i}, {j}; only 1..{n - 1} precede it")
            if proof[j - 1].formula != Implies(proof[i - 1].formula, f):
                raise ProofError(n, f"line {j} is not line {i} -> this formula")
        else:
            raise ProofError(n, f"unknown justification {why!r}")


def check_proof(proof: Proof, premises: Iterable[Formula] = ()) -> bool:
    try:
        verify_proof(proof, premises)
    except ProofError:
        return False
    return True
