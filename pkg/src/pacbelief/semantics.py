"""Three-valued semantics of PAC and the consequence relation it induces.

Values are 1 (true), 0 (both) and -1 (false); 1 and 0 are designated.
Everything is driven by the four matrices in :data:`MATRICES`, which can be
temporarily corrupted with :func:`corrupted` for mutation testing.

Entailment enumerates all ``3**n`` valuations of a signature.  A formula is
evaluated on every valuation at once: its truth vector is a triple of Python
ints used as bitsets, one bit per valuation, marking where the formula takes
the value 1, 0 and -1 respectively.
"""

from __future__ import annotations

import itertools
from contextlib import contextmanager
from enum import IntEnum
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

import numpy as np

from .formula import (
    And, Atom, Bottom, Formula, Implies, Not, Or, Signature, Top, BOTTOM,
)

__all__ = [
    "TruthValue", "DESIGNATED", "MATRICES", "MAX_ATOMS", "SignatureTooLarge",
    "MissingAtomError", "evaluate", "valuations", "truth_vector", "designated_mask",
    "entails", "is_tautology", "equivalent", "cn_member", "is_trivial",
    "model_mask", "full_mask", "apply_unary", "apply_binary", "corrupted", "table_entries", "dump_tables",
]


class TruthValue(IntEnum):
    TRUE = 1
    BOTH = 0
    FALSE = -1

    @property
    def designated(self) -> bool:
        return self is not TruthValue.FALSE

    def __str__(self) -> str:
        return str(int(self))


T, B, F = TruthValue.TRUE, TruthValue.BOTH, TruthValue.FALSE
VALUES = (T, B, F)
DESIGNATED = frozenset({T, B})

#: Hard cap on signature size for enumeration (3**12 = 531441 valuations).
MAX_ATOMS = 12


def _matrix(rows):
    return {(x, y): TruthValue(rows[i][j]) for i, x in enumerate(VALUES) for j, y in enumerate(VALUES)}


# rows and columns in the order 1, 0, -1
MATRICES: dict[str, dict] = {
    "and": _matrix([[1, 0, -1], [0, 0, -1], [-1, -1, -1]]),
    "or": _matrix([[1, 1, 1], [1, 0, 0], [1, 0, -1]]),
    "implies": _matrix([[1, 0, -1], [1, 0, -1], [1, 1, 1]]),
    "not": {T: F, B: B, F: T},
}

_BINARY = {And: "and", Or: "or", Implies: "implies"}

# bumped whenever a matrix changes, so cached truth vectors go stale
_generation = 0


class SignatureTooLarge(ValueError):
    pass


class MissingAtomError(KeyError):
    pass


def evaluate(v: Mapping[str, TruthValue | int], f: Formula) -> TruthValue:
    """Value of ``f`` under the valuation ``v``, computed from the matrices."""
    if isinstance(f, Atom):
        try:
            return TruthValue(v[f.name])
        except KeyError:
            raise MissingAtomError(f"valuation has no value for atom {f.name!r}") from None
    if isinstance(f, Top):
        return T
    if isinstance(f, Bottom):
        return F
    if isinstance(f, Not):
        return MATRICES["not"][evaluate(v, f.arg)]
    return MATRICES[_BINARY[type(f)]][evaluate(v, f.left), evaluate(v, f.right)]


def valuations(sig: Signature) -> Iterator[dict[str, TruthValue]]:
    """Every total valuation over ``sig``; the i-th one is bit i of a truth vector."""
    # the first atom varies fastest
    for combo in itertools.product(VALUES, repeat=len(sig)):
        yield dict(zip(sig.atoms, reversed(combo)))


# -- vectorised enumeration ----------------------------------------------------

@lru_cache(maxsize=None)
def _atom_vectors(n: int) -> tuple[tuple[int, int, int], ...]:
    # bit i of the k-th atom's vector: base-3 digit k of i selects 1, 0 or -1
    index = np.arange(3 ** n, dtype=np.int64)
    out = []
    for k in range(n):
        digit = (index // 3 ** k) % 3
        out.append(tuple(_to_bits(digit == d) for d in range(3)))
    return tuple(out)


def _to_bits(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def _full(n: int) -> int:
    return (1 << 3 ** n) - 1


def full_mask(sig: Signature) -> int:
    """Bitset of every valuation over ``sig``."""
    return _full(len(sig))


def _check_size(sig: Signature) -> None:
    if len(sig) > MAX_ATOMS:
        raise SignatureTooLarge(
            f"signature has {len(sig)} atoms; enumeration is capped at {MAX_ATOMS}")


@lru_cache(maxsize=1 << 17)
def _vector(f: Formula, atoms: tuple[str, ...], generation: int) -> tuple[int, int, int]:
    n = len(atoms)
    if isinstance(f, Atom):
        try:
            return _atom_vectors(n)[atoms.index(f.name)]
        except ValueError:
            raise MissingAtomError(f"atom {f.name!r} is not in the signature") from None
    if isinstance(f, Top):
        return (_full(n), 0, 0)
    if isinstance(f, Bottom):
        return (0, 0, _full(n))
    if isinstance(f, Not):
        return apply_unary(MATRICES["not"], _vector(f.arg, atoms, generation))
    return apply_binary(
        MATRICES[_BINARY[type(f)]],
        _vector(f.left, atoms, generation),
        _vector(f.right, atoms, generation),
    )


def apply_unary(table, a):
    out = [0, 0, 0]
    for i, x in enumerate(VALUES):
        out[_SLOT[table[x]]] |= a[i]
    return tuple(out)


def apply_binary(table, a, b):
    out = [0, 0, 0]
    for i, x in enumerate(VALUES):
        if not a[i]:
            continue
        for j, y in enumerate(VALUES):
            if b[j]:
                out[_SLOT[table[x, y]]] |= a[i] & b[j]
    return tuple(out)


_SLOT = {T: 0, B: 1, F: 2}


def truth_vector(f: Formula, sig: Signature) -> tuple[int, int, int]:
    """Bitsets of the valuations (in :func:`valuations` order) giving ``f`` 1, 0, -1."""
    _check_size(sig)
    return _vector(f, sig.atoms, _generation)


def designated_mask(f: Formula, sig: Signature) -> int:
    t, b, _ = truth_vector(f, sig)
    return t | b


def model_mask(premises: Iterable[Formula], sig: Signature) -> int:
    """Valuations designating every premise."""
    _check_size(sig)
    return _model_mask(tuple(premises), sig.atoms, _generation)


@lru_cache(maxsize=1 << 15)
def _model_mask(premises: tuple[Formula, ...], atoms: tuple[str, ...], generation: int) -> int:
    mask = _full(len(atoms))
    for p in premises:
        t, b, _ = _vector(p, atoms, generation)
        mask &= t | b
        if not mask:
            break
    return mask


def _signature_for(sig: Signature | None, *formulas: Formula) -> Signature:
    if sig is None:
        return Signature.covering(*formulas)
    return sig


def entails(premises: Iterable[Formula], f: Formula, sig: Signature | None = None) -> bool:
    """Every valuation designating all ``premises`` designates ``f``.

    Without an explicit signature the atoms of the arguments are used; extra
    atoms never change the verdict.
    """
    premises = tuple(premises)
    sig = _signature_for(sig, *premises, f)
    return model_mask(premises, sig) & ~designated_mask(f, sig) == 0


def is_tautology(f: Formula, sig: Signature | None = None) -> bool:
    return entails((), f, sig)


def equivalent(f: Formula, g: Formula, sig: Signature | None = None) -> bool:
    sig = _signature_for(sig, f, g)
    return designated_mask(f, sig) == designated_mask(g, sig)


def cn_member(base: Iterable[Formula], f: Formula, sig: Signature | None = None) -> bool:
    """Is ``f`` in Cn(base)?  For a finite base this is plain entailment."""
    return entails(base, f, sig)


def is_trivial(base: Iterable[Formula], sig: Signature | None = None) -> bool:
    """Cn(base) is the set of all formulas: no valuation designates the whole base."""
    return entails(base, BOTTOM, sig)


# -- the matrices as data ------------------------------------------------------

def table_entries() -> list[tuple[str, tuple[TruthValue, ...], TruthValue]]:
    """All 30 matrix entries as (connective, arguments, value)."""
    out = []
    for name in ("and", "or", "implies"):
        for x in VALUES:
            for y in VALUES:
                out.append((name, (x, y), MATRICES[name][x, y]))
    for x in VALUES:
        out.append(("not", (x,), MATRICES["not"][x]))
    return out


@contextmanager
def corrupted(connective: str, args: tuple, value: int):
    """Temporarily overwrite one matrix entry (for mutation testing)."""
    global _generation
    table = MATRICES[connective]
    key = TruthValue(args[0]) if connective == "not" else (TruthValue(args[0]), TruthValue(args[1]))
    old = table[key]
    table[key] = TruthValue(value)
    _generation += 1
    try:
        yield
    finally:
        table[key] = old
        _generation += 1


def dump_tables() -> str:
    """The three binary matrices side by side, then the negation column."""
    def cell(v):
        return f"{int(v):>3}"

    head = []
    rows = [[] for _ in VALUES]
    for name, sym in (("and", "&"), ("or", "|"), ("implies", "->")):
        head.append(f"{sym:>3}|" + "".join(cell(y) for y in VALUES))
        for i, x in enumerate(VALUES):
            rows[i].append(f"{cell(x)}|" + "".join(cell(MATRICES[name][x, y]) for y in VALUES))
    head.append("  ~|   ")
    for i, x in enumerate(VALUES):
        rows[i].append(f"{cell(x)}|{cell(MATRICES['not'][x])}")
    lines = ["   ".join(head)] + ["   ".join(r) for r in rows]
    return "\n".join(line.rstrip() for line in lines)
