"""Propositional syntax: formula trees, signatures, parsing and rendering.

The ASCII grammar, loosest binding first::

    iff     := imp ('<->' iff)?          right associative, expanded away
    imp     := disj ('->' imp)?          right associative
    disj    := conj ('|' conj)*          left associative
    conj    := unary ('&' unary)*        left associative
    unary   := '~' unary | atom | '_|_' | '^T^' | 'top' | '(' iff ')'

``p <-> q`` never survives parsing: it becomes ``(p -> q) & (q -> p)``.
"""

from __future__ import annotations

import re
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Iterable, Iterator

__all__ = [
    "Formula", "Atom", "Not", "And", "Or", "Implies", "Bottom", "Top",
    "BOTTOM", "TOP", "Iff", "Signature", "FormulaSyntaxError", "UnknownAtomError",
    "parse", "render", "atoms_of", "depth", "subformulas",
]

ATOM_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
KEYWORDS = frozenset({"top"})


class FormulaSyntaxError(ValueError):
    """Malformed formula text. ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class UnknownAtomError(ValueError):
    def __init__(self, name: str, position: int | None = None):
        self.name = name
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown atom {name!r}{where}")


class Formula:
    """Base class of the formula tree.

    Nodes are immutable and compare by structure; ``~f``, ``f & g``,
    ``f | g`` and ``f >> g`` build negation, conjunction, disjunction and
    implication.
    """

    __slots__ = ()

    def __invert__(self) -> Formula:
        return Not(self)

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __rshift__(self, other: Formula) -> Formula:
        return Implies(self, other)

    def __str__(self) -> str:
        return render(self)

    # structural hash, computed once; the truth-vector cache hashes formulas
    # constantly and recursing on every call is too slow
    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((type(self).__name__,) + self._children()))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(other) is not type(self) or other._hash != self._hash:
            return False
        return self._children() == other._children()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(map(repr, self._children()))})"


_node = dataclass(frozen=True, eq=False, repr=False, slots=True)


@_node
class Atom(Formula):
    name: str
    _hash: int = field(init=False, default=0)

    def _children(self):
        return (self.name,)


@_node
class Not(Formula):
    arg: Formula
    _hash: int = field(init=False, default=0)

    def _children(self):
        return (self.arg,)


@_node
class And(Formula):
    left: Formula
    right: Formula
    _hash: int = field(init=False, default=0)

    def _children(self):
        return (self.left, self.right)


@_node
class Or(Formula):
    left: Formula
    right: Formula
    _hash: int = field(init=False, default=0)

    def _children(self):
        return (self.left, self.right)


@_node
class Implies(Formula):
    left: Formula
    right: Formula
    _hash: int = field(init=False, default=0)

    def _children(self):
        return (self.left, self.right)


@_node
class Bottom(Formula):
    _hash: int = field(init=False, default=0)

    def _children(self):
        return ()


@_node
class Top(Formula):
    _hash: int = field(init=False, default=0)

    def _children(self):
        return ()


BOTTOM = Bottom()
TOP = Top()


def Iff(left: Formula, right: Formula) -> Formula:
    """Biconditional as the conjunction of both implications."""
    return And(Implies(left, right), Implies(right, left))


@lru_cache(maxsize=1 << 16)
def atoms_of(f: Formula) -> frozenset[str]:
    found = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            found.add(g.name)
        elif isinstance(g, Not):
            stack.append(g.arg)
        elif isinstance(g, (And, Or, Implies)):
            stack.append(g.left)
            stack.append(g.right)
    return frozenset(found)


def depth(f: Formula) -> int:
    if isinstance(f, Not):
        return 1 + depth(f.arg)
    if isinstance(f, (And, Or, Implies)):
        return 1 + max(depth(f.left), depth(f.right))
    return 0


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.arg)
    elif isinstance(f, (And, Or, Implies)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


class Signature:
    """Ordered, nonempty, duplicate-free set of atom names."""

    __slots__ = ("atoms", "_index")

    def __init__(self, atoms: Iterable[str]):
        atoms = tuple(atoms)
        if not atoms:
            raise ValueError("a signature needs at least one atom")
        for a in atoms:
            if not ATOM_RE.match(a) or a in KEYWORDS:
                raise ValueError(f"invalid atom name {a!r}")
        if len(set(atoms)) != len(atoms):
            raise ValueError(f"duplicate atoms in {atoms}")
        self.atoms = atoms
        self._index = {a: i for i, a in enumerate(atoms)}

    @classmethod
    def covering(cls, *formulas: Formula, base: Signature | None = None) -> Signature:
        """Smallest extension of ``base`` (or a fresh signature) naming every atom used."""
        names = list(base.atoms) if base is not None else []
        seen = set(names)
        for f in formulas:
            for a in sorted(atoms_of(f)):
                if a not in seen:
                    seen.add(a)
                    names.append(a)
        return cls(names or ["p"])

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def index(self, name: str) -> int:
        return self._index[name]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Signature) and other.atoms == self.atoms

    def __hash__(self) -> int:
        return hash(self.atoms)

    def __repr__(self) -> str:
        return f"Signature({' '.join(self.atoms)})"


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(<->)|(->)|(_\|_)|(\^T\^)|([~&|()])|([a-z][a-z0-9_]*))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        tok = m.group(m.lastindex)
        if m.lastindex == 6:
            kind = "top" if tok in KEYWORDS else "atom"
        elif m.lastindex == 3:
            kind = "bottom"
        elif m.lastindex == 4:
            kind = "top"
        else:
            kind = tok
        tokens.append((kind, tok, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, sig: Signature | None):
        self.text = text
        self.sig = sig
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise FormulaSyntaxError(f"expected {kind!r}, found {found}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> Formula:
        f = self.iff()
        self.take("end")
        return f

    def iff(self) -> Formula:
        left = self.imp()
        if self.peek() == "<->":
            self.i += 1
            return Iff(left, self.iff())
        return left

    def imp(self) -> Formula:
        left = self.disj()
        if self.peek() == "->":
            self.i += 1
            return Implies(left, self.imp())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek() == "|":
            self.i += 1
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, tok, pos = self.tokens[self.i]
        if kind == "~":
            self.i += 1
            return Not(self.unary())
        if kind == "(":
            self.i += 1
            f = self.iff()
            self.take(")")
            return f
        if kind == "bottom":
            self.i += 1
            return BOTTOM
        if kind == "top":
            self.i += 1
            return TOP
        if kind == "atom":
            if self.sig is not None and tok not in self.sig:
                raise UnknownAtomError(tok, pos)
            self.i += 1
            return Atom(tok)
        found = "end of input" if kind == "end" else repr(tok)
        raise FormulaSyntaxError(f"expected a formula, found {found}", self.text, pos)


def parse(text: str, sig: Signature | None = None) -> Formula:
    """Parse ``text``; with a signature, atoms outside it are rejected."""
    return _Parser(text, sig).parse()


# -- rendering ---------------------------------------------------------------

# binding strength; higher binds tighter
_PREC = {Implies: 1, Or: 2, And: 3, Not: 4}
_SYMBOL = {Implies: "->", Or: "|", And: "&"}


def render(f: Formula) -> str:
    """Text with the fewest parentheses that still parses back to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Bottom):
        return "_|_"
    if isinstance(f, Top):
        return "^T^"
    if isinstance(f, Not):
        inner = render(f.arg)
        return "~" + (f"({inner})" if _PREC.get(type(f.arg), 5) < 4 else inner)
    left, right = render(f.left), render(f.right)
    # a binary operand is bracketed unless it repeats the parent connective
    # on the associative side; this is a little more than the precedence
    # table strictly needs, but "(p | q) -> r" reads better than "p | q -> r"
    chain_left = type(f) is not Implies
    if isinstance(f.left, (And, Or, Implies)) and not (chain_left and type(f.left) is type(f)):
        left = f"({left})"
    if isinstance(f.right, (And, Or, Implies)) and not (not chain_left and type(f.right) is type(f)):
        right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"
