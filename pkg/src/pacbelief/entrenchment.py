"""Value scale, ranked belief bases, epistemic values and reliability.

The value scale for a session with ceiling ``T`` is the integers ``0..T+1``:
``0`` is the minimum ``b`` and ``T + 1`` the maximum ``t``.  Base entries are
ranked strictly between the two.

The epistemic value of a formula is read off the *cuts* of a ranked base,
``cut(r) = {g : rank(g) >= r}``:

* a tautology gets ``t``;
* a formula outside Cn(base) gets ``b``;
* anything else gets the largest ``r`` whose cut still entails it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .formula import BOTTOM, Formula, Not, Signature, atoms_of, parse
from .report import Report
from .semantics import (
    MATRICES, apply_binary, designated_mask, entails, full_mask, model_mask, truth_vector,
)

__all__ = [
    "B", "RankedBase", "Source", "Input", "SourceRegistry", "UnknownSourceError",
    "Reliability", "RELIABILITY_MODES", "epistemic_value", "reliability",
    "bar_input", "validate_epistemic", "validate_reliability",
    "load_ranked_base", "dump_ranked_base", "load_registry", "dump_registry",
]

#: The minimum ``b`` of every value scale.
B = 0

RELIABILITY_MODES = ("constant", "absurdity-aware")


@dataclass(frozen=True)
class RankedBase:
    """Finite base of (formula, rank) pairs standing for K = Cn(formulas)."""

    entries: tuple[tuple[Formula, int], ...]
    sig: Signature
    ceiling: int = 3

    def __post_init__(self):
        if self.ceiling < 1:
            raise ValueError(f"ceiling must be at least 1, got {self.ceiling}")
        object.__setattr__(self, "entries", tuple((f, int(r)) for f, r in self.entries))
        for f, r in self.entries:
            if not 1 <= r <= self.ceiling:
                raise ValueError(f"rank {r} of {f} is outside 1..{self.ceiling}")

    @classmethod
    def of(cls, entries: Iterable[tuple[Formula | str, int]], ceiling: int = 3,
           sig: Signature | None = None) -> RankedBase:
        """Build from pairs, parsing strings and widening ``sig`` to cover every atom."""
        pairs = [(parse(f, None) if isinstance(f, str) else f, r) for f, r in entries]
        sig = Signature.covering(*(f for f, _ in pairs), base=sig)
        return cls(tuple(pairs), sig, ceiling)

    @property
    def top(self) -> int:
        return self.ceiling + 1

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return tuple(f for f, _ in self.entries)

    def cut(self, rank: int) -> tuple[Formula, ...]:
        return tuple(f for f, r in self.entries if r >= rank)

    def cut_masks(self) -> list[int]:
        """``masks[r]`` = valuations designating cut(r), for r in 0..T+1."""
        masks = [model_mask(self.cut(r), self.sig) for r in range(1, self.top + 1)]
        return [masks[0]] + masks

    def with_signature(self, sig: Signature) -> RankedBase:
        return RankedBase(self.entries, sig, self.ceiling)

    def add(self, f: Formula, rank: int) -> RankedBase:
        sig = Signature.covering(f, base=self.sig)
        return RankedBase(self.entries + ((f, rank),), sig, self.ceiling)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return dump_ranked_base(self).rstrip("\n")


def _value_of_mask(d: int, masks: Sequence[int], full: int, ceiling: int) -> int:
    if d == full:
        return ceiling + 1
    if masks[1] & ~d:
        return B
    for r in range(ceiling, 0, -1):
        if masks[r] & ~d == 0:
            return r
    raise AssertionError("cut(1) entails the formula but no cut does")


def epistemic_value(rb: RankedBase, f: Formula) -> int:
    """Entrenchment of ``f`` relative to the belief set the base generates."""
    sig = rb.sig if not _outside(f, rb.sig) else Signature.covering(f, base=rb.sig)
    masks = rb.cut_masks() if sig is rb.sig else rb.with_signature(sig).cut_masks()
    return _value_of_mask(designated_mask(f, sig), masks, full_mask(sig), rb.ceiling)


def _outside(f: Formula, sig: Signature) -> bool:
    return any(a not in sig for a in atoms_of(f))


# -- sources and reliability ---------------------------------------------------

class UnknownSourceError(KeyError):
    pass


@dataclass(frozen=True)
class Source:
    id: str
    trust: int


@dataclass(frozen=True)
class Input:
    proposition: Formula
    source: Source

    def __str__(self) -> str:
        return f"({self.proposition}, {self.source.id})"


def bar_input(i: Input) -> Input:
    """The input asserting the negation, from the same source.  No simplification."""
    return Input(Not(i.proposition), i.source)


class SourceRegistry(Mapping[str, Source]):
    """Sources by id, with trust levels on the scale ``0..ceiling+1``."""

    def __init__(self, ceiling: int, trusts: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        self.ceiling = ceiling
        self._sources: dict[str, Source] = {}
        items = trusts.items() if isinstance(trusts, Mapping) else trusts
        for sid, trust in items:
            self.register(sid, trust)

    def register(self, sid: str, trust: int) -> Source:
        if not 0 <= trust <= self.ceiling + 1:
            raise ValueError(f"trust {trust} of source {sid!r} is outside 0..{self.ceiling + 1}")
        src = Source(sid, int(trust))
        self._sources[sid] = src
        return src

    def __getitem__(self, sid: str) -> Source:
        try:
            return self._sources[sid]
        except KeyError:
            raise UnknownSourceError(f"unknown source {sid!r}") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self._sources)

    def __len__(self) -> int:
        return len(self._sources)

    def input(self, proposition: Formula, sid: str) -> Input:
        return Input(proposition, self[sid])


class Reliability:
    """Reliability function over inputs.

    ``constant``: the trust of the uttering source.
    ``absurdity-aware``: as constant, except an input whose proposition
    entails falsum is worth ``b``.
    """

    def __init__(self, mode: str = "constant", registry: SourceRegistry | None = None):
        if mode not in RELIABILITY_MODES:
            raise ValueError(f"unknown reliability mode {mode!r}; expected one of {RELIABILITY_MODES}")
        self.mode = mode
        self.registry = registry

    def __call__(self, i: Input) -> int:
        trust = self.registry[i.source.id].trust if self.registry is not None else i.source.trust
        if self.mode == "absurdity-aware" and entails([i.proposition], BOTTOM):
            return B
        return trust


def reliability(i: Input, mode: str = "constant", registry: SourceRegistry | None = None) -> int:
    return Reliability(mode, registry)(i)


# -- validation ----------------------------------------------------------------

def validate_epistemic(rb: RankedBase, formulas: Iterable[Formula], report: Report | None = None,
                       **context) -> Report:
    """Check dominance, conjunctiveness, minimality and maximality of the
    epistemic values of ``rb`` over all pairs drawn from ``formulas``.

    Minimality is only asserted when the base is not trivial; otherwise it
    is counted as skipped.
    """
    report = report if report is not None else Report(["E1", "E2", "E3", "E4"])
    formulas = list(formulas)
    sig = Signature.covering(*formulas, base=rb.sig)
    rb = rb.with_signature(sig)
    masks = rb.cut_masks()
    full = full_mask(sig)
    trivial = masks[1] == 0
    vectors = [truth_vector(f, sig) for f in formulas]
    des = [v[0] | v[1] for v in vectors]
    memo: dict[int, int] = {}

    def value(d):
        e = memo.get(d)
        if e is None:
            e = memo[d] = _value_of_mask(d, masks, full, rb.ceiling)
        return e

    values = [value(d) for d in des]
    base_text = str(rb)
    for i, f in enumerate(formulas):
        e = values[i]
        report.check("E4", e != rb.top or des[i] == full, base=base_text, p=f, E=e, **context)
        if trivial:
            report.skip("E3")
        else:
            outside = masks[1] & ~des[i] != 0
            report.check("E3", outside == (e == B), base=base_text, p=f, E=e, **context)
    and_table = MATRICES["and"]
    for i, f in enumerate(formulas):
        for j, g in enumerate(formulas):
            if des[i] & ~des[j] == 0:
                report.check("E1", values[i] <= values[j], base=base_text, p=f, q=g,
                             E_p=values[i], E_q=values[j], **context)
            conj = apply_binary(and_table, vectors[i], vectors[j])
            ec = value(conj[0] | conj[1])
            report.check("E2", values[i] <= ec or values[j] <= ec, base=base_text, p=f, q=g,
                         E_p=values[i], E_q=values[j], E_pq=ec, **context)
    return report


def validate_reliability(registry: SourceRegistry, mode: str, formulas: Iterable[Formula],
                         report: Report | None = None, **context) -> Report:
    """Check reliability dominance on every same-source pair p, q with p |= q."""
    report = report if report is not None else Report(["R"])
    rel = Reliability(mode, registry)
    formulas = list(formulas)
    sig = Signature.covering(*formulas)
    des = [designated_mask(f, sig) for f in formulas]
    sources = list(registry.values())
    for s in sources:
        values = [rel(Input(f, s)) for f in formulas]
        for i, f in enumerate(formulas):
            for j, g in enumerate(formulas):
                if des[i] & ~des[j] == 0:
                    report.check("R", values[i] <= values[j], source=s.id, mode=mode,
                                 p=f, q=g, R_p=values[i], R_q=values[j], **context)
    # pairs across different sources carry no constraint
    report.skip("R", len(sources) * (len(sources) - 1) * len(formulas) ** 2)
    return report


# -- file formats ----------------------------------------------------------------

_HEADER_RE = re.compile(r"T\s*=\s*(\d+)\s*\Z")
_ENTRY_RE = re.compile(r"(\d+)\s*:\s*(.+)\Z")


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def load_ranked_base(text: str, sig: Signature | None = None) -> RankedBase:
    """Parse ``T=<int>`` followed by ``<rank>: <formula>`` lines."""
    ceiling = None
    pairs = []
    for n, line in _lines(text):
        m = _HEADER_RE.match(line)
        if m:
            if ceiling is not None:
                raise ValueError(f"line {n}: ceiling declared twice")
            ceiling = int(m.group(1))
            continue
        m = _ENTRY_RE.match(line)
        if not m:
            raise ValueError(f"line {n}: expected '<rank>: <formula>', got {line!r}")
        try:
            pairs.append((parse(m.group(2), sig), int(m.group(1))))
        except ValueError as e:
            raise ValueError(f"line {n}: {e}") from e
    if ceiling is None:
        raise ValueError("missing 'T=<int>' header")
    return RankedBase.of(pairs, ceiling, sig)


def dump_ranked_base(rb: RankedBase) -> str:
    return f"T={rb.ceiling}\n" + "".join(f"{r}: {f}\n" for f, r in rb.entries)


def load_registry(text: str, ceiling: int) -> SourceRegistry:
    reg = SourceRegistry(ceiling)
    for n, line in _lines(text):
        parts = line.split()
        if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
            raise ValueError(f"line {n}: expected '<source-id> <trust-int>', got {line!r}")
        reg.register(parts[0], int(parts[1]))
    return reg


def dump_registry(reg: SourceRegistry) -> str:
    return "".join(f"{s.id} {s.trust}\n" for s in reg.values())
