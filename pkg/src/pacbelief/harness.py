"""Randomised and exhaustive checks of the logic and the change operators.

Each suite runs a number of independent *cases*.  Case ``k`` of suite ``s``
draws all its randomness from ``random.Random(f"{seed}/{s}/{k}")``, so any
counterexample can be replayed on its own with :func:`replay`.

Closure-type properties quantify over every formula; here they are checked
against finite probe families.  The exhaustive families hold one
representative per truth table among all formulas of bounded depth; since
every check depends on formulas only through their truth tables, that is as
strong as checking every formula of that depth.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .change import BeliefState, contract, expand, member, revise_levi, revise_reverse_levi
from .entrenchment import (
    B, Input, RankedBase, Reliability, RELIABILITY_MODES, Source, SourceRegistry,
    epistemic_value, validate_epistemic, validate_reliability,
)
from .formula import (
    BOTTOM, TOP, And, Atom, Bottom, Formula, Implies, Not, Or, Signature, Top, subformulas,
)
from .hilbert import SCHEMATA, instantiate
from .report import Report
from .semantics import (
    VALUES, corrupted, entails, equivalent, evaluate, is_tautology, table_entries,
    truth_vector,
)

__all__ = [
    "GenConfig", "SUITES", "gen_formula", "gen_base", "formula_family",
    "check_hilbert_soundness", "check_deduction_theorem", "check_cn_properties",
    "check_epistemic_axioms", "check_reliability_axiom", "check_expansion_postulates",
    "check_contraction_postulates", "check_revision_success", "check_guard_lemma",
    "run_suite", "replay", "mutation_sweep",
]

ATOM_NAMES = ("p", "q", "r", "s")


@dataclass(frozen=True)
class GenConfig:
    """Scenario generator settings.

    ``cases`` drives the belief-change and Cn suites; the kernel suites run
    ``kernel_cases`` samples (per schema, for the axiom check).
    """

    atoms: int = 3
    max_depth: int = 3
    base_size: int = 4
    ceiling: int = 3
    trust_range: tuple[int, int] | None = None
    seed: int = 0
    cases: int = 500
    kernel_cases: int = 1000
    epistemic_bases: int = 60
    lemma_bases: int = 40
    probes: int = 24

    def __post_init__(self):
        if not 1 <= self.atoms <= len(ATOM_NAMES):
            raise ValueError(f"atoms must be in 1..{len(ATOM_NAMES)}")
        if not 0 <= self.max_depth <= 5:
            raise ValueError("max_depth must be in 0..5")
        if not 0 <= self.base_size <= 6:
            raise ValueError("base_size must be in 0..6")
        if not 1 <= self.ceiling <= 5:
            raise ValueError("ceiling must be in 1..5")
        lo, hi = self.trusts
        if not 0 <= lo <= hi <= self.ceiling + 1:
            raise ValueError(f"trust_range must lie within 0..{self.ceiling + 1}")

    @property
    def sig(self) -> Signature:
        return Signature(ATOM_NAMES[:self.atoms])

    @property
    def trusts(self) -> tuple[int, int]:
        return self.trust_range if self.trust_range is not None else (B, self.ceiling + 1)

    def rng(self, suite: str, case: int) -> random.Random:
        return random.Random(f"{self.seed}/{suite}/{case}")


# -- generators ------------------------------------------------------------------

def gen_formula(cfg: GenConfig, rng: random.Random, max_depth: int | None = None,
                atoms: Sequence[str] | None = None) -> Formula:
    """Random formula of depth at most ``max_depth`` (default ``cfg.max_depth``)."""
    atoms = atoms if atoms is not None else ATOM_NAMES[:cfg.atoms]
    d = cfg.max_depth if max_depth is None else max_depth

    def go(d):
        if d == 0 or rng.random() < 0.25:
            x = rng.random()
            if x < 0.05:
                return BOTTOM
            if x < 0.10:
                return TOP
            return Atom(rng.choice(atoms))
        x = rng.random()
        if x < 0.22:
            return Not(go(d - 1))
        op = (And, Or, Implies)[int(rng.random() * 3)]
        return op(go(d - 1), go(d - 1))

    return go(d)


def gen_base(cfg: GenConfig, rng: random.Random, size: int | None = None,
             atoms: int | None = None) -> RankedBase:
    n_atoms = atoms or cfg.atoms
    names = ATOM_NAMES[:n_atoms]
    n = rng.randint(0, cfg.base_size) if size is None else size
    entries = tuple((gen_formula(cfg, rng, atoms=names), rng.randint(1, cfg.ceiling))
                    for _ in range(n))
    return RankedBase(entries, Signature(names), cfg.ceiling)


def gen_proposition(cfg: GenConfig, rng: random.Random, base: RankedBase) -> Formula:
    """Input proposition, biased toward beliefs already held and toward extremes."""
    x = rng.random()
    if base.entries and x < 0.3:
        return rng.choice(base.formulas)
    if base.entries and x < 0.4:
        return Or(rng.choice(base.formulas), gen_formula(cfg, rng, 1))
    if x < 0.45:
        a = Atom(rng.choice(base.sig.atoms))
        return Or(a, Not(a))
    if x < 0.5:
        a = Atom(rng.choice(base.sig.atoms))
        return rng.choice((BOTTOM, And(a, Not(a))))
    return gen_formula(cfg, rng)


def gen_trust(cfg: GenConfig, rng: random.Random, near: int | None = None) -> int:
    """Trust level, biased to the minimum and to ties with ``near``."""
    lo, hi = cfg.trusts
    x = rng.random()
    if x < 0.15:
        return lo
    if near is not None and x < 0.55:
        return min(hi, max(lo, near + rng.choice((-1, 0, 0, 1))))
    return rng.randint(lo, hi)


def _constant_free(cfg: GenConfig, rng: random.Random) -> Formula:
    while True:
        f = gen_formula(cfg, rng)
        if not any(isinstance(g, (Top, Bottom)) for g in subformulas(f)):
            return f


def equivalent_variant(f: Formula, rng: random.Random, cfg: GenConfig) -> Formula:
    """A syntactically different formula designated exactly when ``f`` is."""
    choices = (
        lambda: Not(Not(f)),
        lambda: And(f, f),
        lambda: Or(f, f),
        lambda: And(f, TOP),
        lambda: Or(f, BOTTOM),
        lambda: And(f, Or(f, gen_formula(cfg, rng, 1))),
        lambda: Or(BOTTOM, Not(Not(f))),
    )
    return rng.choice(choices)()


@lru_cache(maxsize=None)
def formula_family(atoms: int, max_depth: int = 2) -> tuple[Formula, ...]:
    """One shortest-found representative per truth table among formulas of
    depth <= ``max_depth`` over the first ``atoms`` atom names."""
    sig = Signature(ATOM_NAMES[:atoms])
    seen: dict[tuple[int, int, int], Formula] = {}
    for f in [Atom(a) for a in sig.atoms] + [BOTTOM, TOP]:
        seen.setdefault(truth_vector(f, sig), f)
    for _ in range(max_depth):
        current = list(seen.values())
        grown = [Not(f) for f in current]
        grown += [op(f, g) for f in current for g in current for op in (And, Or, Implies)]
        for f in grown:
            seen.setdefault(truth_vector(f, sig), f)
    return tuple(seen.values())


def _members(state, probes: Sequence[Formula]) -> list[bool]:
    return [member(state, f) for f in probes]


def _subset(a: Sequence[bool], b: Sequence[bool]) -> bool:
    return all(y for x, y in zip(a, b) if x)


def _first_diff(a: Sequence[bool], b: Sequence[bool], probes: Sequence[Formula]):
    for x, y, f in zip(a, b, probes):
        if x != y:
            return f
    return None


def _first_missing(a: Sequence[bool], b: Sequence[bool], probes: Sequence[Formula]):
    for x, y, f in zip(a, b, probes):
        if x and not y:
            return f
    return None


# -- kernel suites ------------------------------------------------------------------

def _hilbert_case(cfg: GenConfig, case: int, report: Report) -> None:
    rng = cfg.rng("hilbert", case)
    names = ATOM_NAMES[:min(cfg.atoms, 3)]
    sub_depth = min(cfg.max_depth, 4)
    for k, schema in SCHEMATA.items():
        binding = {v: gen_formula(cfg, rng, rng.randint(0, sub_depth), names) for v in "pqr"}
        inst = instantiate(schema, binding)
        report.check(f"A{k}", is_tautology(inst, Signature(names)),
                     suite="hilbert", case=case, instance=inst)
    # modus ponens on a single valuation
    a = gen_formula(cfg, rng, atoms=names)
    b = a if rng.random() < 0.1 else gen_formula(cfg, rng, atoms=names)
    v = {n: rng.choice(VALUES) for n in names}
    if rng.random() < 0.5:
        # steer towards a designated antecedent
        for _ in range(8):
            if evaluate(v, a).designated:
                break
            v = {n: rng.choice(VALUES) for n in names}
    premises_hold = evaluate(v, a).designated and evaluate(v, Implies(a, b)).designated
    report.check("MP", not premises_hold or evaluate(v, b).designated,
                 suite="hilbert", case=case, minor=a, major=Implies(a, b),
                 valuation={k: int(x) for k, x in v.items()})


def _deduction_case(cfg: GenConfig, case: int, report: Report) -> None:
    rng = cfg.rng("deduction", case)
    names = ATOM_NAMES[:min(cfg.atoms, 3)]
    sig = Signature(names)
    premises = [gen_formula(cfg, rng, atoms=names) for _ in range(rng.randint(0, 3))]
    p = gen_formula(cfg, rng, atoms=names)
    q = rng.choice([gen_formula(cfg, rng, atoms=names), p, Or(p, gen_formula(cfg, rng, 1, names))])
    left = entails(premises + [p], q, sig)
    right = entails(premises, Implies(p, q), sig)
    report.check("DT", left == right, suite="deduction", case=case,
                 premises=premises, p=p, q=q, with_p=left, implication=right)


def _cn_case(cfg: GenConfig, case: int, report: Report) -> None:
    rng = cfg.rng("cn", case)
    sig = cfg.sig
    A = [gen_formula(cfg, rng) for _ in range(rng.randint(0, cfg.base_size))]
    family = formula_family(cfg.atoms, 2)
    probes = rng.sample(family, min(cfg.probes, len(family))) + A
    ctx = dict(suite="cn", case=case, base=A)

    for a in A:
        report.check("Cn1", entails(A, a, sig), **ctx, p=a)

    in_cn = [f for f in probes if entails(A, f, sig)]
    G = rng.sample(in_cn, min(len(in_cn), rng.randint(1, 3))) if in_cn else []
    for f in probes:
        if entails(G, f, sig):
            report.check("Cn2", entails(A, f, sig), **ctx, G=G, p=f)

    extra = [gen_formula(cfg, rng) for _ in range(rng.randint(1, 2))]
    for f in in_cn:
        report.check("Cn3", entails(A + extra, f, sig), **ctx, extra=extra, p=f)

    for f in in_cn:
        # shrink to a finite subset that still entails f
        core = list(A)
        for a in list(core):
            rest = [g for g in core if g is not a]
            if entails(rest, f, sig):
                core = rest
        ok = entails(core, f, sig) and all(any(c is a for a in A) for c in core)
        report.check("Cn4", ok, **ctx, p=f, core=core)

    p = rng.choice(probes) if probes else gen_formula(cfg, rng)
    x = rng.random()
    if x < 0.3:
        q = r = p
    elif x < 0.6:
        q, r = And(p, gen_formula(cfg, rng, 1)), And(gen_formula(cfg, rng, 1), p)
    else:
        q, r = gen_formula(cfg, rng), gen_formula(cfg, rng)
    for f in [p] + probes[:8]:
        if entails(A + [q], f, sig) and entails(A + [r], f, sig):
            report.check("Cn5", entails(A + [Or(q, r)], f, sig), **ctx, q=q, r=r, p=f)


def _epistemic_case(cfg: GenConfig, case: int, report: Report) -> None:
    rng = cfg.rng("epistemic", case)
    # exhaustive over the depth-2 family on two atoms
    rb = gen_base(cfg, rng, atoms=2)
    validate_epistemic(rb, formula_family(2, 2), report, suite="epistemic", case=case)
    # sampled on three atoms
    if cfg.atoms >= 3:
        rb3 = gen_base(cfg, rng, atoms=3)
        sample = [gen_formula(cfg, rng, atoms=ATOM_NAMES[:3]) for _ in range(cfg.probes)]
        sample += list(rb3.formulas)
        validate_epistemic(rb3, sample, report, suite="epistemic", case=case)


def _reliability_case(cfg: GenConfig, case: int, report: Report) -> None:
    rng = cfg.rng("reliability", case)
    reg = SourceRegistry(cfg.ceiling, {f"s{k}": gen_trust(cfg, rng) for k in range(rng.randint(1, 3))})
    sample = [gen_formula(cfg, rng) for _ in range(cfg.probes)]
    sample += [BOTTOM, And(sample[0], Not(sample[0]))]
    mode = RELIABILITY_MODES[case % 2]
    validate_reliability(reg, mode, sample, report, suite="reliability", case=case)


# -- belief-change suites ------------------------------------------------------------

def _scenario(cfg: GenConfig, rng: random.Random, case: int):
    base = gen_base(cfg, rng)
    rel = Reliability(RELIABILITY_MODES[case % 2])
    return base, rel


def _expansion_case(cfg: GenConfig, case: int, report: Report) -> None:
    rng = cfg.rng("expansion", case)
    base, rel = _scenario(cfg, rng, case)
    probes = formula_family(cfg.atoms, 2)
    P = gen_proposition(cfg, rng, base)
    if case % 5 == 0:
        trust = B  # forced rejection
    else:
        trust = gen_trust(cfg, rng)
    I = Input(P, Source("s", trust))
    ctx = dict(suite="expansion", case=case, base=str(base), input=str(I), mode=rel.mode)

    K = BeliefState(base)
    after, rec = expand(K, I, rel)
    mK, mA = _members(K, probes), _members(after, probes)

    # (+1) closure, sampled: whatever a handful of members entail is a member
    held = [f for f, m in zip(probes, mA) if m]
    G = rng.sample(held, min(len(held), 3))
    if rec.accepted:
        G.append(P)
    for f, m in zip(probes, mA):
        if entails(G, f, base.sig):
            report.check("+1", m, **ctx, G=G, witness=f)

    report.check("+2", member(after, P) or mA == mK, **ctx,
                 witness=_first_diff(mK, mA, probes))
    report.check("+3", _subset(mK, mA), **ctx, witness=_first_missing(mK, mA, probes))
    if member(K, P):
        report.check("+4", mA == mK, **ctx, witness=_first_diff(mK, mA, probes))
    else:
        report.skip("+4")

    # (+5) monotony against a larger base
    extra = [(gen_formula(cfg, rng), rng.randint(1, cfg.ceiling)) for _ in range(rng.randint(1, 2))]
    K2 = BeliefState(RankedBase(base.entries + tuple(extra), base.sig, base.ceiling))
    after2, _ = expand(K2, I, rel)
    mA2 = _members(after2, probes)
    report.check("+5", _subset(mA, mA2), **ctx, extra=[str(f) for f, _ in extra],
                 witness=_first_missing(mA, mA2, probes))

    # (+6) the accepted result is exactly Cn(K + P); a rejected one is K
    if rec.accepted:
        direct = [entails(base.formulas + (P,), f, base.sig) for f in probes]
        report.check("+6", mA == direct, **ctx, witness=_first_diff(direct, mA, probes))
    else:
        report.check("+6", mA == mK, **ctx, witness=_first_diff(mK, mA, probes))

    # paraconsistency: accepting ~f into Cn({f}) must not explode.  Without
    # constants every formula takes 0 when all its atoms do, so {f, ~f} has a
    # model leaving a fresh atom false.
    f = _constant_free(cfg, rng)
    clash, _ = expand(BeliefState(RankedBase(((f, 1),), base.sig, base.ceiling)),
                      Input(Not(f), Source("s", cfg.ceiling + 1)), Reliability("constant"))
    fresh = Atom("fresh")
    report.check("+para", not member(clash, BOTTOM) and not member(clash, fresh),
                 suite="expansion", case=case, formula=f)

    # the same postulates over a contracted belief set
    J = Input(gen_proposition(cfg, rng, base), Source("t", gen_trust(cfg, rng)))
    view, _ = contract(K, J, rel)
    vafter, vrec = expand(view, I, rel)
    mV, mVA = _members(view, probes), _members(vafter, probes)
    vctx = dict(ctx, contracted_by=str(J))
    report.check("+2", member(vafter, P) or mVA == mV, **vctx, witness=_first_diff(mV, mVA, probes))
    report.check("+3", _subset(mV, mVA), **vctx, witness=_first_missing(mV, mVA, probes))
    if member(view, P):
        report.check("+4", mVA == mV, **vctx, witness=_first_diff(mV, mVA, probes))
    else:
        report.skip("+4")


def _contraction_case(cfg: GenConfig, case: int, report: Report) -> None:
    rng = cfg.rng("contraction", case)
    base, rel = _scenario(cfg, rng, case)
    probes = formula_family(cfg.atoms, 2)
    K = BeliefState(base)
    mK = _members(K, probes)
    P1 = gen_proposition(cfg, rng, base)
    trust = gen_trust(cfg, rng, near=epistemic_value(base, P1))
    s = Source("s", trust)
    I1 = Input(P1, s)
    ctx = dict(suite="contraction", case=case, base=str(base), input=str(I1), mode=rel.mode)

    V1, rec1 = contract(K, I1, rel)
    m1 = _members(V1, probes)

    held = [f for f, m in zip(probes, m1) if m]
    G = rng.sample(held, min(len(held), 3))
    for f, m in zip(probes, m1):
        if entails(G, f, base.sig):
            report.check("-1", m, **ctx, G=G, witness=f)

    report.check("-2", not member(V1, P1) or m1 == mK, **ctx, witness=_first_diff(mK, m1, probes))
    report.check("-3", _subset(m1, mK), **ctx, witness=_first_missing(m1, mK, probes))
    if not member(K, P1):
        report.check("-4", m1 == mK, **ctx, witness=_first_diff(mK, m1, probes))
    else:
        report.skip("-4")

    # (-5) extensionality, same source only
    P2 = equivalent_variant(P1, rng, cfg)
    if equivalent(P1, P2, base.sig):
        V2, _ = contract(K, Input(P2, s), rel)
        m2 = _members(V2, probes)
        report.check("-5", m1 == m2, **ctx, other=P2, witness=_first_diff(m1, m2, probes))
    else:
        report.skip("-5")

    # (-6) recovery through the deduction theorem
    for f, m in zip(probes, mK):
        if m:
            report.check("-6", member(V1, f, assuming=(P1,)), **ctx, witness=f)

    # (-7), (-8) with a same-source conjunction
    P2 = gen_proposition(cfg, rng, base) if rng.random() < 0.7 else gen_formula(cfg, rng, 1)
    V2, _ = contract(K, Input(P2, s), rel)
    V3, _ = contract(K, Input(And(P1, P2), s), rel)
    m2, m3 = _members(V2, probes), _members(V3, probes)
    both = [x and y for x, y in zip(m1, m2)]
    tctx = dict(ctx, second=str(P2))
    report.check("-7", _subset(both, m3), **tctx, witness=_first_missing(both, m3, probes))
    if not member(V3, P1):
        report.check("-8", _subset(m3, m1), **tctx, witness=_first_missing(m3, m1, probes))
    else:
        report.skip("-8")
    # a different source for the second input puts the triple out of scope
    report.skip("-7")
    report.skip("-8")


def _revision_case(cfg: GenConfig, case: int, report: Report) -> None:
    rng = cfg.rng("revision", case)
    base, rel = _scenario(cfg, rng, case)
    probes = formula_family(cfg.atoms, 2)
    K = BeliefState(base)
    P = gen_proposition(cfg, rng, base)
    if rng.random() < 0.5:
        P = Not(P) if rng.random() < 0.5 else P
    trust = B if case % 7 == 0 else gen_trust(cfg, rng, near=epistemic_value(base, Not(P)))
    I = Input(P, Source("s", trust))
    ctx = dict(suite="revision", case=case, base=str(base), input=str(I), mode=rel.mode)
    mK = _members(K, probes)

    R, rec = revise_levi(K, I, rel)
    mR = _members(R, probes)
    report.check("*success", member(R, P) or mR == mK, **ctx,
                 accepted=rec.accepted, witness=_first_diff(mK, mR, probes))

    RL, rec = revise_reverse_levi(K, I, rel)
    mRL = _members(RL, probes)
    report.check("*RL-success", member(RL, P) or mRL == mK, **ctx,
                 accepted=rec.accepted, witness=_first_diff(mK, mRL, probes))


def _lemma_bases(cfg: GenConfig) -> list[RankedBase]:
    # every one-entry base over the depth-1 family, then seeded random bases
    # of two and three entries
    sig = Signature(ATOM_NAMES[:2])
    bases = [RankedBase(((f, r),), sig, cfg.ceiling)
             for f in formula_family(2, 1) for r in range(1, cfg.ceiling + 1)]
    bases.insert(0, RankedBase((), sig, cfg.ceiling))
    rng = cfg.rng("lemma", -1)
    pool = formula_family(2, 2)
    for _ in range(cfg.lemma_bases):
        n = rng.randint(2, 3)
        bases.append(RankedBase(tuple((rng.choice(pool), rng.randint(1, cfg.ceiling))
                                      for _ in range(n)), sig, cfg.ceiling))
    return bases


def _lemma_case(cfg: GenConfig, case: int, report: Report) -> None:
    rb = _lemma_bases(cfg)[case]
    family = formula_family(2, 2)
    sig = rb.sig
    values = {f: epistemic_value(rb, f) for f in family}
    memo: dict = {}
    base_text = str(rb)
    for p in family:
        e = values[p]
        if e == rb.top:
            # tautologies are never contraction pivots; the cut above t is empty
            report.skip("lemma", len(family))
            continue
        cut = rb.cut(e + 1)
        for q in family:
            pq = Or(p, q)
            key = (e, truth_vector(pq, sig))
            hit = memo.get(key)
            if hit is None:
                hit = memo[key] = (e < epistemic_value(rb, pq), entails(cut, pq, sig))
            left, right = hit
            report.check("lemma", left == right, suite="lemma", case=case, base=base_text,
                         p=p, q=q, E_p=e, by_value=left, by_cut=right)


# -- suite registry --------------------------------------------------------------

@dataclass(frozen=True)
class Suite:
    name: str
    case: Callable[[GenConfig, int, Report], None]
    count: Callable[[GenConfig], int]
    postulates: tuple[str, ...] = field(default=())


SUITES: dict[str, Suite] = {s.name: s for s in (
    Suite("hilbert", _hilbert_case, lambda c: c.kernel_cases,
          tuple(f"A{k}" for k in SCHEMATA) + ("MP",)),
    Suite("deduction", _deduction_case, lambda c: c.kernel_cases, ("DT",)),
    Suite("cn", _cn_case, lambda c: c.cases, ("Cn1", "Cn2", "Cn3", "Cn4", "Cn5")),
    Suite("epistemic", _epistemic_case, lambda c: c.epistemic_bases, ("E1", "E2", "E3", "E4")),
    Suite("reliability", _reliability_case, lambda c: c.cases // 5, ("R",)),
    Suite("expansion", _expansion_case, lambda c: c.cases, tuple(f"+{k}" for k in range(1, 7)) + ("+para",)),
    Suite("contraction", _contraction_case, lambda c: c.cases, tuple(f"-{k}" for k in range(1, 9))),
    Suite("revision", _revision_case, lambda c: c.cases, ("*success", "*RL-success")),
    Suite("lemma", _lemma_case, lambda c: len(_lemma_bases(c)), ("lemma",)),
)}


def _run(suite: Suite, cfg: GenConfig, stop_on_failure: bool = False) -> Report:
    report = Report()
    for case in range(suite.count(cfg)):
        try:
            suite.case(cfg, case, report)
        except Exception as e:  # a crash is a failed check, not an aborted run
            report.check(f"{suite.name}-error", False, suite=suite.name, case=case,
                         error=f"{type(e).__name__}: {e}")
        if stop_on_failure and not report.passed:
            break
    return _ordered(report, suite.postulates)


def _ordered(report: Report, names: Iterable[str]) -> Report:
    out = Report()
    for n in list(names) + [n for n in report if n not in names]:
        if n in report:
            out.verdicts[n] = report[n]
    return out


def check_hilbert_soundness(cfg: GenConfig) -> Report:
    return _run(SUITES["hilbert"], cfg)


def check_deduction_theorem(cfg: GenConfig) -> Report:
    return _run(SUITES["deduction"], cfg)


def check_cn_properties(cfg: GenConfig) -> Report:
    return _run(SUITES["cn"], cfg)


def check_epistemic_axioms(cfg: GenConfig) -> Report:
    return _run(SUITES["epistemic"], cfg)


def check_reliability_axiom(cfg: GenConfig) -> Report:
    return _run(SUITES["reliability"], cfg)


def check_expansion_postulates(cfg: GenConfig) -> Report:
    return _run(SUITES["expansion"], cfg)


def check_contraction_postulates(cfg: GenConfig) -> Report:
    return _run(SUITES["contraction"], cfg)


def check_revision_success(cfg: GenConfig) -> Report:
    return _run(SUITES["revision"], cfg)


def check_guard_lemma(cfg: GenConfig) -> Report:
    return _run(SUITES["lemma"], cfg)


def run_suite(cfg: GenConfig, which: Iterable[str] | None = None,
              stop_on_failure: bool = False) -> Report:
    """Run the named suites (all by default) and merge their reports."""
    names = list(SUITES) if which is None else list(which)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites {unknown}; choose from {list(SUITES)}")
    report = Report()
    for n in names:
        report.merge(_run(SUITES[n], cfg, stop_on_failure))
        if stop_on_failure and not report.passed:
            break
    return report


def replay(cfg: GenConfig, suite: str, case: int) -> Report:
    """Re-run one case of one suite in isolation."""
    report = Report()
    SUITES[suite].case(cfg, case, report)
    return report


@dataclass
class MutantResult:
    connective: str
    args: tuple[int, ...]
    value: int
    caught_by: str | None
    seconds: float


def mutation_sweep(cfg: GenConfig, suites: Sequence[str] = (
        "hilbert", "deduction", "cn", "epistemic", "expansion", "contraction"),
        ) -> list[MutantResult]:
    """Corrupt each matrix entry to each other value; report the first suite to notice."""
    results = []
    for name, args, value in table_entries():
        for other in VALUES:
            if other == value:
                continue
            start = time.perf_counter()
            caught = None
            with corrupted(name, args, other):
                for s in suites:
                    if not _run(SUITES[s], cfg, stop_on_failure=True).passed:
                        caught = s
                        break
            results.append(MutantResult(name, tuple(int(a) for a in args), int(other), caught,
                                        time.perf_counter() - start))
    return results
