"""Entrenchment read off a ranked base, and source reliability."""

from pacbelief import Input, RankedBase, Reliability, Source, epistemic_value, parse
from pacbelief.entrenchment import validate_epistemic
from pacbelief.harness import formula_family

# Ranks 1..T; here T = 3.  Values range over 0 (b) .. 4 (t).
rb = RankedBase.of([("p", 3), ("p -> q", 2), ("r", 1)], ceiling=3)
print(rb)
print()

# A formula's value is the highest cut of the base that still entails it.
for text in ["p", "q", "r", "q | s", "p & r", "s", "p | ~p"]:
    print(f"E({text}) = {epistemic_value(rb, parse(text))}")

# The derived values satisfy the entrenchment axioms.  Check them on every
# truth table of depth <= 2 over p and q (97 formulas).
report = validate_epistemic(rb.with_signature(rb.sig), formula_family(2, 2))
print()
print(report.table())

# Reliability comes from the source.  The absurdity-aware mode also
# refuses anything entailing falsum; a mere contradiction is not refused.
news = Source("news", 2)
for mode in ("constant", "absurdity-aware"):
    rel = Reliability(mode)
    print(mode, [rel(Input(parse(x), news)) for x in ("p", "p & ~p", "_|_")])
