"""Decide, then act: expansion, contraction and two kinds of revision."""

from pacbelief import (
    BeliefState, Input, RankedBase, Reliability, Source, contract, expand, materialize,
    member, parse, revise_levi, revise_reverse_levi,
)

rel = Reliability("constant")
rumour, press, expert = Source("rumour", 1), Source("press", 2), Source("expert", 4)

K = BeliefState(RankedBase.of([("p", 3), ("p -> q", 2), ("r", 1)]))


def show(label, state, probes=("p", "q", "r", "s", "~r")):
    held = [x for x in probes if member(state, parse(x))]
    print(f"{label:<28} believes {held}")


show("K", K)

# Expansion only asks whether the input is better than worthless.
K1, rec = expand(K, Input(parse("s"), rumour), rel)
print(rec)
show("K + (s, rumour)", K1)

# Contraction compares entrenchment with reliability.  A rumour cannot
# dislodge a rank-3 belief...
_, rec = contract(K, Input(parse("p"), rumour), rel)
print(rec)

# ...but a newspaper can remove r, which sits at rank 1.
K2, rec = contract(K, Input(parse("r"), press), rel)
print(rec)
show("K - (r, press)", K2)

# Re-adding r recovers everything that was given up.
K3, _ = expand(K2, Input(parse("r"), press), rel)
show("(K - r) + r", K3)

# Levi revision: drop ~P if we can, then add P.
K4, rec = revise_levi(K, Input(parse("~r"), expert), rel)
print(rec)
show("K * (~r, expert)", K4)

# The experimental reverse order adds P to the base first and then trims it.
K5, rec = revise_reverse_levi(K, Input(parse("~r"), expert), rel)
print(rec)
show("K *rl (~r, expert)", K5)
print(K5.base)

# A changed state has no ranks for new beliefs; materializing assigns them.
print(materialize(K4, "naive").base)
print(materialize(K4, "strict", {parse("p"): 3, parse("p -> q"): 2, parse("~r"): 2}).base)
