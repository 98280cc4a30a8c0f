"""The property harness: suites, reports, replay and mutation testing."""

from pacbelief.harness import GenConfig, check_cn_properties, replay, run_suite
from pacbelief.semantics import corrupted

# A small configuration runs in a few seconds.
cfg = GenConfig(cases=60, kernel_cases=200, epistemic_bases=10, lemma_bases=10)
report = run_suite(cfg)
print(report.table())
print("all pass:", report.passed)
print()

# Break one entry of the disjunction matrix: false | false becomes true.
# Proof by cases no longer holds and the Cn suite says so.
with corrupted("or", (-1, -1), 1):
    broken = check_cn_properties(cfg)
    print(broken.table())
    example = broken["Cn5"].counterexamples[0]
    print("counterexample:", example)
    # Each case draws its randomness from (seed, suite, case), so it replays alone.
    print("replayed:", replay(cfg, "cn", example["case"]).failures)

# With the matrix restored the same case passes.
print("after restore:", replay(cfg, "cn", example["case"]).failures)
print()
print(report.to_jsonl().splitlines()[0])
