"""Source-sensitive, non-prioritized belief change over the paraconsistent logic PAC."""

from .change import (
    BeliefState, ChangeRecord, ContractedView, Guard, NotBaseBacked, StrictMaterializationError,
    contract, expand, materialize, member, revise_levi, revise_reverse_levi,
)
from .entrenchment import (
    B, Input, RankedBase, Reliability, Source, SourceRegistry, bar_input, epistemic_value,
    load_ranked_base, load_registry, reliability,
)
from .formula import (
    BOTTOM, TOP, And, Atom, Formula, FormulaSyntaxError, Iff, Implies, Not, Or, Signature,
    UnknownAtomError, parse, render,
)
from .harness import GenConfig, mutation_sweep, replay, run_suite
from .hilbert import SCHEMATA, check_proof, verify_proof
from .report import Report
from .semantics import (
    MATRICES, TruthValue, entails, equivalent, evaluate, is_tautology, is_trivial, truth_vector,
)

__version__ = "0.1.0"
