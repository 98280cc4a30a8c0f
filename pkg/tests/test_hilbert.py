import pytest

from pacbelief.formula import Atom, Implies, parse
from pacbelief.hilbert import (
    SCHEMATA, Axiom, ModusPonens, Premise, ProofError, ProofLine, check_proof,
    instantiate, match_schema, verify_proof,
)
from pacbelief.semantics import is_tautology

p, q = Atom("p"), Atom("q")


def test_fourteen_schemata_are_tautologies():
    assert sorted(SCHEMATA) == list(range(1, 15))
    for schema in SCHEMATA.values():
        assert is_tautology(schema)


def test_biconditional_schemata_are_stored_expanded():
    assert SCHEMATA[12] == parse("(~~p -> p) & (p -> ~~p)")


def test_match_and_instantiate():
    f = parse("(a & b) -> (c -> (a & b))")
    binding = match_schema(SCHEMATA[1], f)
    assert binding == {"p": parse("a & b"), "q": parse("c")}
    assert instantiate(SCHEMATA[1], binding) == f
    assert match_schema(SCHEMATA[1], parse("a -> (b -> c)")) is None
    assert match_schema(SCHEMATA[14], parse("a | ~b")) is None


def test_axiom_instance():
    proof = [ProofLine(parse("p -> (q -> p)"), Axiom(1))]
    assert check_proof(proof)


def test_modus_ponens_from_premises():
    proof = [
        ProofLine(p, Premise()),
        ProofLine(Implies(p, q), Premise()),
        ProofLine(q, ModusPonens(1, 2)),
    ]
    assert check_proof(proof, [p, Implies(p, q)])
    assert not check_proof(proof, [p])


def test_malformed_modus_ponens():
    proof = [ProofLine(p, Premise()), ProofLine(q, ModusPonens(1, 1))]
    assert not check_proof(proof, [p])


def test_identity_derivation():
    pp = parse("p -> p")
    proof = [
        ProofLine(parse("p -> ((p -> p) -> p)"), Axiom(1)),
        ProofLine(parse("(p -> ((p -> p) -> p)) -> ((p -> (p -> p)) -> (p -> p))"), Axiom(2)),
        ProofLine(parse("(p -> (p -> p)) -> (p -> p)"), ModusPonens(1, 2)),
        ProofLine(parse("p -> (p -> p)"), Axiom(1)),
        ProofLine(pp, ModusPonens(4, 3)),
    ]
    verify_proof(proof)


@pytest.mark.parametrize("proof, line", [
    ([ProofLine(parse("p -> p"), Axiom(1))], 1),
    ([ProofLine(parse("p"), Axiom(15))], 1),
    ([ProofLine(parse("q"), ModusPonens(2, 3)), ProofLine(parse("p"), Premise())], 1),
    ([ProofLine(parse("p"), Premise()), ProofLine(parse("q"), Premise())], 2),
])
def test_first_bad_line_is_reported(proof, line):
    with pytest.raises(ProofError) as err:
        verify_proof(proof, [parse("p")])
    assert err.value.line == line
