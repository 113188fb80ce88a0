"""Inductive proof search, proof checking, conjecture comparison."""

import dataclasses
import json
import os

import pytest

from secantdim.bounds import Statement
from secantdim.certificates import eval_statement
from secantdim.prover import (ProofCheckError, ProofNode, Prover,
                              StatementStore, check_proof, conjecture_verdict,
                              proof_to_dict, proof_to_json)

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def _load(name):
    with open(os.path.join(GOLDEN, name)) as fh:
        return json.load(fh)


def test_golden_tree_2_2_3():
    node = Prover(seed=0, trials=3).prove(Statement(2, 2, 2, 3, 0))
    assert proof_to_dict(node) == _load("proof_2_2_3.json")


def test_golden_family_trees():
    for k in (1, 2, 3):
        st = Statement(2 * k + 1, 2 * k, 2, k + 1, 0)
        node = Prover(seed=0, trials=3).prove(st)
        assert proof_to_dict(node) == _load(f"proof_family_k{k}.json"), k


def test_family_tree_leaf_shape():
    # the balanced split of T(2k+1, 2k; k+1) bottoms out in k+1 copies each of
    # two interpolation statements on the second factor alone
    for k in (1, 2, 3):
        node = Prover(seed=0).prove(Statement(2 * k + 1, 2 * k, 2, k + 1, 0))
        leaves = sorted(leaf.statement.key for leaf in node.leaves())
        assert leaves == sorted([(0, 2 * k, 2, 1, k)] * (k + 1)
                                + [(0, 2 * k, 2, 0, k + 1)] * (k + 1))


def test_prove_defective_returns_none():
    prover = Prover(seed=0)
    assert prover.prove(Statement(2, 3, 2, 5, 0)) is None
    assert prover.prove(Statement(4, 3, 2, 6, 0)) is None


def test_prove_trivial_and_base():
    node = Prover(seed=0).prove(Statement(3, 4, 2, 0, 0))
    assert node.rule == "clamp_trivial"
    node = Prover(seed=0).prove(Statement(0, 3, 2, 1, 0))
    assert node.rule == "base_AH" and not node.children


def test_check_proof_accepts_golden():
    for name in ("proof_2_2_3.json", "proof_family_k1.json",
                 "proof_family_k2.json", "proof_family_k3.json"):
        check_proof(_dict_to_node(_load(name)), seed=0, trials=3)


def _dict_to_node(d):
    st = Statement(**d["statement"])
    children = tuple(_dict_to_node(c) for c in d["children"])
    return ProofNode(st, d["rule"], children)


def test_check_proof_rejects_tampering():
    good = _dict_to_node(_load("proof_2_2_3.json"))

    wrong_rule = ProofNode(good.statement, "split(0,1,2,1)", good.children)
    with pytest.raises(ProofCheckError):
        check_proof(wrong_rule)

    wrong_statement = ProofNode(Statement(2, 2, 2, 4, 0), good.rule, good.children)
    with pytest.raises(ProofCheckError):
        check_proof(wrong_statement)

    bogus_leaf = ProofNode(Statement(2, 3, 2, 5, 0), "rank_certificate", ())
    with pytest.raises(ProofCheckError):
        check_proof(bogus_leaf)

    bogus_base = ProofNode(Statement(0, 3, 2, 2, 0), "base_AH", ())
    with pytest.raises(ProofCheckError):
        check_proof(bogus_base)


def test_check_proof_roundtrip_through_json():
    node = Prover(seed=0).prove(Statement(3, 3, 2, 4, 0))
    assert node is not None
    replayed = _dict_to_node(json.loads(proof_to_json(node)))
    check_proof(replayed, seed=0, trials=3)


def test_r_induction_rule_used_on_super_side():
    # at the superabundant threshold the chain anchors in a window
    # certificate rather than bottoming out in splits
    node = Prover(seed=0).prove(Statement(1, 2, 2, 3, 0))
    assert node is not None
    rules = set()

    def walk(nd):
        rules.add(nd.rule.split("(")[0])
        for c in nd.children:
            walk(c)

    walk(node)
    assert "R_induction" in rules
    check_proof(node, seed=0, trials=3)


def test_store_keeps_first_proof():
    store = StatementStore()
    prover = Prover(store=store, seed=0)
    st = Statement(1, 2, 2, 2, 0)
    first = prover.prove(st)
    again = prover.prove(st)
    assert first is again  # second call is a store hit
    assert st.key in {proved.key for proved, _ in store.proved()}


def test_conjecture_verdict_classes():
    assert conjecture_verdict(2, 3, 5) == "defective:b"
    assert conjecture_verdict(2, 5, 8) == "defective:b"
    assert conjecture_verdict(4, 3, 6) == "defective:c"
    assert conjecture_verdict(5, 2, 5) == "defective:a"
    assert conjecture_verdict(6, 2, 5) == "defective:a"
    assert conjecture_verdict(2, 3, 4) == "nondefective"
    assert conjecture_verdict(3, 3, 4) == "nondefective"


def test_proved_statements_are_actually_true():
    """Everything the prover accepts must have zero defect numerically."""
    store = StatementStore()
    prover = Prover(store=store, seed=0, trials=2)
    known_false = {(2, 3, 5), (2, 5, 8), (4, 3, 6)}
    for m in range(0, 4):
        for n in range(1, 4):
            for s in range(0, 7):
                for t in range(0, 3):
                    st = Statement(m, n, 2, s, t)
                    node = prover.prove(st)
                    if node is None:
                        continue
                    v = eval_statement(st, seed=1, trials=2)
                    assert v.defect == 0, st
                    if t == 0:
                        assert (m, n, s) not in known_false, st
