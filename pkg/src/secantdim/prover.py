"""Inductive prover for secant dimension statements in bidegree (1, d).

Proof rules, each a sound implication:

* clamp_trivial        -- s = t = 0 spans the zero subspace.
* base_AH              -- m = 0 leaves, decided by the classical
                          double-point interpolation table (subabundant
                          statements reduce to it; superabundant ones follow
                          from a filling sub-statement plus monotonicity,
                          and pure point sets are always independent).
* split(m',m'',s',s'') -- the splitting rule: V = V' (+) V'' with
                          m = m' + m'' + 1, s = s' + s''; if
                          S(m', n; 1, d; s'; s''+t) and
                          S(m'', n; 1, d; s''; s'+t) hold and both children
                          sit on the statement's side of the abundance
                          trichotomy, the statement holds.
* subabundant_monotone / superabundant_monotone
                        -- a true subabundant statement stays true when
                          (s, t) decreases componentwise; dually above.
* R_induction(...)     -- two-step induction on n at the certified
                          thresholds: a window certificate (R_under or
                          R_over) plus the statement for n - 2 yields the
                          statement for n at s_under / s_over.

Split candidates are tried in the order used by the hand reductions: peel
one factor (m' = m - 1, m'' = 0), giving the split-off factor one tangent
point when the statement is subabundant and none when superabundant, then
fall back to the remaining splits with m' decreasing (balanced splits last).
Rank certificates are the last resort, and also the only way a defective
statement could be misproved, which is why a `true` rank verdict is itself a
proof (semicontinuity) and the checker replays it.

The prover never claims falsity: statements it cannot reach come back as
unknown, with deficiency evidence recorded in the store when the rank oracle
observed it.
"""

from __future__ import annotations

import json
import re
import threading
from dataclasses import dataclass, field as dataclass_field

from .bounds import (Abundance, Statement, ambient_dim, ah_veronese_true,
                     classify, expected_dim, min_filling_true, q_bound,
                     s_over, s_under, span_count, unbalanced_range)
from .certificates import (OUTCOME_TRUE, Verdict, certify_R_over,
                           certify_R_under, eval_statement)
from .field import PrimeField, derive_seed

PROVED = "proved"
DEFICIENT_EVIDENCE = "deficient-evidence"
UNKNOWN = "unknown"

DEFAULT_MAX_VISITED = 10_000


@dataclass(frozen=True)
class ProofNode:
    statement: Statement
    rule: str
    children: tuple["ProofNode", ...] = ()

    def leaves(self):
        if not self.children:
            yield self
        else:
            for c in self.children:
                yield from c.leaves()


def proof_to_dict(node: ProofNode) -> dict:
    st = node.statement
    return {
        "statement": {"m": st.m, "n": st.n, "d": st.d, "s": st.s, "t": st.t},
        "rule": node.rule,
        "children": [proof_to_dict(c) for c in node.children],
    }


def proof_to_json(node: ProofNode) -> str:
    return json.dumps(proof_to_dict(node), indent=2)


@dataclass
class StoreEntry:
    status: str
    node: ProofNode | None = None
    provenance: str = ""


class StatementStore:
    """Memo of settled statements, shared across prover queries."""

    def __init__(self) -> None:
        self._entries: dict[tuple, StoreEntry] = {}
        self._lock = threading.Lock()

    def get(self, st: Statement) -> StoreEntry | None:
        return self._entries.get(st.key)

    def put(self, st: Statement, entry: StoreEntry) -> None:
        with self._lock:
            current = self._entries.get(st.key)
            if current is not None and current.status == PROVED:
                return
            self._entries[st.key] = entry

    def proved(self):
        for key, entry in sorted(self._entries.items()):
            if entry.status == PROVED:
                yield Statement(*key), entry.node

    def __len__(self) -> int:
        return len(self._entries)


def _side_ok(child: Statement, side: Abundance) -> bool:
    cls = classify(child)
    if side is Abundance.SUBABUNDANT:
        return cls in (Abundance.SUBABUNDANT, Abundance.EQUIABUNDANT)
    if side is Abundance.SUPERABUNDANT:
        return cls in (Abundance.SUPERABUNDANT, Abundance.EQUIABUNDANT)
    return cls is Abundance.EQUIABUNDANT


def _m0_truth(n: int, d: int, s: int, t: int) -> bool | None:
    """Truth of S(0, n; 1, d; s; t) from the interpolation table.

    Returns True/False when the base facts decide it, None when they do not
    (some superabundant configurations are true for reasons the table does
    not see; those fall through to a rank certificate).
    """
    if s == 0:
        return True
    if s * (n + 1) + t <= ambient_dim(0, n, d):
        return ah_veronese_true(n, d, s)
    if s >= min_filling_true(n, d):
        return True
    return None


class Prover:
    def __init__(self, store: StatementStore | None = None, seed: int = 0,
                 trials: int = 3, field: PrimeField | None = None,
                 max_visited: int = DEFAULT_MAX_VISITED):
        self.store = store if store is not None else StatementStore()
        self.seed = seed
        self.trials = trials
        self.field = field
        self.max_visited = max_visited
        self._visited = 0

    # -- public entry points -------------------------------------------------

    def prove(self, st: Statement) -> ProofNode | None:
        self._visited = 0
        return self._prove(st, st.m + 2, anchors=True)

    def prove_monotone(self, st: Statement) -> ProofNode | None:
        """Derive st from a stored stronger statement, if one exists."""
        return self._monotone_from_store(st)

    # -- search --------------------------------------------------------------

    def _prove(self, st: Statement, depth: int, anchors: bool) -> ProofNode | None:
        entry = self.store.get(st)
        if entry is not None and entry.status == PROVED:
            return entry.node
        if self._visited >= self.max_visited:
            return None
        self._visited += 1

        if st.s == 0 and st.t == 0:
            return self._record(st, ProofNode(st, "clamp_trivial"))

        if st.m == 0:
            return self._m0_base(st)

        node = self._monotone_from_store(st)
        if node is not None:
            return self._record(st, node)

        if depth > 0:
            node = self._split_search(st, depth)
            if node is not None:
                return self._record(st, node)

        if anchors and st.d == 2:
            node = self._anchor(st)
            if node is not None:
                return self._record(st, node)

        return self._rank_leaf(st)

    def _record(self, st: Statement, node: ProofNode) -> ProofNode:
        self.store.put(st, StoreEntry(PROVED, node, node.rule))
        return node

    def _m0_base(self, st: Statement) -> ProofNode | None:
        truth = _m0_truth(st.n, st.d, st.s, st.t)
        if truth is True:
            return self._record(st, ProofNode(st, "base_AH"))
        if truth is False:
            self.store.put(st, StoreEntry(
                DEFICIENT_EVIDENCE, None, "double-point interpolation exception"))
            return None
        return self._rank_leaf(st)

    def _monotone_from_store(self, st: Statement) -> ProofNode | None:
        for anchor, node in self.store.proved():
            if (anchor.m, anchor.n, anchor.d) != (st.m, st.n, st.d):
                continue
            if anchor.key == st.key:
                continue
            if classify(anchor) in (Abundance.SUBABUNDANT,
                                    Abundance.EQUIABUNDANT) \
                    and st.s <= anchor.s and st.t <= anchor.t:
                return ProofNode(st, "subabundant_monotone", (node,))
            if classify(anchor) in (Abundance.SUPERABUNDANT,
                                    Abundance.EQUIABUNDANT) \
                    and st.s >= anchor.s and st.t >= anchor.t:
                return ProofNode(st, "superabundant_monotone", (node,))
        return None

    def _split_candidates(self, st: Statement):
        m, s = st.m, st.s
        side = classify(st)
        seen = set()

        def emit(mp, sp):
            if 0 <= sp <= s and (mp, sp) not in seen:
                seen.add((mp, sp))
                yield mp, sp

        if side is Abundance.SUPERABUNDANT or s == 0:
            first = (m - 1, s)
        else:
            first = (m - 1, s - 1)
        yield from emit(*first)
        for mp in range(m - 1, m // 2 - 1, -1):
            for sp in range(s, -1, -1):
                yield from emit(mp, sp)

    def _split_search(self, st: Statement, depth: int) -> ProofNode | None:
        side = classify(st)
        for mp, sp in self._split_candidates(st):
            mpp = st.m - 1 - mp
            spp = st.s - sp
            left = Statement(mp, st.n, st.d, sp, spp + st.t)
            right = Statement(mpp, st.n, st.d, spp, sp + st.t)
            if not (_side_ok(left, side) and _side_ok(right, side)):
                continue
            lnode = self._prove(left, depth - 1, anchors=True)
            if lnode is None:
                continue
            rnode = self._prove(right, depth - 1, anchors=True)
            if rnode is None:
                continue
            rule = f"split({mp},{mpp},{sp},{spp})"
            return ProofNode(st, rule, (lnode, rnode))
        return None

    def _anchor(self, st: Statement) -> ProofNode | None:
        m, n = st.m, st.n
        if m < 1:
            return None
        if st.t == 0 and m <= n + 2:
            su = s_under(m, n)
            if 1 <= st.s <= su:
                anchor = self.prove_R_induction(m, n)
                if anchor is not None:
                    if st.s == su:
                        return anchor
                    return ProofNode(st, "subabundant_monotone", (anchor,))
        if m >= 2:
            so = s_over(m, n)
            if st.s >= so:
                anchor = self._super_chain(m, n)
                if anchor is not None:
                    if st.s == so and st.t == 0:
                        return anchor
                    return ProofNode(st, "superabundant_monotone", (anchor,))
        else:
            # m = 1: the subabundant threshold n + 1 is equiabundant, so it
            # anchors the superabundant side as well.
            if st.s >= n + 1:
                anchor = self.prove_R_induction(1, n)
                if anchor is not None:
                    return ProofNode(st, "superabundant_monotone", (anchor,))
        return None

    # -- threshold chains ----------------------------------------------------

    def prove_R_induction(self, m: int, n: int) -> ProofNode | None:
        """Prove T(m, n; 1, 2; s_under(m, n)) by the two-step window chain."""
        if m < 1 or n < 0 or m > n + 2:
            return None
        su = s_under(m, n)
        st = Statement(m, n, 2, su, 0)
        entry = self.store.get(st)
        if entry is not None and entry.status == PROVED:
            return entry.node
        if su == 0:
            return self._record(st, ProofNode(st, "clamp_trivial"))
        if n <= m - 1:
            return self._prove(st, st.m + 2, anchors=False)
        verdict = certify_R_under(m, n, self._cert_seed("Runder", m, n),
                                  self.trials, self.field)
        if verdict.outcome != OUTCOME_TRUE:
            return None
        child = self.prove_R_induction(m, n - 2)
        if child is None:
            return None
        node = ProofNode(st, f"R_induction(Runder({m},{n}))", (child,))
        return self._record(st, node)

    def _super_chain(self, m: int, n: int) -> ProofNode | None:
        """Prove T(m, n; 1, 2; s_over(m, n)) by the superabundant chain."""
        if m < 2:
            return None
        st = Statement(m, n, 2, s_over(m, n), 0)
        entry = self.store.get(st)
        if entry is not None and entry.status == PROVED:
            return entry.node
        if n <= 1 or (m == 2 and n == 2):
            return self._prove(st, st.m + 2, anchors=False)
        verdict = certify_R_over(m, n, self._cert_seed("Rover", m, n),
                                 self.trials, self.field)
        if verdict.outcome != OUTCOME_TRUE:
            return None
        child = self._super_chain(m, n - 2)
        if child is None:
            return None
        node = ProofNode(st, f"R_induction(Rover({m},{n}))", (child,))
        return self._record(st, node)

    # -- rank certificate leaves ----------------------------------------------

    def _cert_seed(self, *parts) -> int:
        return derive_seed(self.seed, "prover", *parts)

    def _rank_leaf(self, st: Statement) -> ProofNode | None:
        verdict = eval_statement(st, self._cert_seed("rank", *st.key),
                                 self.trials, self.field)
        if verdict.outcome == OUTCOME_TRUE:
            return self._record(st, ProofNode(st, "base_rank_certificate"))
        self.store.put(st, StoreEntry(
            DEFICIENT_EVIDENCE, None,
            f"rank {verdict.rank} < expected {verdict.expected}"))
        return None


def conjecture_verdict(m: int, n: int, s: int) -> str:
    """Classification of (m, n, s) for d = 2 by the conjectured defect list:
    (a) the unbalanced range, (b) (2, 2k+1, 3k+2), (c) (4, 3, 6)."""
    rng = unbalanced_range(m, n, 2)
    if rng is not None and rng[0] < s < rng[1]:
        return "defective:a"
    if m == 2 and n >= 3 and n % 2 == 1 and s == 3 * (n // 2) + 2:
        return "defective:b"
    if (m, n, s) == (4, 3, 6):
        return "defective:c"
    return "nondefective"


class ProofCheckError(AssertionError):
    pass


_SPLIT_RE = re.compile(r"^split\((\d+),(\d+),(\d+),(\d+)\)$")
_RIND_RE = re.compile(r"^R_induction\((Runder|Rover)\((\d+),(\d+)\)\)$")


def check_proof(node: ProofNode, seed: int = 0, trials: int = 3,
                field: PrimeField | None = None) -> None:
    """Re-validate every rule application in a proof tree, independently of
    the search that produced it.  Raises ProofCheckError on any violation.
    Rank-certificate leaves are re-measured with the prover's seed schedule.
    """
    st = node.statement
    rule = node.rule

    def fail(msg: str):
        raise ProofCheckError(f"{msg} at {st} [{rule}]")

    if rule == "clamp_trivial":
        if st.s != 0 or st.t != 0:
            fail("clamp_trivial needs s = t = 0")
        if node.children:
            fail("leaf rule with children")
        return

    if rule == "base_AH":
        if st.m != 0:
            fail("base_AH needs m = 0")
        if _m0_truth(st.n, st.d, st.s, st.t) is not True:
            fail("interpolation table does not support this leaf")
        if node.children:
            fail("leaf rule with children")
        return

    if rule == "base_rank_certificate":
        cert_seed = derive_seed(seed, "prover", "rank", *st.key)
        verdict = eval_statement(st, cert_seed, trials, field)
        if verdict.outcome != OUTCOME_TRUE:
            fail("rank certificate does not reproduce")
        if node.children:
            fail("leaf rule with children")
        return

    m = _SPLIT_RE.match(rule)
    if m is not None:
        mp, mpp, sp, spp = (int(g) for g in m.groups())
        if mp + mpp + 1 != st.m or sp + spp != st.s:
            fail("split arithmetic broken")
        if len(node.children) != 2:
            fail("split needs two children")
        left, right = node.children
        want_left = Statement(mp, st.n, st.d, sp, spp + st.t)
        want_right = Statement(mpp, st.n, st.d, spp, sp + st.t)
        if left.statement != want_left or right.statement != want_right:
            fail("split children mismatch")
        side = classify(st)
        if not (_side_ok(left.statement, side) and _side_ok(right.statement, side)):
            fail("split children leave the statement's abundance side")
        check_proof(left, seed, trials, field)
        check_proof(right, seed, trials, field)
        return

    if rule in ("subabundant_monotone", "superabundant_monotone"):
        if len(node.children) != 1:
            fail("monotone needs one child")
        anchor = node.children[0].statement
        if (anchor.m, anchor.n, anchor.d) != (st.m, st.n, st.d):
            fail("monotone across different (m, n, d)")
        if rule == "subabundant_monotone":
            if not (st.s <= anchor.s and st.t <= anchor.t):
                fail("monotone child is not stronger")
            if classify(anchor) is Abundance.SUPERABUNDANT:
                fail("subabundant monotone from a strictly superabundant anchor")
        else:
            if not (st.s >= anchor.s and st.t >= anchor.t):
                fail("monotone child is not stronger")
            if classify(anchor) is Abundance.SUBABUNDANT:
                fail("superabundant monotone from a strictly subabundant anchor")
        check_proof(node.children[0], seed, trials, field)
        return

    m = _RIND_RE.match(rule)
    if m is not None:
        kind, cm, cn = m.group(1), int(m.group(2)), int(m.group(3))
        if (cm, cn) != (st.m, st.n) or st.d != 2 or st.t != 0:
            fail("window chain indices mismatch")
        threshold = s_under if kind == "Runder" else s_over
        if st.s != threshold(cm, cn):
            fail("window chain at the wrong threshold")
        if len(node.children) != 1:
            fail("window chain needs one child")
        child = node.children[0].statement
        want = Statement(cm, cn - 2, 2, threshold(cm, cn - 2), 0)
        if child != want:
            fail("window chain child mismatch")
        cert_seed = derive_seed(seed, "prover", kind, cm, cn)
        cert = certify_R_under if kind == "Runder" else certify_R_over
        verdict = cert(cm, cn, cert_seed, trials, field)
        if verdict.outcome != OUTCOME_TRUE:
            fail("window certificate does not reproduce")
        check_proof(node.children[0], seed, trials, field)
        return

    fail("unknown rule")
