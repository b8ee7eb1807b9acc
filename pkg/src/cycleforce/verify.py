"""Exhaustive small-n verification of the forcing characterizations.

For every nondecreasing sequence in scope, the predicate verdict (forces k
disjoint cycles, decided arithmetically) is compared against ground truth
obtained by enumerating all labeled realizations.  The enumeration assigns
out-neighborhoods vertex by vertex and prunes a subtree as soon as the
partial digraph already contains k disjoint cycles: a partial digraph is a
subgraph of every completion and adding arcs never destroys cycles.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator, Optional

from .cycles import (
    _find_cycle_masks,
    _find_disjoint_masks,
    _has_new_disjoint_pair,
)
from .digraph import Digraph
from .sequences import (
    DegreeSequence,
    UnrealizableDegreeError,
    forces_one,
    is_large,
    is_rs_large,
)


def enumerate_realizations(
    d: DegreeSequence, loops: bool = True
) -> Iterator[Digraph]:
    """Every labeled digraph in which vertex i has outdegree d.terms[i].

    The total count is the product over i of C(m, d_i) with m = n (loops
    allowed) or n - 1.
    """
    n = d.n
    cap = n if loops else n - 1
    if d.terms[-1] > cap:
        raise UnrealizableDegreeError(
            f"term {d.terms[-1]} exceeds max outdegree {cap}"
        )
    head_sets = []
    for i in range(n):
        heads = [v for v in range(n) if loops or v != i]
        head_sets.append(list(itertools.combinations(heads, d.terms[i])))
    for choice in itertools.product(*head_sets):
        arcs = [(u, v) for u, heads in enumerate(choice) for v in heads]
        yield Digraph.from_arcs(n, arcs)


@dataclass
class SearchStats:
    nodes: int = 0
    pruned: int = 0
    leaves: int = 0
    exhausted: bool = True


def _search_counterexample(
    d: DegreeSequence,
    k: int,
    loops: bool,
    prune: bool,
    node_limit: Optional[int],
) -> tuple[Optional[Digraph], SearchStats]:
    n = d.n
    cap = n if loops else n - 1
    if d.terms[-1] > cap:
        raise UnrealizableDegreeError(
            f"term {d.terms[-1]} exceeds max outdegree {cap}"
        )
    if k not in (1, 2):
        raise ValueError(f"k must be 1 or 2, got {k}")
    # assign high-degree vertices first: their arcs create cycles soonest,
    # which is where the pruning bites
    order = sorted(range(n), key=lambda i: (-d.terms[i], i))
    combos = []
    for v in order:
        heads = [u for u in range(n) if loops or u != v]
        combos.append(list(itertools.combinations(heads, d.terms[v])))
    masks = [0] * n
    stats = SearchStats()
    full = (1 << n) - 1

    def partial_has_k(v: int) -> bool:
        if k == 1:
            return _find_cycle_masks(masks, n, full) is not None
        return _has_new_disjoint_pair(masks, n, v, full)

    def rec(pos: int) -> Optional[Digraph]:
        if pos == n:
            stats.leaves += 1
            if prune:
                # every intermediate check passed, so no k disjoint cycles
                return _to_digraph()
            if _find_disjoint_masks(masks, n, k, full) is None:
                return _to_digraph()
            return None
        v = order[pos]
        for heads in combos[pos]:
            stats.nodes += 1
            if node_limit is not None and stats.nodes > node_limit:
                stats.exhausted = False
                return None
            mask = 0
            for u in heads:
                mask |= 1 << u
            masks[v] = mask
            if prune and partial_has_k(v):
                stats.pruned += 1
            else:
                found = rec(pos + 1)
                if found is not None or not stats.exhausted:
                    masks[v] = 0
                    return found
            masks[v] = 0
        return None

    def _to_digraph() -> Digraph:
        arcs = [
            (u, v)
            for u in range(n)
            for v in range(n)
            if masks[u] >> v & 1
        ]
        return Digraph.from_arcs(n, arcs)

    return rec(0), stats


def search_counterexample(
    d: DegreeSequence,
    k: int,
    loops: bool = True,
    prune: bool = True,
    node_limit: Optional[int] = None,
) -> Optional[Digraph]:
    """A realization of d containing no k disjoint cycles, or None if every
    realization contains them."""
    found, _ = _search_counterexample(d, k, loops, prune, node_limit)
    return found


@dataclass
class SequenceRecord:
    sequence: tuple[int, ...]
    predicate_forces: bool
    predicate_detail: Optional[dict]
    counterexample: Optional[list[list[int]]]
    exhausted: bool
    nodes: int
    pruned: int
    leaves: int
    unrealizable: bool = False

    @property
    def enumeration_forces(self) -> Optional[bool]:
        if not self.exhausted:
            return None
        return self.counterexample is None

    @property
    def disagree(self) -> bool:
        verdict = self.enumeration_forces
        return verdict is not None and verdict != self.predicate_forces

    @property
    def partial(self) -> bool:
        return not self.exhausted


@dataclass
class VerificationReport:
    kind: str
    n_max: int
    k: int
    loops: bool
    records: list[SequenceRecord] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    checked: int = 0
    elapsed: float = 0.0

    @property
    def disagreements(self) -> list[SequenceRecord]:
        return [rec for rec in self.records if rec.disagree]

    @property
    def partials(self) -> list[SequenceRecord]:
        return [rec for rec in self.records if rec.partial]

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.violations and not self.partials

    def to_json(self) -> str:
        payload = {
            "kind": self.kind,
            "n_max": self.n_max,
            "k": self.k,
            "loops": self.loops,
            "checked": self.checked,
            "disagreements": len(self.disagreements),
            "partials": len(self.partials),
            "violations": self.violations,
            "elapsed_seconds": round(self.elapsed, 3),
            "records": [
                dict(
                    asdict(rec),
                    sequence=list(rec.sequence),
                    disagree=rec.disagree,
                    partial=rec.partial,
                )
                for rec in self.records
            ],
        }
        return json.dumps(payload, separators=(",", ":"), sort_keys=True)

    def to_table(self) -> str:
        lines = [
            f"{self.kind} verification  n_max={self.n_max} k={self.k} "
            f"loops={self.loops}",
            f"checked: {self.checked}  disagreements: "
            f"{len(self.disagreements)}  partials: {len(self.partials)}  "
            f"violations: {len(self.violations)}  "
            f"elapsed: {self.elapsed:.2f}s",
        ]
        header = f"{'sequence':<24}{'predicate':<12}{'enumeration':<14}{'flag'}"
        rows = []
        for rec in self.records:
            seq = ",".join(str(t) for t in rec.sequence)
            pred = "forces" if rec.predicate_forces else "refutable"
            if rec.unrealizable:
                enum = "unrealizable"
            elif rec.partial:
                enum = "PARTIAL"
            elif rec.counterexample is None:
                enum = "exhausted"
            else:
                enum = "counterexample"
            flag = "DISAGREE" if rec.disagree else ""
            rows.append(f"{seq:<24}{pred:<12}{enum:<14}{flag}")
        if rows:
            lines.append(header)
            lines.extend(rows)
        for violation in self.violations:
            lines.append(f"VIOLATION: {violation}")
        return "\n".join(lines) + "\n"


def _predicate(d: DegreeSequence, k: int) -> tuple[bool, Optional[dict]]:
    if k == 1:
        j = forces_one(d)
        return j is not None, None if j is None else {"j": j}
    cert = is_large(d)
    if cert is None:
        return False, None
    return True, {"r": cert.r, "s": cert.s, "j": cert.j}


def check_sequence(
    d: DegreeSequence,
    k: int,
    loops: bool = True,
    node_limit: Optional[int] = None,
) -> SequenceRecord:
    """Compare the arithmetic verdict for d against exhaustive enumeration."""
    forces, detail = _predicate(d, k)
    cap = d.n if loops else d.n - 1
    if d.terms[-1] > cap:
        # no realization exists, so forcing holds vacuously
        return SequenceRecord(
            sequence=d.terms,
            predicate_forces=forces,
            predicate_detail=detail,
            counterexample=None,
            exhausted=True,
            nodes=0,
            pruned=0,
            leaves=0,
            unrealizable=True,
        )
    found, stats = _search_counterexample(d, k, loops, True, node_limit)
    counterexample = None
    if found is not None:
        # report invariant: embedded counterexamples must re-validate
        assert found.outdegree_sequence().terms == d.terms
        assert _find_disjoint_masks(
            found.out_masks, found.n, k, (1 << found.n) - 1
        ) is None
        counterexample = [[u, v] for u, v in sorted(found.arcs)]
    return SequenceRecord(
        sequence=d.terms,
        predicate_forces=forces,
        predicate_detail=detail,
        counterexample=counterexample,
        exhausted=stats.exhausted,
        nodes=stats.nodes,
        pruned=stats.pruned,
        leaves=stats.leaves,
    )


def _sequences_in_scope(n_max: int, loops: bool) -> Iterator[DegreeSequence]:
    for n in range(1, n_max + 1):
        cap = n if loops else n - 1
        for terms in itertools.combinations_with_replacement(range(cap + 1), n):
            yield DegreeSequence(terms)


def _check_args(args) -> SequenceRecord:
    terms, k, loops, node_limit = args
    return check_sequence(DegreeSequence(terms), k, loops, node_limit)


def verify_theorem(
    n_max: int,
    k: int,
    loops: bool = True,
    node_limit: Optional[int] = None,
    jobs: int = 1,
) -> VerificationReport:
    """Check the forcing characterization for k in {1, 2} on every
    nondecreasing sequence of length <= n_max with terms within the
    realizability cap.  Expected outcome: zero disagreements."""
    start = time.monotonic()
    report = VerificationReport("theorem", n_max, k, loops)
    work = [
        (d.terms, k, loops, node_limit) for d in _sequences_in_scope(n_max, loops)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_check_args, work, chunksize=8))
    else:
        records = [_check_args(args) for args in work]
    records.sort(key=lambda rec: (len(rec.sequence), rec.sequence))
    report.records = records
    report.checked = len(records)
    report.elapsed = time.monotonic() - start
    return report


def verify_fact_deletion(n_max: int) -> VerificationReport:
    """Deleting one term from a sequence with d_n < n cannot destroy
    (r,s)-largeness for any witnessing pair with s < n.  Pure arithmetic;
    expected outcome: zero violations."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    start = time.monotonic()
    report = VerificationReport("fact-deletion", n_max, 2, True)
    checked = 0
    for n in range(2, n_max + 1):
        for terms in itertools.combinations_with_replacement(range(n), n):
            d = DegreeSequence(terms)
            for s in range(1, n):
                for r in range(1, s + 1):
                    if not is_rs_large(d, r, s):
                        continue
                    checked += 1
                    for i in range(1, n + 1):
                        if not is_rs_large(d.delete(i), r, s):
                            report.violations.append(
                                {"sequence": list(terms), "r": r, "s": s,
                                 "deleted": i}
                            )
    report.checked = checked
    report.elapsed = time.monotonic() - start
    return report


def intro_example_sequences(n: int) -> list[DegreeSequence]:
    """The two sequence families from the motivating discussion, at length n:
    (1,3,3,3,4,4,...) with three 3's and (1,3,3,3,3,4,...) with four 3's."""
    if n < 5:
        raise ValueError(f"families are defined for n >= 5, got {n}")
    three_threes = (1, 3, 3, 3) + (4,) * (n - 4)
    four_threes = (1, 3, 3, 3, 3) + (4,) * (n - 5)
    return [DegreeSequence(four_threes), DegreeSequence(three_threes)]


def adjudicate_intro_examples(
    n_values: tuple[int, ...] = (5, 6),
    node_limit: Optional[int] = None,
) -> VerificationReport:
    """Settle the motivating-example discrepancy computationally: for each n,
    record predicate and enumeration verdicts for both families."""
    start = time.monotonic()
    report = VerificationReport("intro-examples", max(n_values), 2, True)
    for n in n_values:
        for d in intro_example_sequences(n):
            report.records.append(check_sequence(d, 2, True, node_limit))
    report.records.sort(key=lambda rec: (len(rec.sequence), rec.sequence))
    report.checked = len(report.records)
    report.elapsed = time.monotonic() - start
    return report
