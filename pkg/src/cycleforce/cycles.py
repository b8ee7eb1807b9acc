"""Exact detection of k pairwise vertex-disjoint directed cycles.

Every directed cycle's vertex set contains the vertex set of an induced
(chordless) cycle: any extra arc among the cycle's vertices shortcuts to a
strictly shorter cycle.  It therefore suffices to branch over chordless
cycles for the first k-1 cycles and finish with a plain cycle search on the
residual graph.  Exactness is mandatory; the target scale is n <= 16 for k=2.

The mask-level helpers operate on tuples/lists of bit-set adjacency rows so
the enumeration engine can call them on partial digraphs without building
Digraph values.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from .digraph import CycleWitness, Digraph


def _find_cycle_masks(
    masks: Sequence[int], n: int, allowed: int
) -> Optional[list[int]]:
    """One directed cycle (as a vertex list) within the allowed set, or None.

    Deterministic: DFS from ascending roots, neighbors ascending; loops are
    found at first visit.
    """
    WHITE, GRAY, BLACK = 0, 1, 2
    color = [WHITE] * n
    for root in range(n):
        if not allowed >> root & 1 or color[root] != WHITE:
            continue
        # iterative DFS with explicit path stack
        path = [root]
        iters = [0]
        color[root] = GRAY
        while path:
            u = path[-1]
            row = masks[u] & allowed
            v = iters[-1]
            while v < n and not row >> v & 1:
                v += 1
            if v >= n:
                color[u] = BLACK
                path.pop()
                iters.pop()
                continue
            iters[-1] = v + 1
            if v == u:
                return [u]
            if color[v] == GRAY:
                return path[path.index(v):]
            if color[v] == WHITE:
                color[v] = GRAY
                path.append(v)
                iters.append(0)
    return None


def _subset_cycle(masks: Sequence[int], subset: list[int], smask: int):
    """If the subgraph induced on subset is exactly one directed cycle
    covering it, return that cycle rooted at the smallest vertex, else None."""
    succ = {}
    for v in subset:
        row = masks[v] & smask
        if row.bit_count() != 1:
            return None
        succ[v] = row.bit_length() - 1
    start = subset[0]
    cycle = [start]
    cur = succ[start]
    while cur != start:
        if cur in succ and len(cycle) < len(subset):
            cycle.append(cur)
            cur = succ[cur]
        else:
            return None
    if len(cycle) != len(subset):
        return None
    return cycle


def _chordless_masks(
    masks: Sequence[int], n: int, allowed: int
) -> Iterator[tuple[list[int], int]]:
    """Yield (cycle, vertex mask) for every chordless cycle within allowed,
    ordered lexicographically by sorted vertex set."""
    verts = [v for v in range(n) if allowed >> v & 1]

    def rec(subset: list[int], smask: int, start: int):
        if subset:
            cycle = _subset_cycle(masks, subset, smask)
            if cycle is not None:
                yield cycle, smask
        for idx in range(start, len(verts)):
            v = verts[idx]
            subset.append(v)
            yield from rec(subset, smask | (1 << v), idx + 1)
            subset.pop()

    yield from rec([], 0, 0)


def _find_disjoint_masks(
    masks: Sequence[int], n: int, k: int, allowed: int
) -> Optional[list[list[int]]]:
    if k == 1:
        cycle = _find_cycle_masks(masks, n, allowed)
        return None if cycle is None else [cycle]
    for cycle, cmask in _chordless_masks(masks, n, allowed):
        rest = _find_disjoint_masks(masks, n, k - 1, allowed & ~cmask)
        if rest is not None:
            return [cycle] + rest
    return None


def _has_new_disjoint_pair(
    masks: Sequence[int], n: int, v: int, allowed: int
) -> bool:
    """Whether the graph has 2 disjoint cycles at least one of which passes
    through v.  Sound incremental check when arcs were only added at v and the
    previous graph had no 2 disjoint cycles."""
    bit = 1 << v
    verts = [u for u in range(n) if allowed >> u & 1 and u != v]

    def rec(subset: list[int], smask: int, start: int):
        cycle = _subset_cycle(masks, subset, smask)
        if cycle is not None:
            if _find_cycle_masks(masks, n, allowed & ~smask) is not None:
                return True
        for idx in range(start, len(verts)):
            u = verts[idx]
            subset.append(u)
            if rec(subset, smask | (1 << u), idx + 1):
                return True
            subset.pop()
        return False

    return rec([v], bit, 0)


def find_cycle(digraph: Digraph) -> Optional[CycleWitness]:
    """One directed cycle (loop allowed) or None; None iff the digraph is
    acyclic."""
    cycle = _find_cycle_masks(
        digraph.out_masks, digraph.n, (1 << digraph.n) - 1
    )
    return None if cycle is None else CycleWitness((tuple(cycle),))


def enumerate_chordless_cycles(digraph: Digraph) -> Iterator[CycleWitness]:
    """Every chordless (induced) directed cycle exactly once, loops and
    2-cycles included, ordered by sorted vertex set."""
    for cycle, _ in _chordless_masks(
        digraph.out_masks, digraph.n, (1 << digraph.n) - 1
    ):
        yield CycleWitness((tuple(cycle),))


def find_disjoint_cycles(digraph: Digraph, k: int) -> Optional[CycleWitness]:
    """k pairwise vertex-disjoint cycles if any exist, else None."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    found = _find_disjoint_masks(
        digraph.out_masks, digraph.n, k, (1 << digraph.n) - 1
    )
    return None if found is None else CycleWitness(tuple(tuple(c) for c in found))
