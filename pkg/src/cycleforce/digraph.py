"""Labeled digraph value type: loops and 2-cycles allowed, no parallel arcs.

Vertices are 0-indexed integers in file formats and in memory; only the
sequence API is 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .sequences import DegreeSequence

FORMATS = ("edge-list", "dot", "json")


class DigraphParseError(ValueError):
    """Malformed digraph text.  ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) outside vertex range [0, {self.n})")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        return cls(n, frozenset(arcs))

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        """Bit-set out-neighborhood rows: bit v of row u set iff arc u -> v."""
        rows = [0] * self.n
        for u, v in self.arcs:
            rows[u] |= 1 << v
        return tuple(rows)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbors(self, u: int) -> list[int]:
        row = self.out_masks[u]
        return [v for v in range(self.n) if row >> v & 1]

    def outdegree_sequence(self) -> DegreeSequence:
        """The sorted (nondecreasing) outdegrees; a loop counts 1."""
        if self.n == 0:
            raise ValueError("outdegree sequence of the empty digraph is empty")
        return DegreeSequence(tuple(sorted(row.bit_count() for row in self.out_masks)))

    def delete_vertices(self, removed: Iterable[int]) -> "Digraph":
        """Delete a vertex set; survivors are relabeled order-preservingly."""
        removed = set(removed)
        for u in removed:
            if not 0 <= u < self.n:
                raise ValueError(f"vertex {u} outside range [0, {self.n})")
        keep = [v for v in range(self.n) if v not in removed]
        relabel = {old: new for new, old in enumerate(keep)}
        arcs = frozenset(
            (relabel[u], relabel[v])
            for u, v in self.arcs
            if u not in removed and v not in removed
        )
        return Digraph(len(keep), arcs)

    def is_acyclic(self) -> bool:
        """True iff there is no directed cycle of any length >= 1.

        Kahn-style peeling, independent of the cycle-search module so the two
        can cross-check each other.
        """
        indeg = [0] * self.n
        for u, v in self.arcs:
            if u == v:
                return False
            indeg[v] += 1
        stack = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while stack:
            u = stack.pop()
            seen += 1
            row = self.out_masks[u]
            for v in range(self.n):
                if row >> v & 1:
                    indeg[v] -= 1
                    if indeg[v] == 0:
                        stack.append(v)
        return seen == self.n


@dataclass(frozen=True)
class CycleWitness:
    """k pairwise vertex-disjoint directed cycles; a length-1 cycle is a loop."""

    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cycles = tuple(tuple(c) for c in self.cycles)
        object.__setattr__(self, "cycles", cycles)

    @property
    def k(self) -> int:
        return len(self.cycles)

    def validate(self, digraph: Digraph) -> None:
        """Raise ValueError unless every cycle exists in the digraph and the
        cycles are pairwise vertex-disjoint."""
        used: set[int] = set()
        for cycle in self.cycles:
            if not cycle:
                raise ValueError("empty cycle in witness")
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated vertex within cycle {cycle}")
            for i, u in enumerate(cycle):
                v = cycle[(i + 1) % len(cycle)]
                if not digraph.has_arc(u, v):
                    raise ValueError(f"missing arc ({u}, {v}) for cycle {cycle}")
            overlap = used.intersection(cycle)
            if overlap:
                raise ValueError(f"cycles share vertices {sorted(overlap)}")
            used.update(cycle)

    def to_json(self) -> str:
        return json.dumps(
            {"k": self.k, "cycles": [list(c) for c in self.cycles]},
            separators=(",", ":"),
        )


def parse_digraph(text: str) -> Digraph:
    """Parse the edge-list format: first significant line is n, then ``u v``
    arc lines; ``#`` lines are comments."""
    n: Optional[int] = None
    arcs: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise DigraphParseError(
                    f"line {lineno}: expected vertex count, got {line!r}", lineno
                ) from None
            if n < 0:
                raise DigraphParseError(
                    f"line {lineno}: vertex count must be nonnegative", lineno
                )
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DigraphParseError(
                f"line {lineno}: expected 'u v', got {line!r}", lineno
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DigraphParseError(
                f"line {lineno}: non-integer endpoint in {line!r}", lineno
            ) from None
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphParseError(
                f"line {lineno}: vertex out of range in arc ({u}, {v})", lineno
            )
        if (u, v) in arcs:
            raise DigraphParseError(
                f"line {lineno}: duplicate arc ({u}, {v})", lineno
            )
        arcs.add((u, v))
    if n is None:
        raise DigraphParseError("missing vertex count line")
    return Digraph(n, frozenset(arcs))


def render_digraph(digraph: Digraph, fmt: str = "edge-list") -> str:
    """Render in one of FORMATS; arc order is lexicographic in every format."""
    arcs = sorted(digraph.arcs)
    if fmt == "edge-list":
        lines = [str(digraph.n)]
        lines.extend(f"{u} {v}" for u, v in arcs)
        return "\n".join(lines) + "\n"
    if fmt == "dot":
        lines = ["digraph G {"]
        lines.extend(f"  {u} -> {v};" for u, v in arcs)
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return (
            json.dumps(
                {"n": digraph.n, "arcs": [[u, v] for u, v in arcs]},
                separators=(",", ":"),
            )
            + "\n"
        )
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
