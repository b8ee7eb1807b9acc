"""Extremal digraph generators and the witness realizer.

Two families underpin everything here:

* hub_tournament(n): a transitive tournament on n-1 vertices joined by
  2-cycles to a single looped hub vertex.  Outdegree sequence (1, ..., n);
  every directed cycle passes through the hub, so no two disjoint cycles.

* layered_witness(n, r, s): three transitive tournaments (sizes r-1, s-r and
  n-2s+r-2), a directed cycle on s-r+2 vertices and a single hub vertex,
  wired so the outdegree sequence is
  (0, ..., r-2, r, ..., s-1, s+1 repeated s-r+3 times, 2s-r+2, ..., n-1).
  Every cycle other than the built-in one meets both the built-in cycle and
  the hub, so again no two disjoint cycles exist.

Vertices are labeled so that vertex i has the i-th smallest outdegree; the
realizer relies on this when trimming surplus arcs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph
from .sequences import (
    DegreeSequence,
    LargenessCertificate,
    UnrealizableDegreeError,
    is_large,
)


class SequenceIsLargeError(ValueError):
    """Witness requested for a large sequence; none exists."""

    def __init__(self, certificate: LargenessCertificate):
        super().__init__(
            f"sequence is large (certificate r={certificate.r}, "
            f"s={certificate.s}, j={certificate.j}); no witness digraph exists"
        )
        self.certificate = certificate


@dataclass(frozen=True)
class LayeredLayout:
    """Vertex roles of layered_witness(n, r, s).

    Labels run green tournament, blue tournament, cycle, hub, black
    tournament, in that order.
    """

    n: int
    r: int
    s: int

    @property
    def green(self) -> tuple[int, ...]:
        return tuple(range(0, self.r - 1))

    @property
    def blue(self) -> tuple[int, ...]:
        return tuple(range(self.r - 1, self.s - 1))

    @property
    def cycle(self) -> tuple[int, ...]:
        return tuple(range(self.s - 1, 2 * self.s - self.r + 1))

    @property
    def hub(self) -> int:
        return 2 * self.s - self.r + 1

    @property
    def black(self) -> tuple[int, ...]:
        return tuple(range(2 * self.s - self.r + 2, self.n))

    def role_map(self) -> dict[str, list[int]]:
        return {
            "green": list(self.green),
            "blue": list(self.blue),
            "cycle": list(self.cycle),
            "hub": [self.hub],
            "black": list(self.black),
        }


def transitive_tournament(n: int) -> Digraph:
    """All arcs from higher to lower label; outdegree sequence (0, ..., n-1)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    arcs = [(i, j) for i in range(n) for j in range(i)]
    return Digraph.from_arcs(n, arcs)


def hub_tournament(n: int) -> Digraph:
    """Looped hub joined by 2-cycles to a transitive tournament T_{n-1}.

    Vertex n-1 is the hub; vertex i < n-1 is the tournament vertex of
    internal outdegree i.  Sorted outdegrees are (1, 2, ..., n).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    hub = n - 1
    arcs = [(i, j) for i in range(hub) for j in range(i)]
    arcs.append((hub, hub))
    for u in range(hub):
        arcs.append((hub, u))
        arcs.append((u, hub))
    return Digraph.from_arcs(n, arcs)


def layered_witness(n: int, r: int, s: int) -> tuple[Digraph, LayeredLayout]:
    """The layered extremal digraph for parameters 1 <= r <= s, n >= 2s-r+2."""
    if not 1 <= r <= s:
        raise ValueError(f"need 1 <= r <= s, got r={r}, s={s}")
    if n < 2 * s - r + 2:
        raise ValueError(f"need n >= 2s-r+2 = {2 * s - r + 2}, got n={n}")
    layout = LayeredLayout(n, r, s)
    green, blue, cyc, hub, black = (
        layout.green,
        layout.blue,
        layout.cycle,
        layout.hub,
        layout.black,
    )
    arcs: list[tuple[int, int]] = []
    for part in (green, blue, black):
        for ai, u in enumerate(part):
            for v in part[:ai]:
                arcs.append((u, v))
    for u in blue:
        arcs.extend((u, g) for g in green)
        arcs.append((u, hub))
    for ci, u in enumerate(cyc):
        arcs.append((u, cyc[(ci + 1) % len(cyc)]))
        arcs.extend((u, b) for b in blue)
        arcs.extend((u, g) for g in green)
        arcs.append((u, hub))
    arcs.extend((hub, c) for c in cyc)
    arcs.extend((hub, g) for g in green)
    for u in black:
        for v in (*green, *blue, *cyc, hub):
            arcs.append((u, v))
    return Digraph.from_arcs(n, arcs), layout


def layered_sequence(n: int, r: int, s: int) -> DegreeSequence:
    """The outdegree sequence of layered_witness(n, r, s), by formula."""
    terms = (
        list(range(0, r - 1))
        + list(range(r, s))
        + [s + 1] * (s - r + 3)
        + list(range(2 * s - r + 2, n))
    )
    return DegreeSequence(tuple(terms))


def _trim(digraph: Digraph, targets: list[int], priority) -> Digraph:
    """Delete surplus out-arcs so vertex i ends with exactly targets[i] arcs.

    priority(u, v) orders vertex u's out-arcs for deletion, smallest first;
    ties cannot occur because the head is part of the key.
    """
    arcs = set(digraph.arcs)
    for u in range(digraph.n):
        out = sorted((a for a in arcs if a[0] == u), key=lambda a: priority(u, a[1]))
        surplus = len(out) - targets[u]
        if surplus < 0:
            raise AssertionError(
                f"vertex {u} has outdegree {len(out)} below target {targets[u]}"
            )
        for a in out[:surplus]:
            arcs.remove(a)
    return Digraph.from_arcs(digraph.n, arcs)


def realize_nonlarge(d: DegreeSequence) -> tuple[Digraph, str]:
    """A digraph realizing d with no two vertex-disjoint cycles.

    Only non-large sequences admit such a witness; large inputs are refused.
    Returns the digraph and a tag naming the construction case, either
    "hub-trim" or "layered-trim(r,s)".

    Case split: when no position s has d_s >= s+1, then d_i <= i throughout
    and a trimmed hub_tournament(n) works.  Otherwise take the canonical
    (r*, s*); non-largeness pins d at s*+1 on positions s*..2s*-r*+2 and
    below the layered sequence elsewhere, so trimming layered_witness fits.
    Arc deletion cannot create cycles, hence the no-two-disjoint-cycles
    property is inherited from the untrimmed construction.
    """
    n = d.n
    if d.terms[-1] > n:
        raise UnrealizableDegreeError(
            f"term {d.terms[-1]} exceeds n = {n}; no digraph realizes it"
        )
    cert = is_large(d)
    if cert is not None:
        raise SequenceIsLargeError(cert)

    s = next((i for i in range(1, n + 1) if d.terms[i - 1] >= i + 1), None)
    if s is None:
        base = hub_tournament(n)
        hub = n - 1

        def priority(u, v):
            # tournament heads go first (higher labels first), then the
            # loop, then the hub arcs
            if v == hub and u != hub:
                return (2, 0)
            if u == v:
                return (1, 0)
            return (0, -v)

        targets = list(d.terms)
        return _trim(base, targets, priority), "hub-trim"

    r = next(i for i in range(1, s + 1) if d.terms[i - 1] >= i)
    base, layout = layered_witness(n, r, s)
    succ = {u: layout.cycle[(i + 1) % len(layout.cycle)]
            for i, u in enumerate(layout.cycle)}
    black, green, blue = set(layout.black), set(layout.green), set(layout.blue)
    cyc = set(layout.cycle)

    def priority(u, v):
        # deletion order: black heads, green, blue, cycle non-successor,
        # then successor/hub arcs; higher labels first within a class
        if v in black:
            cls = 0
        elif v in green:
            cls = 1
        elif v in blue:
            cls = 2
        elif v in cyc and succ.get(u) != v:
            cls = 3
        else:
            cls = 4
        return (cls, -v)

    targets = list(d.terms)
    return _trim(base, targets, priority), f"layered-trim({r},{s})"
