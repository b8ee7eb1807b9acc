"""Degree-sequence predicates for forcing vertex-disjoint cycles.

All indices on the API surface (r, s, j, error positions) are 1-based,
matching the usual mathematical convention for sequences d_1 <= ... <= d_n.
Storage is a plain 0-based tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


class SequenceParseError(ValueError):
    """Malformed sequence text.  ``position`` is the 1-based offending term."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class UnrealizableDegreeError(ValueError):
    """Some term exceeds the maximum outdegree any digraph on n vertices allows."""


@dataclass(frozen=True)
class DegreeSequence:
    """A nonempty nondecreasing sequence of nonnegative integers."""

    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ValueError("degree sequence must be nonempty")
        for i, t in enumerate(terms):
            if t < 0:
                raise ValueError(f"negative term {t} at position {i + 1}")
            if i > 0 and t < terms[i - 1]:
                raise ValueError(
                    f"sequence not nondecreasing at position {i + 1}: "
                    f"{terms[i - 1]} > {t}"
                )

    @property
    def n(self) -> int:
        return len(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __str__(self) -> str:
        return ",".join(str(t) for t in self.terms)

    def term(self, i: int) -> int:
        """The i-th term, 1-based."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside [1, {self.n}]")
        return self.terms[i - 1]

    def delete(self, i: int) -> "DegreeSequence":
        """Remove the i-th term (1-based); requires length >= 2."""
        if self.n < 2:
            raise ValueError("cannot delete from a singleton sequence")
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside [1, {self.n}]")
        return DegreeSequence(self.terms[: i - 1] + self.terms[i:])

    def pointwise_leq(self, other: "DegreeSequence") -> bool:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")
        return all(a <= b for a, b in zip(self.terms, other.terms))

    def is_realizable(self, loops: bool = True) -> bool:
        """Whether some digraph on n vertices has these outdegrees."""
        cap = self.n if loops else self.n - 1
        return self.terms[-1] <= cap


def parse_sequence(text: str) -> DegreeSequence:
    """Parse comma-separated nonnegative integers, e.g. ``1,3,3,3,3,5``."""
    parts = text.strip().split(",")
    terms = []
    for pos, part in enumerate(parts, start=1):
        part = part.strip()
        if not part:
            raise SequenceParseError(f"empty term at position {pos}", pos)
        try:
            value = int(part)
        except ValueError:
            raise SequenceParseError(
                f"not an integer at position {pos}: {part!r}", pos
            ) from None
        if value < 0:
            raise SequenceParseError(f"negative term at position {pos}: {value}", pos)
        if terms and value < terms[-1]:
            raise SequenceParseError(
                f"sequence decreases at position {pos}: {terms[-1]} > {value}", pos
            )
        terms.append(value)
    return DegreeSequence(tuple(terms))


@dataclass(frozen=True)
class LargenessCertificate:
    """A pair (r, s), optionally with witnessing index j, certifying largeness.

    j is present exactly when the conditional clause's antecedent held for the
    certified sequence (position 2s-r+2 exists and carries the value s+1).
    """

    r: int
    s: int
    j: Optional[int] = None

    def check(self, d: DegreeSequence) -> None:
        """Raise ValueError unless this certificate is valid for d."""
        n = d.n
        if not 1 <= self.r <= self.s <= n:
            raise ValueError(f"indices out of range: r={self.r}, s={self.s}, n={n}")
        if d.term(self.r) < self.r:
            raise ValueError(f"d_{self.r} = {d.term(self.r)} < r = {self.r}")
        if d.term(self.s) < self.s + 1:
            raise ValueError(f"d_{self.s} = {d.term(self.s)} < s+1 = {self.s + 1}")
        boundary = 2 * self.s - self.r + 2
        antecedent = n >= boundary and d.term(boundary) == self.s + 1
        if antecedent:
            if self.j is None:
                raise ValueError("witnessing index j required but absent")
            if not boundary + 1 <= self.j <= n:
                raise ValueError(f"j = {self.j} outside [{boundary + 1}, {n}]")
            if d.term(self.j) < self.j:
                raise ValueError(f"d_{self.j} = {d.term(self.j)} < j = {self.j}")
        elif self.j is not None:
            raise ValueError("witnessing index j present but antecedent does not hold")


def is_rs_large(d: DegreeSequence, r: int, s: int) -> bool:
    """Whether d is (r,s)-large.

    Requires d_r >= r and d_s >= s+1, and additionally, whenever position
    2s-r+2 exists and equals s+1, some later position j must satisfy d_j >= j.
    """
    n = d.n
    if not 1 <= r <= s <= n:
        raise IndexError(f"need 1 <= r <= s <= n, got r={r}, s={s}, n={n}")
    t = d.terms
    if t[r - 1] < r or t[s - 1] < s + 1:
        return False
    boundary = 2 * s - r + 2
    if n >= boundary and t[boundary - 1] == s + 1:
        return any(t[j - 1] >= j for j in range(boundary + 1, n + 1))
    return True


def _witness_j(d: DegreeSequence, r: int, s: int) -> Optional[int]:
    """Smallest valid j when the conditional clause's antecedent holds, else None.

    Assumes is_rs_large(d, r, s) is true.
    """
    n = d.n
    boundary = 2 * s - r + 2
    if n >= boundary and d.terms[boundary - 1] == s + 1:
        for j in range(boundary + 1, n + 1):
            if d.terms[j - 1] >= j:
                return j
    return None


def is_large(d: DegreeSequence) -> Optional[LargenessCertificate]:
    """The canonical largeness certificate of d, or None.

    Canonical pair: s* is the smallest s with d_s >= s+1, r* the smallest
    r <= s* with d_r >= r (s* itself qualifies, so r* exists).  The canonical
    pair is large iff any pair is; is_large_exhaustive cross-checks this.
    """
    t = d.terms
    n = d.n
    s = next((i for i in range(1, n + 1) if t[i - 1] >= i + 1), None)
    if s is None:
        return None
    r = next(i for i in range(1, s + 1) if t[i - 1] >= i)
    if not is_rs_large(d, r, s):
        return None
    return LargenessCertificate(r, s, _witness_j(d, r, s))


def is_large_exhaustive(d: DegreeSequence) -> Optional[LargenessCertificate]:
    """Ground-truth largeness scan over all O(n^2) pairs.

    Returns the certificate for the lexicographically smallest passing
    (s, r) pair, or None.
    """
    n = d.n
    for s in range(1, n + 1):
        for r in range(1, s + 1):
            if is_rs_large(d, r, s):
                return LargenessCertificate(r, s, _witness_j(d, r, s))
    return None


def forces_one(d: DegreeSequence) -> Optional[int]:
    """Smallest j with d_j >= j, or None.

    Presence is equivalent to every digraph realizing d containing a cycle.
    """
    for j in range(1, d.n + 1):
        if d.terms[j - 1] >= j:
            return j
    return None


def forces_two(d: DegreeSequence) -> tuple[bool, Optional[LargenessCertificate]]:
    """Whether every digraph realizing d contains two vertex-disjoint cycles.

    True exactly when d is large; the certificate is the canonical one.
    """
    cert = is_large(d)
    return cert is not None, cert


def delete_term(d: DegreeSequence, i: int) -> DegreeSequence:
    return d.delete(i)


def pointwise_leq(d: DegreeSequence, e: DegreeSequence) -> bool:
    return d.pointwise_leq(e)


def sequence_of(terms: Iterable[int]) -> DegreeSequence:
    return DegreeSequence(tuple(terms))
