"""Brute-force computation of leading terms as minima of relation supports.

A level-k relation attached to an index multiset of size 2(k+1) is a sum
over all pairings of the multiset into k+1 unordered index pairs; its
degree-n coefficient spreads each pairing over all degree compositions of
n.  The leading term is the minimum of that support under the well order
on partitions.  Nothing here knows about diagonal paths: the module
exists to validate the closed-form generators (and the order convention
itself) against exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from .leading import fs_leading_terms, window_split
from .partitions import Color, ColoredPartition, Factor, upper_scheme


def _pairings(elements: tuple[int, ...]):
    """Distinct ways to split a sorted multiset into unordered pairs."""
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    seen = set()
    for idx, partner in enumerate(rest):
        if partner in seen:
            continue
        seen.add(partner)
        remainder = rest[:idx] + rest[idx + 1 :]
        for tail in _pairings(remainder):
            yield ((first, partner),) + tail


@lru_cache(maxsize=None)
def _negative_compositions(n: int, parts: int) -> tuple[tuple[int, ...], ...]:
    """Ordered tuples of `parts` integers <= -1 summing to n."""
    if parts == 1:
        return ((n,),) if n <= -1 else ()
    out = []
    # the first part can go as low as n+(parts-1), leaving -1 for the rest
    for first in range(-1, n + parts - 2, -1):
        for rest in _negative_compositions(n - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


@dataclass(frozen=True)
class RelationSupport:
    """The support of one coefficient of the relation attached to a multiset."""

    multiset: tuple[int, ...]
    degree: int
    level: int
    rank: int
    partitions: frozenset[ColoredPartition] = field(repr=False)


def relation_support(
    multiset: tuple[int, ...], n: int, k: int, m: int
) -> RelationSupport:
    """All partitions in the degree-n coefficient of the multiset's relation.

    Every pairing of the multiset into k+1 unordered pairs, spread over
    every composition of n into k+1 degrees <= -1.
    """
    multiset = tuple(multiset)
    if len(multiset) != m:
        raise ValueError(f"expected {m} multiplicities, got {len(multiset)}")
    if any(c < 0 for c in multiset):
        raise ValueError("multiplicities must be nonnegative")
    if sum(multiset) != 2 * (k + 1):
        raise ValueError(f"multiset size must be 2(k+1) = {2 * (k + 1)}")
    if n > -(k + 1):
        raise ValueError(
            f"degree {n} leaves no composition into {k + 1} parts <= -1"
        )
    alphabet = upper_scheme(m)
    elements: list[int] = []
    for idx, count in enumerate(multiset, start=1):
        elements.extend([idx] * count)
    supports = set()
    for pairing in _pairings(tuple(elements)):
        for comp in _negative_compositions(n, k + 1):
            factors = tuple(
                Factor(Color(alphabet, i, j), deg)
                for (i, j), deg in zip(pairing, comp)
            )
            supports.add(ColoredPartition(alphabet, factors))
    return RelationSupport(
        multiset=multiset, degree=n, level=k, rank=m, partitions=frozenset(supports)
    )


def brute_leading_term(
    multiset: tuple[int, ...], n: int, k: int, m: int
) -> ColoredPartition:
    """Minimum of the relation support under the well order on partitions."""
    support = relation_support(multiset, n, k, m)
    return min(support.partitions, key=lambda p: p.sort_key)


@dataclass(frozen=True)
class AuditReport:
    """Outcome of comparing brute-force minima against the closed-form sets."""

    rank: int
    level: int
    windows: int
    mismatches: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "level": self.level,
            "windows": self.windows,
            "mismatches": [dict(m) for m in self.mismatches],
        }


def audit_windows(m: int, k: int, d_max: int) -> AuditReport:
    """Exhaustively compare brute-force minima with the closed-form generators.

    For every index multiset of size 2(k+1), every window d <= d_max and
    every degree split, the brute-force minimum must exist in the closed
    set, the two sets must coincide, and each minimum must be supported on
    two consecutive degrees.  Mismatches are reported as data.
    """
    if m < 1 or k < 1 or d_max < 1:
        raise ValueError("rank, level and window bound must be positive")
    multisets = [
        tuple(combo.count(i) for i in range(1, m + 1))
        for combo in combinations_with_replacement(range(1, m + 1), 2 * (k + 1))
    ]
    mismatches: list[dict] = []
    for d in range(1, d_max + 1):
        closed = fs_leading_terms(m, k, d)
        by_split: dict[int, set[ColoredPartition]] = {}
        for term in closed:
            by_split.setdefault(window_split(term, d), set()).add(term)
        for b in range(0, k + 2):
            n = -d * (k + 1) - b
            brute = set()
            for ms in multisets:
                term = brute_leading_term(ms, n, k, m)
                degs = {f.degree for f in term.factors}
                if not degs <= {-d - 1, -d}:
                    mismatches.append(
                        {
                            "window": d,
                            "split": b,
                            "multiset": list(ms),
                            "error": "not window-concentrated",
                            "term": str(term),
                        }
                    )
                    continue
                brute.add(term)
            expected = by_split.get(b, set())
            if brute != expected:
                mismatches.append(
                    {
                        "window": d,
                        "split": b,
                        "missing": sorted(str(t) for t in expected - brute),
                        "unexpected": sorted(str(t) for t in brute - expected),
                    }
                )
    return AuditReport(rank=m, level=k, windows=d_max, mismatches=tuple(mismatches))
