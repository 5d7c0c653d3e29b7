"""Admissible partitions, basis enumeration, graded series and counting demos.

Two kinds of monomial bases are handled:

* ``fs``: partitions over the upper triangle B1 of rank m (the subspace
  attached to the minuscule coweight);
* ``std``: partitions over the full scheme B of rank l (whole standard
  module).

A strictly-negative-degree partition is admissible when no leading term
of the relations divides it.  For the ``fs`` kind the same condition can
be phrased without leading terms: for every window d and every diagonal
path, the multiplicities of the path's upper-block colors at degree -d-1
plus those of its lower-block colors at degree -d must not exceed the
level.  The two checkers are implemented independently and are compared
exhaustively in the test suite.

Enumeration is a depth-first walk over canonical factor multisets with
incremental pruning: once a prefix is inadmissible every extension is
inadmissible (leading-term ideals are upward closed, path sums only
grow), so the subtree is skipped.  Pruning affects speed only, never the
result.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ident import transport_partition
from .leading import diagonal_paths, fs_leading_terms, std_leading_terms
from .partitions import (
    Alphabet,
    Color,
    ColoredPartition,
    Factor,
    full_scheme,
    upper_scheme,
)


@dataclass(frozen=True)
class BasisKind:
    """Which monomial basis: subspace (`fs`) or standard module (`std`), rank and level."""

    kind: str
    rank: int
    level: int

    def __post_init__(self) -> None:
        if self.kind not in ("fs", "std"):
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if self.rank < 1 or self.level < 1:
            raise ValueError("rank and level must be positive")

    @property
    def alphabet(self) -> Alphabet:
        return upper_scheme(self.rank) if self.kind == "fs" else full_scheme(self.rank)


def leading_terms(basis: BasisKind, d: int) -> frozenset[ColoredPartition]:
    """Leading terms of the relations for `basis` on window d."""
    if basis.kind == "fs":
        return fs_leading_terms(basis.rank, basis.level, d)
    return std_leading_terms(basis.rank, basis.level, d)


def _check_partition(pi: ColoredPartition, basis: BasisKind) -> None:
    if pi.alphabet != basis.alphabet:
        raise ValueError(f"expected a partition over {basis.alphabet}, got {pi.alphabet}")
    if any(f.degree >= 0 for f in pi.factors):
        raise ValueError("admissibility is defined for strictly negative degrees")


def _window_bound(pi: ColoredPartition) -> int:
    """Largest window whose leading terms can divide `pi`.

    A window-d term needs factors at degree -d-1 unless it is supported on
    -d alone, and the single-degree terms of window d coincide with the
    upper-block-only terms of window d-1; so windows 1..|min degree|-1
    suffice, except that window 1 itself must always be checked (it is the
    only home of the terms supported entirely on degree -1).
    """
    if not pi.factors:
        return 0
    return max(1, -min(f.degree for f in pi.factors) - 1)


def admissible_by_divisibility(pi: ColoredPartition, basis: BasisKind) -> bool:
    """True when no leading term of any relevant window divides `pi`."""
    _check_partition(pi, basis)
    if not pi.factors:
        return True
    counts = pi.factor_counts()
    for d in range(1, _window_bound(pi) + 1):
        for term in leading_terms(basis, d):
            if all(counts[f] >= e for f, e in term.factor_counts().items()):
                return False
    return True


@lru_cache(maxsize=None)
def _all_paths(m: int) -> tuple:
    """Every diagonal path of rank m, reduced to (upper colors, lower colors) sets."""
    seen = set()
    for path in diagonal_paths(m, 2 * m):
        seen.add((frozenset(path.upper_block), frozenset(path.lower_block)))
    return tuple(sorted(seen, key=lambda ul: (sorted(ul[0]), sorted(ul[1]))))


@lru_cache(maxsize=None)
def _maximal_paths(m: int) -> tuple:
    """Paths not contained block-wise in another path; sums over these dominate."""
    paths = _all_paths(m)
    maximal = []
    for u, low in paths:
        if any(
            (u, low) != (u2, l2) and u <= u2 and low <= l2 for u2, l2 in paths
        ):
            continue
        maximal.append((u, low))
    return tuple(maximal)


def admissible_by_inequalities(pi: ColoredPartition, basis: BasisKind) -> bool:
    """Difference conditions as path-sum inequalities (``fs`` kind only).

    For every window d >= 1 and every diagonal path, the sum of the
    multiplicities of the upper-block colors at degree -d-1 and of the
    lower-block colors at degree -d must be at most the level.
    """
    if basis.kind != "fs":
        raise ValueError(
            "path inequalities apply to the fs kind; transport std partitions first"
        )
    _check_partition(pi, basis)
    if not pi.factors:
        return True
    k = basis.level
    mult: dict[tuple[int, int, int], int] = {}
    for f in pi.factors:
        key = (f.color.a, f.color.b, -f.degree)
        mult[key] = mult.get(key, 0) + 1
    d_max = -min(f.degree for f in pi.factors)
    for d in range(1, d_max + 1):
        for upper, lower in _all_paths(basis.rank):
            total = sum(mult.get((a, b, d + 1), 0) for a, b in upper)
            total += sum(mult.get((a, b, d), 0) for a, b in lower)
            if total > k:
                return False
    return True


class _DivisibilityTracker:
    """Incremental 'is some leading term contained in the current multiset' state."""

    def __init__(self, basis: BasisKind, max_degree: int):
        self.level = basis.level
        windows = range(1, max(1, max_degree - 1) + 1) if max_degree >= 1 else ()
        requirement_lists: list[tuple[tuple[tuple[int, int, int], int], ...]] = []
        index: dict[tuple[int, int, int], list[int]] = {}
        seen: set = set()
        for d in windows:
            for term in leading_terms(basis, d):
                reqs = tuple(
                    ((f.color.a, f.color.b, -f.degree), e)
                    for f, e in sorted(
                        term.factor_counts().items(), key=lambda fe: fe[0].sort_key
                    )
                )
                if reqs in seen:
                    continue
                seen.add(reqs)
                tid = len(requirement_lists)
                requirement_lists.append(reqs)
                for key, _ in reqs:
                    index.setdefault(key, []).append(tid)
        self.requirements = requirement_lists
        self.index = {key: tuple(ids) for key, ids in index.items()}
        self.counts: dict[tuple[int, int, int], int] = {}

    def push(self, a: int, b: int, v: int) -> bool:
        key = (a, b, v)
        counts = self.counts
        counts[key] = counts.get(key, 0) + 1
        reqs = self.requirements
        for tid in self.index.get(key, ()):
            for rkey, needed in reqs[tid]:
                if counts.get(rkey, 0) < needed:
                    break
            else:
                return False
        return True

    def pop(self, a: int, b: int, v: int) -> None:
        self.counts[(a, b, v)] -= 1


class _PathSumTracker:
    """Incremental maxima of path sums over all windows (``fs`` kind).

    Tracks, for every window and every maximal diagonal path, the running
    sum of matching multiplicities; a state is admissible while no sum
    exceeds the level.
    """

    def __init__(self, basis: BasisKind, max_degree: int):
        if basis.kind != "fs":
            raise ValueError("path sums are defined for the fs kind")
        self.level = basis.level
        self.max_degree = max_degree
        paths = _maximal_paths(basis.rank)
        upper_hits: dict[tuple[int, int], list[int]] = {}
        lower_hits: dict[tuple[int, int], list[int]] = {}
        for pid, (upper, lower) in enumerate(paths):
            for pair in upper:
                upper_hits.setdefault(pair, []).append(pid)
            for pair in lower:
                lower_hits.setdefault(pair, []).append(pid)
        self.upper_hits = {c: tuple(ids) for c, ids in upper_hits.items()}
        self.lower_hits = {c: tuple(ids) for c, ids in lower_hits.items()}
        npaths = len(paths)
        # sums[d][pid]: window-d sum for path pid; index 0 unused
        self.sums = [[0] * npaths for _ in range(max_degree + 1)]
        self.violations = 0

    def push(self, a: int, b: int, v: int) -> bool:
        limit = self.level + 1
        sums = self.sums
        row = sums[v]
        for pid in self.lower_hits.get((a, b), ()):
            row[pid] += 1
            if row[pid] == limit:
                self.violations += 1
        if v >= 2:
            row = sums[v - 1]
            for pid in self.upper_hits.get((a, b), ()):
                row[pid] += 1
                if row[pid] == limit:
                    self.violations += 1
        return self.violations == 0

    def pop(self, a: int, b: int, v: int) -> None:
        limit = self.level + 1
        sums = self.sums
        row = sums[v]
        for pid in self.lower_hits.get((a, b), ()):
            if row[pid] == limit:
                self.violations -= 1
            row[pid] -= 1
        if v >= 2:
            row = sums[v - 1]
            for pid in self.upper_hits.get((a, b), ()):
                if row[pid] == limit:
                    self.violations -= 1
                row[pid] -= 1


def _enumerate_layers(basis: BasisKind, max_degree: int, tracker):
    alphabet = basis.alphabet
    colors = [(c.a, c.b) for c in alphabet.colors()]
    entries = [
        (v, a, b) for v in range(1, max_degree + 1) for (a, b) in colors
    ]
    # interned factor objects: the universe is small, partitions only hold refs
    factor_cache = {
        (v, a, b): Factor(Color(alphabet, a, b), -v) for v, a, b in entries
    }
    layers: list[list[ColoredPartition]] = [[] for _ in range(max_degree + 1)]
    layers[0].append(ColoredPartition(alphabet, ()))
    stack: list[tuple[int, int, int]] = []

    def build() -> ColoredPartition:
        return ColoredPartition(
            alphabet, tuple(factor_cache[key] for key in stack)
        )

    def rec(start: int, used: int) -> None:
        for idx in range(start, len(entries)):
            v, a, b = entries[idx]
            if used + v > max_degree:
                break  # entries are sorted by |degree|
            ok = tracker.push(a, b, v)
            if ok:
                stack.append((v, a, b))
                layers[used + v].append(build())
                rec(idx, used + v)
                stack.pop()
            tracker.pop(a, b, v)

    rec(0, 0)
    return tuple(
        tuple(sorted(layer, key=lambda p: p.sort_key)) for layer in layers
    )


@lru_cache(maxsize=None)
def _enumerate_cached(basis: BasisKind, max_degree: int, method: str):
    if method == "divisibility":
        tracker = _DivisibilityTracker(basis, max_degree)
    else:
        tracker = _PathSumTracker(basis, max_degree)
    return _enumerate_layers(basis, max_degree, tracker)


def enumerate_basis(
    basis: BasisKind, max_degree: int, method: str | None = None
) -> tuple[tuple[ColoredPartition, ...], ...]:
    """All admissible partitions with total degree down to -max_degree.

    Returns one layer per absolute degree 0..max_degree, each sorted in
    the partition order.  `method` selects the admissibility engine:
    ``divisibility`` (either kind) or ``inequalities`` (fs only); the
    default is ``inequalities`` for fs and ``divisibility`` for std.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    if method is None:
        method = "inequalities" if basis.kind == "fs" else "divisibility"
    if method not in ("divisibility", "inequalities"):
        raise ValueError(f"unknown enumeration method {method!r}")
    if method == "inequalities" and basis.kind != "fs":
        raise ValueError("the inequality engine applies to the fs kind only")
    return _enumerate_cached(basis, max_degree, method)


@dataclass(frozen=True)
class QSeries:
    """A truncated power series with exact integer coefficients, graded by degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "QSeries") -> "QSeries":
        n = min(self.truncation, other.truncation)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: n + 1 - i]):
                out[i + j] += a * b
        return QSeries(tuple(out))


def graded_series(basis: BasisKind, max_degree: int) -> QSeries:
    """Coefficient m counts the admissible partitions of degree -m."""
    layers = enumerate_basis(basis, max_degree)
    return QSeries(tuple(len(layer) for layer in layers))


def partition_series(max_degree: int) -> QSeries:
    """The generating series of ordinary partitions, prod 1/(1-q^n)."""
    coeffs = [1] + [0] * max_degree
    for part in range(1, max_degree + 1):
        for m in range(part, max_degree + 1):
            coeffs[m] += coeffs[m - part]
    return QSeries(tuple(coeffs))


def theta_series(max_degree: int) -> QSeries:
    """Sum of q^(m^2) over all integers m, truncated."""
    coeffs = [0] * (max_degree + 1)
    coeffs[0] = 1
    m = 1
    while m * m <= max_degree:
        coeffs[m * m] = 2
        m += 1
    return QSeries(tuple(coeffs))


def character_oracle_a1_level1(max_degree: int) -> QSeries:
    """Graded dimension of the level-1 vacuum module of the rank-1 algebra.

    Computed independently of any enumeration, as the series product
    (sum over the root lattice of q^(m^2)) / (q; q)_infinity.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    return theta_series(max_degree) * partition_series(max_degree)


def rr_counts(max_m: int) -> list[tuple[int, int, int]]:
    """Partition counts behind the first Rogers-Ramanujan identity.

    For each m, the number of partitions of m with all parts congruent to
    1 or 4 mod 5, and the number whose part frequencies satisfy
    f_j + f_{j+1} <= 1 (equivalently, gaps of at least two).
    """
    if max_m < 1:
        raise ValueError("max_m must be positive")
    cong = [1] + [0] * max_m
    for part in range(1, max_m + 1):
        if part % 5 in (1, 4):
            for m in range(part, max_m + 1):
                cong[m] += cong[m - part]

    @lru_cache(maxsize=None)
    def gap2(m: int, smallest: int) -> int:
        if m == 0:
            return 1
        if smallest > m:
            return 0
        return gap2(m, smallest + 1) + gap2(m - smallest, smallest + 2)

    return [(m, cong[m], gap2(m, 1)) for m in range(1, max_m + 1)]
