"""Colored partitions over triangular basis schemes of the symplectic Lie algebras.

The rank-l symplectic Lie algebra has a basis X_ab indexed by pairs of
indices drawn from ``1, 2, ..., l, l', ..., 2', 1'`` (primes denote the
"barred" indices, rendered with an underscore prefix in text output).
Internally an index is an integer ``p`` in ``1..2l``, with ``p > l``
standing for the barred index ``(2l+1-p)'``.  The full triangular scheme
``B`` consists of all pairs ``a <= b <= 2l``; the upper triangle ``B1``
(the pairs with ``b <= l``) spans the abelian radical of the parabolic
attached to the last fundamental coweight.

Orders, from smallest building block to partitions:

* indices:      ``1 > 2 > ... > 2l``    (smaller integer = bigger index);
* colors:       ``X_ab > X_a'b'`` iff ``a > a'``, or ``a = a'`` and
                ``b > b'`` (column-major, so ``X_11`` is the maximum);
* factors:      ``x(n) < y(m)`` iff ``n < m``, or ``n = m`` and ``x < y``;
* partitions:   shorter is higher, then greater degree is higher, then
                plain degree sequences compare in reverse lexicographic
                order starting from the largest part (smaller largest part
                means smaller partition), and finally the color sequences
                compare the same way.

A colored partition is a finite multiset of factors kept in canonical
ascending factor order.  Partitions over a fixed scheme form a monoid
under multiset union, with the empty partition as unit.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


@dataclass(frozen=True, slots=True)
class Alphabet:
    """A triangular color scheme: the full scheme ``B`` or the upper triangle ``B1``."""

    scheme: str  # "B" or "B1"
    rank: int

    def __post_init__(self) -> None:
        if self.scheme not in ("B", "B1"):
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.rank < 1:
            raise ValueError("rank must be a positive integer")

    @property
    def index_bound(self) -> int:
        """Largest internal index: ``2l`` for the full scheme, ``l`` for the upper triangle."""
        return 2 * self.rank if self.scheme == "B" else self.rank

    def display_index(self, p: int) -> str:
        """Render an internal index, with barred indices as ``_j``."""
        if not 1 <= p <= self.index_bound:
            raise ValueError(f"index {p} out of range for {self}")
        if p <= self.rank:
            return str(p)
        return "_" + str(2 * self.rank + 1 - p)

    def colors(self) -> tuple["Color", ...]:
        """All colors of the scheme in descending order (column-major, ``X_11`` first)."""
        n = self.index_bound
        return tuple(
            Color(self, a, b) for a in range(1, n + 1) for b in range(a, n + 1)
        )

    def __str__(self) -> str:
        return f"{self.scheme}(C{self.rank})"


def full_scheme(rank: int) -> Alphabet:
    """The triangular scheme B of the rank-`rank` symplectic algebra (indices ``1..2*rank``)."""
    return Alphabet("B", rank)


def upper_scheme(rank: int) -> Alphabet:
    """The upper triangle B1 of the rank-`rank` scheme (indices ``1..rank``)."""
    return Alphabet("B1", rank)


@dataclass(frozen=True, slots=True)
class Color:
    """A basis symbol X_ab; `a` is the column index, `b` the row index, ``a <= b``."""

    alphabet: Alphabet
    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a <= self.b <= self.alphabet.index_bound:
            raise ValueError(
                f"({self.a},{self.b}) is not a valid color of {self.alphabet}"
            )

    @property
    def sort_key(self) -> tuple[int, int]:
        # Ascending key: bigger column index (smaller a) means bigger color.
        return (-self.a, -self.b)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __str__(self) -> str:
        return self.alphabet.display_index(self.a) + self.alphabet.display_index(self.b)

    def __lt__(self, other: "Color") -> bool:
        return compare_colors(self, other) < 0

    def __le__(self, other: "Color") -> bool:
        return compare_colors(self, other) <= 0

    def __gt__(self, other: "Color") -> bool:
        return compare_colors(self, other) > 0

    def __ge__(self, other: "Color") -> bool:
        return compare_colors(self, other) >= 0


@dataclass(frozen=True, slots=True)
class Factor:
    """A degree-graded basis symbol x(n), i.e. a color placed in degree n."""

    color: Color
    degree: int

    @property
    def sort_key(self) -> tuple[int, tuple[int, int]]:
        return (self.degree, self.color.sort_key)

    def __str__(self) -> str:
        return f"{self.color}({self.degree})"

    def __lt__(self, other: "Factor") -> bool:
        return compare_factors(self, other) < 0

    def __le__(self, other: "Factor") -> bool:
        return compare_factors(self, other) <= 0

    def __gt__(self, other: "Factor") -> bool:
        return compare_factors(self, other) > 0

    def __ge__(self, other: "Factor") -> bool:
        return compare_factors(self, other) >= 0


def _cmp(x, y) -> int:
    return (x > y) - (x < y)


def compare_colors(x: Color, y: Color) -> int:
    """Column-major lexicographic comparison; returns -1, 0 or +1."""
    if x.alphabet != y.alphabet:
        raise ValueError(f"color scheme mismatch: {x.alphabet} vs {y.alphabet}")
    return _cmp(x.sort_key, y.sort_key)


def compare_factors(f: Factor, g: Factor) -> int:
    """Degree-major, color-minor comparison; returns -1, 0 or +1."""
    if f.color.alphabet != g.color.alphabet:
        raise ValueError(
            f"color scheme mismatch: {f.color.alphabet} vs {g.color.alphabet}"
        )
    return _cmp(f.sort_key, g.sort_key)


@dataclass(frozen=True, slots=True)
class ColoredPartition:
    """A multiset of factors over one scheme, stored in canonical ascending order."""

    alphabet: Alphabet
    factors: tuple[Factor, ...] = field(default=())

    def __post_init__(self) -> None:
        for f in self.factors:
            if f.color.alphabet != self.alphabet:
                raise ValueError(
                    f"factor {f} does not belong to scheme {self.alphabet}"
                )
        object.__setattr__(
            self, "factors", tuple(sorted(self.factors, key=lambda f: f.sort_key))
        )

    @classmethod
    def from_pairs(cls, alphabet: Alphabet, *facs: tuple[tuple[int, int], int]):
        """Build a partition from ``((a, b), degree)`` entries."""
        return cls(
            alphabet,
            tuple(Factor(Color(alphabet, a, b), n) for (a, b), n in facs),
        )

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    @property
    def sort_key(self):
        """Ascending key for the well order on partitions.

        Components: longer partitions are lower; smaller degree is lower;
        then the reversed degree tuple and reversed color-key tuple give the
        two reverse-lexicographic stages (comparison starts at the largest
        part, and a smaller entry there means a smaller partition).
        """
        degrees = tuple(f.degree for f in self.factors)
        colors = tuple(f.color.sort_key for f in self.factors)
        return (-len(self.factors), self.degree, degrees[::-1], colors[::-1])

    def multiply(self, other: "ColoredPartition") -> "ColoredPartition":
        if self.alphabet != other.alphabet:
            raise ValueError("cannot multiply partitions over different schemes")
        return ColoredPartition(self.alphabet, self.factors + other.factors)

    __mul__ = multiply

    def divides(self, other: "ColoredPartition") -> bool:
        return divides(self, other)

    def factor_counts(self) -> Counter:
        return Counter(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for f, e in sorted(
            Counter(self.factors).items(), key=lambda fe: fe[0].sort_key
        ):
            parts.append(str(f) if e == 1 else f"{f}^{e}")
        return " ".join(parts)

    def __lt__(self, other: "ColoredPartition") -> bool:
        return compare_partitions(self, other) < 0

    def __le__(self, other: "ColoredPartition") -> bool:
        return compare_partitions(self, other) <= 0

    def __gt__(self, other: "ColoredPartition") -> bool:
        return compare_partitions(self, other) > 0

    def __ge__(self, other: "ColoredPartition") -> bool:
        return compare_partitions(self, other) >= 0


def unit(alphabet: Alphabet) -> ColoredPartition:
    """The empty partition, the unit of the partition monoid."""
    return ColoredPartition(alphabet, ())


def compare_partitions(p: ColoredPartition, q: ColoredPartition) -> int:
    """The well order on colored partitions; returns -1, 0 or +1.

    Stages: length (shorter is higher), degree (greater is higher), plain
    degree sequences in reverse lexicographic order, color sequences in
    reverse lexicographic order.
    """
    if p.alphabet != q.alphabet:
        raise ValueError(f"scheme mismatch: {p.alphabet} vs {q.alphabet}")
    return _cmp(p.sort_key, q.sort_key)


def divides(rho: ColoredPartition, pi: ColoredPartition) -> bool:
    """Multiset containment of factors: rho divides pi in the partition monoid."""
    if rho.alphabet != pi.alphabet:
        raise ValueError(f"scheme mismatch: {rho.alphabet} vs {pi.alphabet}")
    if rho.length > pi.length:
        return False
    counts = Counter(pi.factors)
    counts.subtract(rho.factors)
    return all(c >= 0 for c in counts.values())


def multiply(p: ColoredPartition, q: ColoredPartition) -> ColoredPartition:
    """Multiset union of factors; degree and length are additive."""
    return p.multiply(q)
