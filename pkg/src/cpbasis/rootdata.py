"""Classical root systems in epsilon coordinates, with exact Weyl dimensions.

Conventions follow Bourbaki.  Families B, C, D of rank l live in an
l-dimensional coordinate space; family A of rank r uses the standard
hyperplane realization inside r+1 coordinates, so weights of A_r carry
r+1 coordinates (the dimension formula only sees coordinate differences,
hence is independent of the representative modulo (1,...,1)).

The invariant form is the Euclidean coordinate form rescaled so that the
highest root theta satisfies <theta, theta> = 2; only family C needs a
rescaling (by 1/2).  All arithmetic is exact (integers and Fractions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

FAMILIES = ("A", "B", "C", "D")

_MIN_RANK = {"A": 1, "B": 2, "C": 1, "D": 3}


@dataclass(frozen=True)
class RootSystemSpec:
    """A classical family letter plus a rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < _MIN_RANK[self.family]:
            raise ValueError(
                f"rank {self.rank} too small for family {self.family} "
                f"(minimum {_MIN_RANK[self.family]})"
            )

    @property
    def ambient_dim(self) -> int:
        """Number of epsilon coordinates: rank+1 for family A, rank otherwise."""
        return self.rank + 1 if self.family == "A" else self.rank

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """A vector in the epsilon-coordinate basis, with exact rational entries."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __add__(self, other: "Weight") -> "Weight":
        if len(self.coords) != len(other.coords):
            raise ValueError("coordinate length mismatch")
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, scalar) -> "Weight":
        return Weight(tuple(Fraction(scalar) * c for c in self.coords))

    def dot(self, other: "Weight") -> Fraction:
        """Plain coordinate dot product (the coweight pairing)."""
        if len(self.coords) != len(other.coords):
            raise ValueError("coordinate length mismatch")
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class MinusculeData:
    """A minuscule coweight together with the set of roots it pairs to 1."""

    omega: Weight
    gamma: tuple[Weight, ...]


def eps(i: int, dim: int) -> Weight:
    """The i-th coordinate vector (1-based) in `dim` coordinates."""
    if not 1 <= i <= dim:
        raise ValueError("coordinate index out of range")
    return Weight(tuple(Fraction(1 if j == i else 0) for j in range(1, dim + 1)))


def zero_weight(spec: RootSystemSpec) -> Weight:
    return Weight((Fraction(0),) * spec.ambient_dim)


def weight(spec: RootSystemSpec, coords) -> Weight:
    """A Weight for `spec`, checking the coordinate count."""
    coords = tuple(Fraction(c) for c in coords)
    if len(coords) != spec.ambient_dim:
        raise ValueError(
            f"{spec} weights need {spec.ambient_dim} coordinates, got {len(coords)}"
        )
    return Weight(coords)


def positive_roots(spec: RootSystemSpec) -> list[Weight]:
    """The standard positive system of `spec`, in a fixed deterministic order."""
    n = spec.ambient_dim
    roots: list[Weight] = []
    if spec.family == "A":
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append(eps(i, n) + (-1) * eps(j, n))
        return roots
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            roots.append(eps(i, n) + (-1) * eps(j, n))
            roots.append(eps(i, n) + eps(j, n))
    if spec.family == "B":
        roots.extend(eps(i, n) for i in range(1, n + 1))
    elif spec.family == "C":
        roots.extend(2 * eps(i, n) for i in range(1, n + 1))
    return roots


def simple_roots(spec: RootSystemSpec) -> list[Weight]:
    n = spec.ambient_dim
    last = n if spec.family == "A" else spec.rank
    alphas = [eps(i, n) + (-1) * eps(i + 1, n) for i in range(1, last)]
    if spec.family == "B":
        alphas.append(eps(spec.rank, n))
    elif spec.family == "C":
        alphas.append(2 * eps(spec.rank, n))
    elif spec.family == "D":
        alphas.append(eps(spec.rank - 1, n) + eps(spec.rank, n))
    return alphas


def highest_root(spec: RootSystemSpec) -> Weight:
    """The highest root theta."""
    n = spec.ambient_dim
    if spec.family == "A":
        return eps(1, n) + (-1) * eps(n, n)
    if spec.family == "C":
        return 2 * eps(1, n)
    return eps(1, n) + eps(2, n)  # B and D


def fundamental_weight_one(spec: RootSystemSpec) -> Weight:
    """A representative of the first fundamental weight omega_1."""
    return eps(1, spec.ambient_dim)


def inner(spec: RootSystemSpec, x: Weight, y: Weight) -> Fraction:
    """Invariant form normalized so that <theta, theta> = 2."""
    scale = Fraction(1, 2) if spec.family == "C" else Fraction(1)
    return scale * x.dot(y)


def half_sum_positive(spec: RootSystemSpec) -> Weight:
    """rho, computed as the half-sum of the positive roots."""
    acc = zero_weight(spec)
    for alpha in positive_roots(spec):
        acc = acc + alpha
    return Fraction(1, 2) * acc


def coroot_pairing(spec: RootSystemSpec, lam: Weight, alpha: Weight) -> Fraction:
    """2<lam, alpha> / <alpha, alpha>; the normalization scale cancels."""
    return 2 * lam.dot(alpha) / alpha.dot(alpha)


def is_dominant_integral(spec: RootSystemSpec, lam: Weight) -> bool:
    """Whether all simple coroot pairings are nonnegative integers."""
    if len(lam.coords) != spec.ambient_dim:
        raise ValueError(
            f"{spec} weights need {spec.ambient_dim} coordinates, got {len(lam.coords)}"
        )
    for alpha in simple_roots(spec):
        pairing = coroot_pairing(spec, lam, alpha)
        if pairing.denominator != 1 or pairing < 0:
            return False
    return True


def weyl_dim(spec: RootSystemSpec, lam: Weight) -> int:
    """Dimension of the irreducible module of highest weight `lam`.

    The product formula prod <lam+rho, alpha> / <rho, alpha> over positive
    roots, evaluated in exact rational arithmetic.
    """
    if not is_dominant_integral(spec, lam):
        raise ValueError(f"{lam} is not dominant integral for {spec}")
    rho = half_sum_positive(spec)
    shifted = lam + rho
    dim = Fraction(1)
    for alpha in positive_roots(spec):
        num = inner(spec, shifted, alpha)
        den = inner(spec, rho, alpha)
        assert num > 0, "shifted pairing must stay positive for a dominant weight"
        dim *= num / den
    assert dim.denominator == 1 and dim > 0
    return int(dim)


def verify_branching(ell: int, m: int) -> bool:
    """Dimension identity behind the rank-doubling coincidence.

    Restricting the degree-2m symmetric power of the 2l-dimensional vector
    representation to the symplectic subalgebra leaves an irreducible
    module, so three numbers agree: the symplectic dimension at highest
    weight m*theta, the special-linear dimension at 2m*omega_1, and the
    multiset count binomial(2l+2m-1, 2m).
    """
    if ell < 1 or m < 1:
        raise ValueError("ell and m must be positive")
    c_spec = RootSystemSpec("C", ell)
    c_dim = weyl_dim(c_spec, m * highest_root(c_spec))
    a_spec = RootSystemSpec("A", 2 * ell - 1)
    a_dim = weyl_dim(a_spec, (2 * m) * fundamental_weight_one(a_spec))
    return c_dim == a_dim == comb(2 * ell + 2 * m - 1, 2 * m)


def minuscule_gamma(spec: RootSystemSpec) -> MinusculeData:
    """The minuscule coweight of a symplectic system and its degree-one root set.

    omega is half the sum of coordinates; the roots pairing to 1 under the
    plain coordinate pairing are eps_i + eps_j over all 1 <= i <= j <= l,
    matching the upper-triangle color scheme B1.
    """
    if spec.family != "C":
        raise ValueError(f"minuscule data implemented for family C only, got {spec}")
    n = spec.rank
    omega = Weight((Fraction(1, 2),) * n)
    gamma = tuple(
        eps(i, n) + eps(j, n) for i in range(1, n + 1) for j in range(i, n + 1)
    )
    for g in gamma:
        assert omega.dot(g) == 1
    return MinusculeData(omega=omega, gamma=gamma)
