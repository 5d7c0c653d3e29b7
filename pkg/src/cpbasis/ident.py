"""Identification of the upper triangle of rank 2l with the full rank-l scheme.

The upper triangle B1 of the rank-2l scheme consists of pairs (i, j) with
1 <= i <= j <= 2l; the full scheme B of rank l consists of pairs over the
index set 1, ..., l, l', ..., 1', whose internal encoding is exactly
1..2l.  The identification iota sends (i, j) to X_ab with a the index i
(barred when i > l) and b the index j (barred when j > l) -- on internal
encodings it is the identity, so it is automatically a bijection and
preserves the column-major color order.  Transporting a partition maps
its colors through iota and leaves degrees untouched.
"""

from __future__ import annotations

from .partitions import Color, ColoredPartition, Factor, full_scheme, upper_scheme


def iota(pair: tuple[int, int], ell: int) -> Color:
    """Map an upper-triangle pair of the rank-2*ell scheme into the full rank-ell scheme."""
    i, j = pair
    if not 1 <= i <= j <= 2 * ell:
        raise ValueError(f"pair {pair} is not in the upper triangle of rank {2 * ell}")
    return Color(full_scheme(ell), i, j)


def iota_inverse(color: Color, ell: int) -> tuple[int, int]:
    """Unique preimage of a full-scheme color; inverse of :func:`iota`."""
    if color.alphabet != full_scheme(ell):
        raise ValueError(f"{color} does not belong to {full_scheme(ell)}")
    return (color.a, color.b)


def transport_partition(p: ColoredPartition, ell: int) -> ColoredPartition:
    """Color-wise iota image of a partition over the rank-2*ell upper triangle."""
    source = upper_scheme(2 * ell)
    if p.alphabet != source:
        raise ValueError(f"expected a partition over {source}, got {p.alphabet}")
    target = full_scheme(ell)
    return ColoredPartition(
        target,
        tuple(Factor(Color(target, f.color.a, f.color.b), f.degree) for f in p.factors),
    )


def transport_partition_inverse(p: ColoredPartition, ell: int) -> ColoredPartition:
    """Pull a full-scheme rank-ell partition back to the rank-2*ell upper triangle."""
    source = full_scheme(ell)
    if p.alphabet != source:
        raise ValueError(f"expected a partition over {source}, got {p.alphabet}")
    target = upper_scheme(2 * ell)
    return ColoredPartition(
        target,
        tuple(Factor(Color(target, f.color.a, f.color.b), f.degree) for f in p.factors),
    )
