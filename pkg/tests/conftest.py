"""Shared helpers: brute-force generation and golden transcriptions."""

from __future__ import annotations

from cpbasis.partitions import Alphabet, Color, ColoredPartition, Factor, upper_scheme


def gen_partitions(alphabet: Alphabet, max_total: int):
    """Every strictly-negative-degree partition with |degree| <= max_total.

    Straightforward recursion over canonical factor multisets; used as an
    independent reference against the enumeration engines.
    """
    factors = [
        Factor(Color(alphabet, c.a, c.b), -v)
        for v in range(1, max_total + 1)
        for c in alphabet.colors()
    ]
    out: list[ColoredPartition] = []
    stack: list[Factor] = []

    def rec(start: int, used: int) -> None:
        out.append(ColoredPartition(alphabet, tuple(stack)))
        for idx in range(start, len(factors)):
            f = factors[idx]
            if used - f.degree > max_total:
                continue
            stack.append(f)
            rec(idx, used - f.degree)
            stack.pop()

    rec(0, 0)
    return out


def golden_rank2_families(k: int, d: int) -> frozenset:
    """The four rank-2 leading-term families, transcribed exponent by exponent.

    Vertical and horizontal diagonal paths through the two corners of the
    rank-2 triangle; exponents are nonnegative and sum to k+1.  Families:

        X11(-d-1)^e1 X12(-d)^e2 X11(-d)^e3
        X11(-d-1)^e1 X22(-d)^e2 X12(-d)^e3
        X12(-d-1)^e1 X11(-d-1)^e2 X22(-d)^e3
        X22(-d-1)^e1 X12(-d-1)^e2 X22(-d)^e3
    """
    shapes = (
        (((1, 1), -d - 1), ((1, 2), -d), ((1, 1), -d)),
        (((1, 1), -d - 1), ((2, 2), -d), ((1, 2), -d)),
        (((1, 2), -d - 1), ((1, 1), -d - 1), ((2, 2), -d)),
        (((2, 2), -d - 1), ((1, 2), -d - 1), ((2, 2), -d)),
    )
    terms = set()
    for e1 in range(k + 2):
        for e2 in range(k + 2 - e1):
            e3 = k + 1 - e1 - e2
            for shape in shapes:
                facs = []
                for slot, mult in zip(shape, (e1, e2, e3)):
                    facs.extend([slot] * mult)
                terms.add(ColoredPartition.from_pairs(upper_scheme(2), *facs))
    return frozenset(terms)
