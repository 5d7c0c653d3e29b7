"""A tour of the leading-term machinery at rank 2.

Every relation coefficient is supported on colored partitions sharing an
index multiset; its minimum under the well order is the leading term.
The closed form says: leading terms live on two consecutive degrees and
their colors trace a diagonal path through the triangular scheme.  The
brute-force oracle recomputes the same minima from raw supports.
"""

from itertools import combinations_with_replacement

from cpbasis import (
    audit_windows,
    brute_leading_term,
    fs_leading_terms,
    relation_support,
    window_split,
)

RANK, LEVEL, WINDOW = 2, 1, 1

print(f"rank {RANK}, level {LEVEL}, window {WINDOW} (degrees -2 and -1)")
print()
terms = sorted(fs_leading_terms(RANK, LEVEL, WINDOW), key=lambda p: p.sort_key)
for split in range(LEVEL + 2):
    group = [t for t in terms if window_split(t, WINDOW) == split]
    print(f"split {split} ({len(group)} terms, {split} factors at degree -2):")
    for t in group:
        print("   ", t)
print()

print("one support in detail: the multiset with two 1s and two 2s at degree -3")
support = relation_support((2, 2), -3, LEVEL, RANK)
for p in sorted(support.partitions, key=lambda q: q.sort_key):
    mark = "  <-- leading term" if p == brute_leading_term((2, 2), -3, LEVEL, RANK) else ""
    print("   ", p, mark)
print()

print("full audit (rank 2, level 2, windows <= 3): brute minima vs closed form")
report = audit_windows(2, 2, 3)
n_multisets = sum(
    1 for _ in combinations_with_replacement(range(1, 3), 2 * (2 + 1))
)
print(f"   multisets audited per (window, split): {n_multisets}")
print(f"   mismatches: {len(report.mismatches)} ({'clean' if report.ok else 'BROKEN'})")
