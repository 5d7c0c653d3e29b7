"""Why the rank-2l subspace combinatorics equals the rank-l module combinatorics.

The upper triangle of the rank-2l scheme and the full triangular scheme of
rank l are identified index by index (barred indices encode the second
half).  The identification preserves the color order, carries leading
terms onto leading terms, and therefore matches the two admissible sets
degree by degree.  Here we walk through the smallest case l = 1 and print
the identification table for l = 3.
"""

from cpbasis import (
    BasisKind,
    enumerate_basis,
    full_scheme,
    iota,
    transport_partition,
    upper_scheme,
)

print("identification table for l = 3 (upper triangle of rank 6 -> scheme of rank 3):")
for j in range(1, 7):
    row = []
    for i in range(1, j + 1):
        source = f"{i}{j}"
        row.append(f"{source}->{iota((i, j), 3)}")
    print("   " + "  ".join(row))
print()

ELL, LEVEL, N = 1, 1, 6
fs_kind = BasisKind("fs", 2 * ELL, LEVEL)
std_kind = BasisKind("std", ELL, LEVEL)
fs_layers = enumerate_basis(fs_kind, N)
std_layers = enumerate_basis(std_kind, N)

print(f"admissible partitions, subspace of rank {2 * ELL} vs module of rank {ELL}:")
print("degree  count  transported = module side?")
for m in range(N + 1):
    transported = {transport_partition(p, ELL) for p in fs_layers[m]}
    ok = transported == set(std_layers[m])
    print(f"  -{m}     {len(fs_layers[m]):3d}    {ok}")
print()

print("the degree -3 layer, side by side:")
for p in fs_layers[3]:
    print(f"   {str(p):24s} ->   {transport_partition(p, ELL)}")
print()
print("series:", tuple(len(layer) for layer in std_layers))
print("(for l = 1 this is the graded dimension of the level-1 vacuum module)")
