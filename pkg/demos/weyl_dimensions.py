"""The dimension identity behind the rank-doubling coincidence.

Restricting the degree-2m symmetric power of the defining representation
of the rank-(2l-1) special linear algebra to the symplectic subalgebra
stays irreducible, so its dimension can be computed three ways: the Weyl
dimension formula on either side, or a bare multiset count.
"""

from math import comb

from cpbasis import (
    RootSystemSpec,
    minuscule_gamma,
    positive_roots,
    verify_branching,
    weyl_dim,
)
from cpbasis.rootdata import fundamental_weight_one, highest_root

print("symplectic side / special-linear side / binomial(2l+2m-1, 2m)")
print("  l  m        C-dim        A-dim     binomial  agree")
for ell in range(1, 5):
    for m in range(1, 5):
        c_spec = RootSystemSpec("C", ell)
        a_spec = RootSystemSpec("A", 2 * ell - 1)
        c_dim = weyl_dim(c_spec, m * highest_root(c_spec))
        a_dim = weyl_dim(a_spec, (2 * m) * fundamental_weight_one(a_spec))
        binom = comb(2 * ell + 2 * m - 1, 2 * m)
        print(
            f"{ell:3d} {m:2d} {c_dim:12d} {a_dim:12d} {binom:12d}"
            f"  {verify_branching(ell, m)}"
        )
print()

spec = RootSystemSpec("C", 3)
print(f"supporting data for {spec}:")
print(f"   positive roots: {len(positive_roots(spec))} (= rank squared)")
md = minuscule_gamma(spec)
print(f"   minuscule coweight: {md.omega}")
print(f"   degree-one roots: {len(md.gamma)} (= triangle size)")
print(f"   adjoint dimension: {weyl_dim(spec, highest_root(spec))}")
