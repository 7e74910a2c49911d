"""Concrete embeddings and the lifting/reducing/approximation functors.

An embedding is a subgroup A of an explicit module B = (+) Z/p^{beta_i}.
Its Klein tableau is computed from quotient-type chains, and the functors
act on tableaux by restriction: reducing drops the bottom strips,
approximating drops the top ones.
"""

from hallkit import embeddings as emb
from hallkit.tableaux import ascii_diagram, restrict

# the diagonal embedding of Z/p^2 into Z/p^4 + Z/p^2, plus a picket
E = emb.direct_sum(
    emb.bipicket_embedding(2, 4, 2), emb.picket_embedding(2, 1, 3)
)
tab = emb.klein_tableau(E)
print(f"E = {E}")
print(f"subgroup type {emb.module_type(E.ambient, E.subgroup)}, "
      f"quotient type {emb.quotient_type(E.ambient, E.subgroup)}")
print(ascii_diagram(tab))

print("\nreducing (A -> pA) chops strips off the bottom of the chain:")
for s in range(E.exponent + 1):
    reduced = emb.klein_tableau(emb.reduce(E, s))
    assert reduced == restrict(tab, tab.e, tab.e - s)
    print(f"  s={s}: {reduced.to_text()}")

print("\napproximating (E|^ell) chops strips off the top:")
for ell in range(E.exponent + 1):
    cut = emb.klein_tableau(emb.truncate(E, ell))
    assert cut == restrict(tab, ell, ell)
    print(f"  ell={ell}: {cut.to_text()}")

print("\nlifting a picket raises the subgroup one socle layer at a time:")
P = emb.picket_embedding(2, 2, 5)
for s in range(4):
    up = emb.lift(P, s)
    print(f"  s={s}: subgroup type {emb.module_type(up.ambient, up.subgroup)}")

# lifting a bipicket past its depth splits off a full column
T = emb.bipicket_embedding(2, 5, 2)
print(f"\nT(5,2) lifted 3 times decomposes: "
      f"{emb.klein_tableau(emb.lift(T, 3)).to_text()}")
