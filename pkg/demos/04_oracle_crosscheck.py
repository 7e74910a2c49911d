"""Cross-check the symbolic layer against brute-force subgroup counting.

Everything the package computes symbolically can be counted directly in a
small concrete group: enumerate every subgroup of M(beta), classify by
type pair and by Klein tableau, and compare with the polynomials
evaluated at q = p.
"""

from hallkit import enumerate_klein, evaluate, hall_multiplicity, hall_polynomial
from hallkit import oracle

p, beta = 2, (3, 2, 1)

census = oracle.hall_census(p, beta)
total = sum(census.values())
print(f"M{beta} at p={p} has {total} subgroups; by (subgroup, quotient) type:")
for (alpha, gamma), count in sorted(census.items()):
    poly = hall_polynomial(alpha, beta, gamma).total
    flag = "ok" if evaluate(poly, p) == count else "MISMATCH"
    print(f"  {str(alpha):12} {str(gamma):12} {count:4}  =  {str(poly):24} at q={p}  [{flag}]")

print("\nrefined by Klein tableau for one type pair:")
alpha, gamma = (2, 1), (2, 1)
by_tab = oracle.hall_count_by_tableau(p, beta)
for tab in enumerate_klein(alpha, beta, gamma):
    poly = hall_multiplicity(tab)
    count = by_tab.get(tab, 0)
    flag = "ok" if evaluate(poly, p) == count else "MISMATCH"
    print(f"  {tab.to_text():44} {count:3}  =  {str(poly):12} at q={p}  [{flag}]")

print("\nthe orbit formula holds for a concrete embedding:")
from hallkit import embeddings as emb

E = emb.bipicket_embedding(p, 4, 2)
print(f"  T(4,2): {oracle.orbit_check(E)}")
