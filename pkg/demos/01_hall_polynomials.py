"""Compute a Hall polynomial and look inside the sum.

The polynomial g^beta_{alpha,gamma}(q) counts, at q = p, the subgroups of
type alpha inside a finite abelian p-group of type beta with quotient of
type gamma.  It is assembled as a sum over Klein tableaux; each summand
is a telescoping product of automorphism-group-order ratios.
"""

from hallkit import (
    dominant_refinement,
    enumerate_lr,
    expected_degree,
    hall_multiplicity,
    hall_polynomial,
    lr_multiplicity,
)
from hallkit.tableaux import ascii_diagram

alpha, beta, gamma = (3, 2, 1), (4, 3, 2), (2, 1)

breakdown = hall_polynomial(alpha, beta, gamma)
print(f"g^{beta}_{alpha},{gamma}(q) = {breakdown.total}")
print(f"expected degree: {expected_degree(alpha, beta, gamma)}")
print()

print("One summand per Klein tableau:")
for tab, poly in breakdown.per_tableau:
    print(f"\n  multiplicity {poly}")
    print("  " + ascii_diagram(tab).replace("\n", "\n  "))

print("\nGrouped by the underlying LR tableau:")
for lr in enumerate_lr(alpha, beta, gamma):
    total = lr_multiplicity(lr)
    dom = dominant_refinement(lr)
    print(f"  chain {'/'.join(','.join(map(str, g)) for g in lr.gammas)}")
    print(f"    sum of refinements: {total}")
    print(f"    dominant refinement contributes {hall_multiplicity(dom)}")
