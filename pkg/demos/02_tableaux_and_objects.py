"""Klein tableaux with entries at most 2 classify p^2-bounded embeddings.

Every such tableau decodes uniquely into a direct sum of pickets P(ell, m)
and bipickets T(m, r), and the decoding is inverse to re-assembling the
tableau of that sum row by row.
"""

from hallkit import object_of_tableau, parse_object, tableau_of_object
from hallkit.tableaux import KleinTableau, ascii_diagram, enumerate_klein_entries2

# two sums with the same LR tableau but different Klein tableaux
for text in ("T(4,2) + P(1,3)", "P(2,4) + P(0,3) + P(1,2)"):
    obj = parse_object(text)
    tab = tableau_of_object(obj)
    print(f"{text}:")
    print("  " + ascii_diagram(tab).replace("\n", "\n  "))
    assert object_of_tableau(tab) == obj
    print(f"  decodes back to {object_of_tableau(tab)}")
    print()

# the subscript is what separates them
left = KleinTableau.make([(3, 2, 1), (3, 3, 2), (4, 3, 2)], {(2, 4): [2]})
right = KleinTableau.make([(3, 2, 1), (3, 3, 2), (4, 3, 2)], {(2, 4): [3]})
assert left.gammas == right.gammas
print("same chain, subscripts 2 vs 3 in row 4:")
print(f"  {object_of_tableau(left)}   vs   {object_of_tableau(right)}")

# the classification is exhaustive for a fixed ambient type
beta = (4, 3, 2)
tabs = enumerate_klein_entries2(beta)
print(f"\n{len(tabs)} isomorphism classes of p^2-bounded embeddings in type {beta}:")
for tab in tabs[:6]:
    print(f"  {tab.to_text():40} -> {object_of_tableau(tab)}")
print(f"  ... and {len(tabs) - 6} more")
