"""How close the two-variable family gets to the dual cyclic counts.

The ratio of face counts is bounded by an exponential in the dimension
alone, independent of the number of rows. In the other direction, a
counting argument on rows sharing a variable pair bounds how many facet
pairs can be adjacent, which keeps the dual cyclic polytope out of the
two-variable family once n is large; at the smallest parameters, where
every polygon factor is a triangle, the counts coincide exactly.
"""

from li2poly import (dual_cyclic, f_vector, facet_adjacency_count,
                     lemma41_bound, pstar, ratio_report)
from li2poly.formulas import (fk_dual_cyclic, fk_pstar,
                              separation_bound_reports, two_variable_deficit)

print("vertex-count ratios at d=4 against the e^2 envelope:")
for row in ratio_report(4, range(8, 41, 4), 0):
    print(f"  n={row.n:2d}  c*: {row.f_dual_cyclic:4d}  P*: {row.f_pstar:4d}"
          f"  ratio {str(row.ratio):>6}  (threshold {float(row.threshold):.3f})")
print()

print("adjacent facet pairs of pstar(12, 6):")
count = facet_adjacency_count(pstar(12, 6))
bound = lemma41_bound(12, 12, 6)
print(f"  counted: {count} of C(12,2) = 66 pairs; ridge bound: {bound}")
print(f"  the dual cyclic polytope needs all 66, so it cannot be realized")
print(f"  with two variables per inequality at these parameters")
print()

print("per-k separation bounds at n=60, n'=60, d=4 (deficit "
      f"{two_variable_deficit(60, 4)}):")
for r in separation_bound_reports(60, 60, 4):
    print(f"  {r.quantity}: f_k <= {r.formula_value}")
print()

print("the smallest instances are the exception: triangle factors give")
print("equality with the dual cyclic counts rather than strict separation:")
for n, d in ((6, 4), (9, 6)):
    fp = f_vector(pstar(n, d))
    fc = f_vector(dual_cyclic(n, d))
    print(f"  (n={n}, d={d})  P*: {fp}")
    print(f"            c*: {fc}")
    ties = [k for k in range(d - 1) if fp[k] == fc[k]]
    print(f"            equal coordinates below d-1: k = {ties}")
assert fk_pstar(6, 4, 0) == fk_dual_cyclic(6, 4, 0)
