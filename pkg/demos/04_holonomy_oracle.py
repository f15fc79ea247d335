"""
Holonomy Lie algebra from scratch
=================================

The independent check behind everything else: present the holonomy Lie
algebra on edge generators, compute its graded dimensions by exact
integer elimination in the Lyndon basis, and compare the resulting ranks
with the closed-form clique formula.

No series manipulation is involved on the oracle side; the two routes
share nothing but the graph.
"""

from glcs import (
    clique_vector,
    complete_graph,
    graded_dims,
    graph_from_edges,
    graphic_exponents,
    phi_bruteforce,
    phi_from_exponents,
    presentation,
    witt_dimension,
)

# one triangle: three generators, two independent relations
g = complete_graph(3)
p = presentation(g)
print(f"K3 presentation: {p.num_generators} generators, {len(p.relators)} relators")
for rel in p.relators:
    terms = " + ".join(f"{c}*[x{a},x{b}]" for (a, b), c in rel)
    print("  relator:", terms)

dims = graded_dims(p, 4)
print("free Lie dims:   ", dims.free_dims)
print("relation ideal:  ", dims.ideal_dims)
print("holonomy (= phi):", dims.quotient_dims)

# the quotient dimensions are exactly the LCS ranks
assert dims.quotient_dims == phi_from_exponents(
    graphic_exponents(clique_vector(g)), 4
)

# scale check: K5 has 10 edge generators; degree 4 of the free Lie
# algebra already has Witt dimension 2475
print()
print("witt_dimension(10, k) for k = 1..4:",
      [witt_dimension(10, k) for k in range(1, 5)])

g5 = complete_graph(5)
phi_oracle = phi_bruteforce(g5, 4)
phi_formula = phi_from_exponents(graphic_exponents(clique_vector(g5)), 4)
print("K5 oracle ranks: ", phi_oracle)
print("K5 formula ranks:", phi_formula)
assert phi_oracle == phi_formula

# a graph where the two relator shapes mix: triangle with a pendant edge
g = graph_from_edges([(0, 1), (0, 2), (1, 2), (2, 3)])
print()
print("triangle + pendant edge:")
print("  oracle: ", phi_bruteforce(g, 4))
print("  formula:", phi_from_exponents(graphic_exponents(clique_vector(g)), 4))
