"""
Rank formula walkthrough
========================

Start-to-finish computation of the lower central series ranks for one
graph: count cliques, transform to exponents, expand the product, read
off the ranks.
"""

from glcs import (
    clique_vector,
    expand_lcs_product,
    expand_product,
    graphic_exponents,
    parse_graph,
    phi_from_exponents,
)

# A 4-cycle v1..v4, an apex 'a' over all of it, and a vertex 'w' joined
# to a, v1, v2.  Six vertices, eleven edges, and exactly one K4
# (on w, a, v1, v2).
TEXT = """
v1 v2
v2 v3
v3 v4
v4 v1
a v1
a v2
a v3
a v4
w a
w v1
w v2
"""

g = parse_graph(TEXT)
print(f"graph: {len(g.vertices)} vertices, {len(g.edges)} edges")

# kappa_s counts the complete subgraphs on s+1 vertices
kappa = clique_vector(g)
print("clique vector kappa:", kappa)

# alternating binomial transform of the clique counts
e = graphic_exponents(kappa)
print("exponents e:", e)
print("so U(t) = (1-t)^%d (1-2t)^%d (1-3t)^%d" % e)

# the closed form: U(t) = prod_j (1-jt)^(e_j)
u = expand_product(e, 6)
print("U(t) =", u)

# Moebius inversion of the logarithm recovers the ranks phi_k from e;
# by construction prod_k (1-t^k)^(phi_k) reproduces the same series
phi = phi_from_exponents(e, 6)
print("phi_1..phi_6:", phi)
assert expand_lcs_product(phi, 6) == u

# phi_1 is the number of edges, phi_2 the number of independent
# degree-2 relations among them
assert phi[0] == len(g.edges)
print("ok: product over (1-t^k)^(phi_k) matches U(t) exactly")
