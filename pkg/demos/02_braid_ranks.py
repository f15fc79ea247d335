"""
Braid ranks table
=================

For the complete graph K_n the exponents are e = (1, 1, ..., 1) and the
product collapses to U(t) = (1-t)(1-2t)...(1-(n-1)t).  This script
tabulates the resulting ranks, which are the classic pure braid group
lower central series ranks.
"""

from glcs import (
    braid_series,
    clique_vector,
    complete_graph,
    expand_product,
    graphic_exponents,
    phi_from_exponents,
)

DEGREE = 8

print("phi_k for the pure braid groups P_n")
header = "n  " + "".join(f"{('phi_' + str(k)):>12}" for k in range(1, DEGREE + 1))
print(header)
print("-" * len(header))

for n in range(2, 9):
    g = complete_graph(n)
    e = graphic_exponents(clique_vector(g))
    assert e == (1,) * (n - 1)
    phi = phi_from_exponents(e, DEGREE)
    print(f"{n}  " + "".join(f"{p:>12}" for p in phi))

# cross-check one row against the direct factored product
n = 5
u_direct = braid_series(n, 10)
e = graphic_exponents(clique_vector(complete_graph(n)))
u_formula = expand_product(e, 10)
assert u_direct == u_formula
print()
print(f"K_{n}: direct product and clique formula agree:", u_direct)

# phi_1 = C(n,2) edges, and phi_2 = C(n,3) independent triangle relations
for n in range(2, 9):
    phi = phi_from_exponents(
        graphic_exponents(clique_vector(complete_graph(n))), 2
    )
    assert phi[0] == n * (n - 1) // 2
    assert phi[1] == n * (n - 1) * (n - 2) // 6
print("ok: phi_1 = C(n,2) and phi_2 = C(n,3) for all n up to 8")
