"""
Gluing calculus and chromatic specializations
=============================================

Two more independent routes to U(t): tear the graph apart at clique
separators and multiply the pieces, or (for chordal graphs) read the
whole thing off the chromatic polynomial.
"""

from glcs import (
    chordal_chromatic,
    chromatic_polynomial,
    clique_vector,
    decompose,
    expand_product,
    graph_from_edges,
    graphic_exponents,
    parse_graph,
    poincare_polynomial,
    series_via_decomposition,
    split_at_vertex,
    tree_leaves,
)

ORDER = 8

# ---------------------------------------------------------------------------
# vertex splits

pyramid = graph_from_edges(
    [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)]
)
tree = decompose(pyramid)
leaves = list(tree_leaves(tree))
print("pyramid decomposes into", len(leaves), "leaves:",
      [f"K{len(l.graph.vertices)}" for l in leaves])

u_glued = series_via_decomposition(tree, ORDER)
u_direct = expand_product(graphic_exponents(clique_vector(pyramid)), ORDER)
print("glued U: ", u_glued)
print("direct U:", u_direct)
assert u_glued == u_direct

# one split, by hand: removing a vertex leaves the rest, the star, and
# the seam between them, and U multiplies accordingly
g1, g2, seam = split_at_vertex(pyramid, 4)
print("split at the apex: pieces on",
      len(g1.vertices), "and", len(g2.vertices),
      "vertices, seam has", len(seam.edges), "edges")

# ---------------------------------------------------------------------------
# chromatic side

chordal = parse_graph("a b\nb c\na c\nc d\nb d\n")  # two triangles glued on an edge
chi = chromatic_polynomial(chordal)
print()
print("chromatic polynomial:", chi)
assert chordal_chromatic(clique_vector(chordal)) == chi

# Poincare polynomial of the complement, from chromatic coefficients
p = poincare_polynomial(chordal)
print("Poincare polynomial: ", p)

# for chordal graphs P(-t) equals U(t) on the nose
u = expand_product(graphic_exponents(clique_vector(chordal)), 5)
assert p.substitute_negated().as_series(5) == u
print("P(-t) =", p.substitute_negated(), "= U(t)")

# a non-chordal graph fails the product form but still has a chromatic
# polynomial; the square is the smallest case
square = graph_from_edges([(0, 1), (1, 2), (2, 3), (0, 3)])
print()
print("square chromatic:", chromatic_polynomial(square))
print("square chordal product would give:",
      chordal_chromatic(clique_vector(square)))
print("(they differ, as they must: the square is not chordal)")
assert chordal_chromatic(clique_vector(square)) != chromatic_polynomial(square)
