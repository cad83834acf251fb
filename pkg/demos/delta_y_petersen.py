"""
Delta-Y exchanges and the Petersen family
=========================================

Replace a triangle of a graph by a Y and repeat. Starting from K6 and
from K3,3,1 gives the seven graphs of the Petersen family; the same
move on zero-sum tetrahedra of K(n) builds the trivalent complex P(n).
"""

from plink import build_K, build_P, complete_graph, kneser_graph
from plink.canonical import is_isomorphic
from plink.complex import is_trivalent
from plink.deltay import apply_delta_y, family_search, petersen_family, transport_sphere
from plink.spheres import SphereSubcomplex

K6 = complete_graph(6)
KY, rec = apply_delta_y(K6, (0, 1, 2))
print("K6 after one exchange:", len(KY.vertices), "vertices,", len(KY.faces(1)), "edges")

# a 4-cycle through two triangle edges is rerouted through the new vertex
square = SphereSubcomplex(frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))
print("0-1-2-3 becomes", sorted(transport_sphere(square, rec).simplices))

for root in (K6, build_K(1)[0]):
    fs = family_search(root)
    print("family of a %d-vertex graph:" % len(root.vertices),
          sorted(len(nd.complex.vertices) for nd in fs.nodes))
print(petersen_family())

# P(1) is the Petersen graph
print("P(1) ~ Kneser(5,2):", is_isomorphic(build_P(1), kneser_graph(5, 2)))
for n in (1, 2, 3):
    P = build_P(n)
    print("P(%d): %d vertices, f-vector %s, trivalent %s"
          % (n, len(P.vertices), P.f_vector(), is_trivalent(P)))
