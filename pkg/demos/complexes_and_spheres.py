"""
Building the complexes
======================

The cone complex K(n), its apex-free part H(n), and the n-spheres
(tetrahedra and octahedra) that pair up inside them.
"""

from plink import build_H, build_K, find_octahedra, find_tetrahedra, fold_join
from plink.canonical import is_isomorphic
from plink.complex import degree
from plink.linking import lambda_pattern

# K(2): ten vertices, an apex b plus three factors of three points
K, idx = build_K(2)
print(K.name, "f-vector:", K.f_vector())
print("degree of b:", degree(K, (idx.apex,)),
      " degree of a_0^0:", degree(K, (idx.a(0, 0),)))

# every 2-tetrahedron runs through b
tets = find_tetrahedra(K)
print(len(tets), "tetrahedra, all through b:",
      all(idx.apex in t.vertices for t in tets))

# octahedra: the apex-free ones pick a pair from each factor
octs = find_octahedra(K)
print(len(octs), "octahedra,", sum(idx.apex not in o.vertices for o in octs),
      "of them avoid b")

# the sphere pairs that the parity statement sums over
fam = lambda_pattern(K)
print(len(fam), "disjoint tetrahedron/octahedron pairs")
p = fam.pairs[0]
print("first pair:", [K.label(v) for v in sorted(p.first.vertices)], "|",
      [K.label(v) for v in sorted(p.second.vertices)])

# H(n) is a join of n+1 three-point sets
for n in (1, 2, 3):
    print("H(%d) ~ [3]^*%d:" % (n, n + 1), is_isomorphic(build_H(n), fold_join(3, n + 1)))
