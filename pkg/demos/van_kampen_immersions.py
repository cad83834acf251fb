"""
Double points of generic immersions
===================================

Linear maps of sigma_(2n+2)^n and [3]^*(n+1) into R^(2n) always have an
odd number of double points. In the plane this is the familiar fact
about drawings of K5 and K3,3.
"""

from plink import complete_graph, fold_join, moment_embedding, randomized_embedding
from plink.constructions import sigma_skeleton
from plink.errors import DegenerateConfiguration
from plink.geometry import vkf_crossings

# K5 with vertices in convex position: every 4 vertices give one crossing
K5 = complete_graph(5)
convex = moment_embedding(K5, 2, [0, 1, 3, 7, 12])
print("convex K5:", vkf_crossings(K5, convex), "crossings")

for K in (fold_join(3, 2), sigma_skeleton(6, 2), fold_join(3, 3)):
    counts = []
    seed = 0
    while len(counts) < 8:
        e = randomized_embedding(K, 2 * K.n, seed)
        seed += 1
        try:
            counts.append(vkf_crossings(K, e))
        except DegenerateConfiguration:
            continue        # two parallel faces; draw again
    print("%-12s in R^%d: crossings %s" % (K.name or "complex", 2 * K.n, counts))
