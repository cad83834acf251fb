"""
Named complexes: skeleta of simplices, iterated joins of point sets, the
apex-and-factors complex K(n), its factor subcomplex H(n), the
zero-sum selection Xi and the tetrahedra through the apex built on it.

Vertex ids for K(n) and H(n): the apex ``b`` is 0 and the j-th point
of factor i, labelled ``a_j^i``, has id ``1 + 3*i + j``.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .complex import SimplicialComplex, join, points
from .errors import DimensionOutOfRange
from .spheres import SphereSubcomplex

__all__ = [
    "FactorIndexing",
    "sigma_skeleton",
    "fold_join",
    "build_K",
    "build_H",
    "xi_set",
    "gamma_xi_tetrahedra",
    "complete_graph",
    "kneser_graph",
    "petersen_graph",
]

APEX = 0


def vertex_id(i, j):
    """Id of a_j^i."""
    return 1 + 3 * i + j


@dataclass(frozen=True)
class FactorIndexing:
    n: int
    apex: int = APEX

    @property
    def factors(self):
        return tuple(tuple(vertex_id(i, j) for j in range(3))
                     for i in range(self.n + 1))

    def a(self, i, j):
        return vertex_id(i, j)

    def coordinates(self, v):
        """(i, j) for the vertex a_j^i, None for the apex."""
        if v == self.apex:
            return None
        return divmod(v - 1, 3)

    def labels(self):
        lab = {self.apex: "b"}
        for i in range(self.n + 1):
            for j in range(3):
                lab[vertex_id(i, j)] = "a_%d^%d" % (j, i)
        return lab

    def type_one(self, js):
        """|a_{j_0}^0 ... a_{j_n}^n| for a choice js of length n+1."""
        return tuple(vertex_id(i, j) for i, j in enumerate(js))


def sigma_skeleton(m, n):
    """n-skeleton of the m-simplex on vertices 0..m."""
    if not 0 <= n <= m:
        raise DimensionOutOfRange("need 0 <= n <= m, got n=%d, m=%d" % (n, m))
    return SimplicialComplex(combinations(range(m + 1), n + 1),
                             name="sigma_%d^%d" % (m, n))


def complete_graph(k):
    return SimplicialComplex(combinations(range(k), 2), name="K_%d" % k)


def fold_join(k, folds):
    """[k]^{*folds}: vertex j of factor i gets id i*k + j, label ``"j.i"``."""
    if k < 1 or folds < 1:
        raise ValueError("need k >= 1 and folds >= 1")
    gens = [tuple(i * k + j for i, j in enumerate(js))
            for js in product(range(k), repeat=folds)]
    labels = {i * k + j: "%d.%d" % (j, i)
              for i in range(folds) for j in range(k)}
    return SimplicialComplex(gens, labels, name="[%d]^*%d" % (k, folds))


def build_K(n):
    """K(n) together with its :class:`FactorIndexing`.

    Maximal n-simplices: the 3^(n+1) transversals of the factors, plus
    for each omitted factor q the 3^n transversals of the others joined
    with the apex.
    """
    if n < 1:
        raise DimensionOutOfRange("build_K needs n >= 1")
    idx = FactorIndexing(n)
    gens = [idx.type_one(js) for js in product(range(3), repeat=n + 1)]
    for q in range(n + 1):
        others = [i for i in range(n + 1) if i != q]
        for js in product(range(3), repeat=n):
            gens.append((APEX,) + tuple(
                vertex_id(i, j) for i, j in zip(others, js)))
    return SimplicialComplex(gens, idx.labels(), "K^(%d)" % n), idx


def build_H(n):
    """The subcomplex of K(n) spanned by its apex-free n-simplices."""
    if n < 1:
        raise DimensionOutOfRange("build_H needs n >= 1")
    idx = FactorIndexing(n)
    gens = [idx.type_one(js) for js in product(range(3), repeat=n + 1)]
    labels = idx.labels()
    del labels[APEX]
    return SimplicialComplex(gens, labels, "H^(%d)" % n)


def xi_set(n):
    """Apex-free n-simplices whose factor indices sum to 0 mod 3."""
    idx = FactorIndexing(n)
    return sorted(idx.type_one(js) for js in product(range(3), repeat=n + 1)
                  if sum(js) % 3 == 0)


def gamma_xi_tetrahedra(n):
    """Boundaries of the apex cones over the members of :func:`xi_set`."""
    return [SphereSubcomplex.boundary_of((APEX,) + s) for s in xi_set(n)]


def kneser_graph(m, k):
    """Vertices are k-subsets of range(m); edges join disjoint subsets."""
    subsets = list(combinations(range(m), k))
    edges = [(i, j) for i, j in combinations(range(len(subsets)), 2)
             if not set(subsets[i]) & set(subsets[j])]
    labels = {i: "".join(map(str, s)) for i, s in enumerate(subsets)}
    return SimplicialComplex(edges, labels, "Kneser(%d,%d)" % (m, k))


def petersen_graph():
    return kneser_graph(5, 2)


def octahedron(n):
    """[2]^{*(n+1)}, the boundary of the (n+1)-dimensional cross-polytope."""
    return fold_join(2, n + 1)


def join_power(K, folds):
    """K * K * ... * K (folds copies) through the generic join."""
    out = K
    for _ in range(folds - 1):
        out = join(out, K)
    return out


__all__ += ["octahedron", "join_power", "points", "vertex_id"]
