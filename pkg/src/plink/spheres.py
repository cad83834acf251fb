"""Sphere subcomplexes given by their top-dimensional simplices, and pairs of them."""

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations

__all__ = [
    "SphereSubcomplex",
    "SpherePair",
    "facets",
    "mod2_boundary",
    "is_z2_sphere",
]


def facets(simplex):
    """All codimension-one faces of a simplex (a sorted tuple)."""
    k = len(simplex)
    return [simplex[:i] + simplex[i + 1:] for i in range(k)]


def mod2_boundary(simplices):
    """Faces occurring an odd number of times among the facets of `simplices`."""
    counts = Counter(f for s in simplices for f in facets(s))
    return sorted(f for f, c in counts.items() if c % 2)


def is_z2_sphere(simplices):
    """Combinatorial sphere check used throughout the package.

    True iff all simplices share one dimension n >= 1, every (n-1)-face
    occurs in exactly two of them, and the facet-adjacency graph is
    connected. For n = 0 a pair of distinct points is accepted.
    """
    simplices = [tuple(s) for s in simplices]
    if not simplices:
        return False
    dims = {len(s) for s in simplices}
    if len(dims) != 1 or len(set(simplices)) != len(simplices):
        return False
    size = dims.pop()
    if size == 1:
        return len(simplices) == 2
    by_face = defaultdict(list)
    for idx, s in enumerate(simplices):
        for f in facets(s):
            by_face[f].append(idx)
    if any(len(v) != 2 for v in by_face.values()):
        return False
    # connectivity via union-find over shared facets
    parent = list(range(len(simplices)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in by_face.values():
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    return len({find(i) for i in range(len(simplices))}) == 1


@dataclass(frozen=True)
class SphereSubcomplex:
    """An n-sphere inside a complex, stored as its set of n-simplices.

    ``kind`` is one of ``"tetrahedron"``, ``"octahedron"``, ``"cycle"`` or
    ``"transported"``; it is informational and ignored by equality.
    """

    simplices: frozenset
    kind: str = field(default="cycle", compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "simplices", frozenset(tuple(s) for s in self.simplices))

    @property
    def n(self):
        return len(next(iter(self.simplices))) - 1

    @property
    def vertices(self):
        return frozenset(v for s in self.simplices for v in s)

    @property
    def key(self):
        """Sorted simplex list; the canonical representation used for ordering."""
        return tuple(sorted(self.simplices))

    def is_valid(self):
        return is_z2_sphere(self.simplices)

    def __lt__(self, other):
        return self.key < other.key

    def __iter__(self):
        return iter(self.key)

    def __len__(self):
        return len(self.simplices)

    @classmethod
    def boundary_of(cls, vertices):
        """The sphere formed by all facets of the simplex on `vertices`."""
        vs = tuple(sorted(vertices))
        return cls(frozenset(combinations(vs, len(vs) - 1)), kind="tetrahedron")


@dataclass(frozen=True)
class SpherePair:
    """Unordered pair of vertex-disjoint spheres; components stored sorted."""

    first: SphereSubcomplex
    second: SphereSubcomplex

    def __post_init__(self):
        if self.second < self.first:
            a, b = self.first, self.second
            object.__setattr__(self, "first", b)
            object.__setattr__(self, "second", a)

    @property
    def key(self):
        return (self.first.key, self.second.key)

    def is_disjoint(self):
        return not (self.first.vertices & self.second.vertices)

    def components(self):
        return (self.first, self.second)

    def __lt__(self, other):
        return self.key < other.key
