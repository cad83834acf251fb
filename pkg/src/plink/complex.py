"""
Abstract simplicial complexes stored by their maximal simplices.

A simplex is a strictly increasing tuple of non-negative integer vertex
ids. Every complex carries a vertex table mapping ids to string labels;
labels default to ``str(id)``. Complexes are immutable; the face closure
is computed lazily, once, under a lock.
"""

import json
import threading
from itertools import combinations, product

from .errors import (
    DimensionOutOfRange,
    DuplicateVertexId,
    SimplexNotInComplex,
)
from .spheres import SphereSubcomplex

__all__ = [
    "SimplicialComplex",
    "simplex",
    "closure",
    "skeleton",
    "join",
    "points",
    "delta_k",
    "boundary_sphere",
    "degree",
    "find_tetrahedra",
    "find_octahedra",
    "is_trivalent",
    "is_subcomplex",
    "from_json",
    "to_json",
]


def simplex(*vertices):
    """Sorted simplex tuple from vertex ids; rejects repeats."""
    vs = tuple(sorted(vertices))
    if not vs:
        raise ValueError("a simplex needs at least one vertex")
    if len(set(vs)) != len(vs):
        raise ValueError("repeated vertex in simplex %r" % (vertices,))
    if vs[0] < 0:
        raise ValueError("vertex ids must be non-negative")
    return vs


def _prune(simplices):
    """Drop every simplex that is a proper face of another one."""
    ordered = sorted(set(simplices), key=len, reverse=True)
    kept = []
    kept_sets = []
    for s in ordered:
        ss = frozenset(s)
        if any(ss < k for k in kept_sets):
            continue
        kept.append(s)
        kept_sets.append(ss)
    return frozenset(kept)


class SimplicialComplex:
    """Face-closed complex determined by its maximal simplices.

    Parameters
    ----------
    maximal : iterable of simplices
        Any generating set; dominated simplices are pruned.
    labels : dict or None
        Vertex id -> label. Ids present here but in no simplex become
        isolated vertices.
    name : str
    """

    def __init__(self, maximal, labels=None, name=""):
        gens = [simplex(*s) for s in maximal]
        labels = dict(labels or {})
        used = {v for s in gens for v in s}
        for v in used:
            labels.setdefault(v, str(v))
        if len(set(labels.values())) != len(labels):
            raise DuplicateVertexId("vertex labels must be unique")
        gens.extend((v,) for v in labels if v not in used)
        self._maximal = _prune(gens)
        self._labels = labels
        self.name = name
        self._faces = None
        self._face_set = frozenset()
        self._lock = threading.Lock()

    def __getstate__(self):
        state = self.__dict__.copy()
        del state["_lock"]
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._lock = threading.Lock()

    # -- basic data -------------------------------------------------
    @property
    def maximal(self):
        return self._maximal

    @property
    def labels(self):
        return dict(self._labels)

    def label(self, v):
        return self._labels[v]

    def vertex_by_label(self, label):
        for v, lab in self._labels.items():
            if lab == label:
                return v
        raise KeyError(label)

    @property
    def vertices(self):
        return tuple(sorted(self._labels))

    @property
    def n(self):
        return max((len(s) - 1 for s in self._maximal), default=-1)

    dim = n

    def is_pure(self):
        n = self.n
        return all(len(s) - 1 == n for s in self._maximal)

    # -- face closure -----------------------------------------------
    def _closure(self):
        if self._faces is None:
            with self._lock:
                if self._faces is None:
                    by_dim = {}
                    for s in self._maximal:
                        for k in range(1, len(s) + 1):
                            by_dim.setdefault(k - 1, set()).update(
                                combinations(s, k))
                    self._face_set = frozenset(
                        f for v in by_dim.values() for f in v)
                    self._faces = {
                        k: tuple(sorted(v)) for k, v in by_dim.items()}
        return self._faces

    def faces(self, k):
        """All k-simplices, sorted lexicographically."""
        return self._closure().get(k, ())

    def f_vector(self):
        return [len(self.faces(k)) for k in range(self.n + 1)]

    def face_set(self):
        self._closure()
        return self._face_set

    def __contains__(self, s):
        return tuple(s) in self.face_set()

    def has_face(self, s):
        return self.__contains__(s)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self._maximal == other._maximal
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash(self._maximal)

    def __repr__(self):
        name = self.name or "SimplicialComplex"
        return "<%s: n=%d, %d vertices, f=%s>" % (
            name, self.n, len(self.vertices), self.f_vector())

    # -- derived operations -----------------------------------------
    def top_simplices(self):
        return self.faces(self.n)

    def degree(self, s):
        return degree(self, s)

    def replace(self, removed=(), added=(), labels=None, name=None):
        """New complex with maximal simplices removed/added.

        Faces of removed simplices survive only if they lie in some other
        simplex of the result.
        """
        removed = {tuple(s) for s in removed}
        gens = [s for s in self._maximal if s not in removed]
        gens.extend(simplex(*s) for s in added)
        lab = dict(self._labels) if labels is None else dict(labels)
        return SimplicialComplex(gens, lab, self.name if name is None else name)


def closure(maximal, labels=None, name=""):
    """Face-closed complex generated by `maximal`.

    `labels` may be a dict id -> label, or a sequence of labels indexed
    by id. Repeated ids or labels raise :class:`DuplicateVertexId`.
    """
    if labels is not None and not isinstance(labels, dict):
        labels = list(labels)
        if len(set(labels)) != len(labels):
            raise DuplicateVertexId("repeated label in vertex table")
        labels = dict(enumerate(labels))
    elif isinstance(labels, dict) and len(set(labels.values())) != len(labels):
        raise DuplicateVertexId("repeated label in vertex table")
    return SimplicialComplex(maximal, labels, name)


def _check_dim(K, k):
    if not 0 <= k <= K.n:
        raise DimensionOutOfRange("k=%d outside [0, %d]" % (k, K.n))


def skeleton(K, k):
    """The k-skeleton: all faces of dimension <= k."""
    _check_dim(K, k)
    gens = list(K.faces(k)) + [s for s in K.maximal if len(s) - 1 < k]
    return SimplicialComplex(gens, K.labels, K.name and "%s^(%d)" % (K.name, k))


def delta_k(K, k):
    """Sorted list of the k-simplices of K."""
    _check_dim(K, k)
    return list(K.faces(k))


def points(k, name=None):
    """The 0-complex [k] of k points."""
    return SimplicialComplex([(i,) for i in range(k)], name=name or "[%d]" % k)


def join(K, L, name=None):
    """Join K * L with the vertices of L shifted past those of K.

    Labels become ``"<label>.<factor>"`` with factor 0 for K and 1 for L.
    """
    offset = max(K.vertices, default=-1) + 1
    labels = {v: "%s.0" % K.label(v) for v in K.vertices}
    labels.update({v + offset: "%s.1" % L.label(v) for v in L.vertices})
    gens = [s + tuple(v + offset for v in t)
            for s, t in product(K.maximal, L.maximal)]
    return SimplicialComplex(
        gens, labels, name or "(%s * %s)" % (K.name, L.name))


def boundary_sphere(m):
    """Boundary of the m-simplex on vertices 0..m."""
    if m < 1:
        raise DimensionOutOfRange("boundary_sphere needs m >= 1")
    return SimplicialComplex(
        combinations(range(m + 1), m), name="boundary(sigma_%d)" % m)


def degree(K, s, n=None):
    """Number of n-simplices of K containing s (n defaults to dim K)."""
    s = tuple(sorted(s))
    if s not in K:
        raise SimplexNotInComplex(repr(s))
    n = K.n if n is None else n
    ss = set(s)
    return sum(1 for t in K.faces(n) if ss.issubset(t))


def degree_table(K, k, n=None):
    """Map each k-simplex to its degree; one pass over the n-simplices."""
    n = K.n if n is None else n
    table = dict.fromkeys(K.faces(k), 0)
    for t in K.faces(n):
        for f in combinations(t, k + 1):
            table[f] += 1
    return table


def find_tetrahedra(K):
    """All n-tetrahedra (copies of the boundary of an (n+1)-simplex)."""
    n = K.n
    top = set(K.faces(n))
    verts = K.vertices
    found = []
    for s in K.faces(n):
        for w in verts:
            if w <= s[-1]:
                continue
            S = s + (w,)
            if all(f in top for f in combinations(S, n + 1)):
                found.append(SphereSubcomplex.boundary_of(S))
    return sorted(found)


def find_octahedra(K):
    """All n-octahedra: n+1 disjoint vertex pairs whose transversals are n-simplices.

    Pairs are chosen with increasing smaller endpoints so each octahedron
    is produced once.
    """
    n = K.n
    faces = K.face_set()
    verts = K.vertices
    found = []

    def transversals(pairs):
        return [tuple(sorted(c)) for c in product(*pairs)]

    def extend(pairs, used):
        if len(pairs) == n + 1:
            found.append(SphereSubcomplex(
                frozenset(transversals(pairs)), kind="octahedron"))
            return
        lo = pairs[-1][0] if pairs else -1
        for u in verts:
            if u <= lo or u in used:
                continue
            for v in verts:
                if v <= u or v in used:
                    continue
                cand = pairs + [(u, v)]
                if all(t in faces for t in transversals(cand)):
                    extend(cand, used | {u, v})

    extend([], frozenset())
    return sorted(found)


def is_trivalent(K):
    """Every (n-1)-simplex lies in exactly three n-simplices."""
    n = K.n
    if n < 1:
        raise DimensionOutOfRange("trivalence needs dim >= 1")
    return all(d == 3 for d in degree_table(K, n - 1).values())


def is_subcomplex(L, K):
    """Every simplex of L is a simplex of K (same vertex ids)."""
    return L.face_set() <= K.face_set()


# -- JSON -----------------------------------------------------------

def to_dict(K):
    ids = K.vertices
    index = {v: i for i, v in enumerate(ids)}
    return {
        "name": K.name,
        "n": K.n,
        "vertices": [K.label(v) for v in ids],
        "maximal_simplices": sorted(
            sorted(index[v] for v in s) for s in K.maximal),
    }


def to_json(K, **kwargs):
    return json.dumps(to_dict(K), **kwargs)


def from_dict(data):
    labels = data["vertices"]
    if len(set(labels)) != len(labels):
        raise DuplicateVertexId("repeated label in vertex table")
    n_vert = len(labels)
    for s in data["maximal_simplices"]:
        if any(not 0 <= v < n_vert for v in s):
            raise DuplicateVertexId("simplex %r references unknown vertex" % (s,))
    K = SimplicialComplex(data["maximal_simplices"],
                          dict(enumerate(labels)), data.get("name", ""))
    if "n" in data and data["n"] != K.n:
        raise DimensionOutOfRange(
            "declared n=%s but maximal simplices give %d" % (data["n"], K.n))
    return K


def from_json(text):
    return from_dict(json.loads(text))
