"""
Higher-dimensional Delta-Y exchanges.

An exchange removes the n+2 top simplices of an n-tetrahedron (the
boundary of an (n+1)-simplex S) and cones the (n-1)-skeleton of S to a
new vertex x. Spheres of the old complex are carried across by rerouting
the tetrahedron faces they use: a sphere using faces F is replaced by
(sphere - F) + (mod-2 boundary of F) * x. A sphere equal to the whole
tetrahedron has no image.
"""

import random
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .canonical import canonicalize
from .complex import (
    SimplicialComplex,
    degree_table,
    find_tetrahedra,
    is_subcomplex,
    is_trivalent,
    skeleton,
)
from .constructions import (
    build_K,
    complete_graph,
    gamma_xi_tetrahedra,
    sigma_skeleton,
)
from .errors import NotATetrahedron, TransportBroken
from .linking import PairFamily, lambda_pattern
from .spheres import SpherePair, SphereSubcomplex, is_z2_sphere, mod2_boundary

__all__ = [
    "ExchangeRecord",
    "FamilyNode",
    "FamilySearch",
    "DisjointnessCertificate",
    "apply_delta_y",
    "transport_sphere",
    "transport_family",
    "build_P",
    "xi_exchange_sequence",
    "family_search",
    "petersen_family",
    "degree_equation_holds",
    "hdpet_certificate",
    "is_trivalent",
]


@dataclass(frozen=True)
class ExchangeRecord:
    source: str
    tetra_vertices: tuple
    removed: tuple
    x: int
    added: tuple

    def to_dict(self):
        return {"source": self.source,
                "tetra": list(self.tetra_vertices),
                "removed": [list(s) for s in self.removed],
                "x": self.x,
                "added": [list(s) for s in self.added]}


def _as_vertex_set(tetra):
    if isinstance(tetra, SphereSubcomplex):
        return tuple(sorted(tetra.vertices))
    return tuple(sorted(tetra))


def _fresh_label(K, prefix="x"):
    used = set(K.labels.values())
    k = 0
    while "%s%d" % (prefix, k) in used:
        k += 1
    return "%s%d" % (prefix, k)


def apply_delta_y(K, tetra, label=None):
    """Exchange at `tetra` (a sphere or its n+2 vertices).

    Returns ``(K_Y, record)``; the new vertex gets the next free id and
    label `label` (default the first unused ``x<k>``).
    """
    S = _as_vertex_set(tetra)
    n = K.n
    if len(S) != n + 2:
        raise NotATetrahedron("%r has %d vertices, need %d" % (S, len(S), n + 2))
    top = set(K.faces(n))
    removed = tuple(combinations(S, n + 1))
    if not all(f in top for f in removed):
        raise NotATetrahedron("%r is not an n-tetrahedron of %r" % (S, K))
    x = max(K.vertices) + 1
    added = tuple(rho + (x,) for rho in combinations(S, n))
    labels = K.labels
    labels[x] = label or _fresh_label(K)
    KY = K.replace(removed=removed, added=added, labels=labels,
                   name="%s.Y%s" % (K.name, labels[x]) if K.name else "")
    rec = ExchangeRecord(K.name, S, removed, x, added)
    return KY, rec


def transport_sphere(gamma, rec):
    """Image of a sphere under the exchange; None if gamma is the tetrahedron."""
    removed = set(rec.removed)
    used = gamma.simplices & removed
    if not used:
        return gamma
    if used == removed:
        return None
    cone = [rho + (rec.x,) for rho in mod2_boundary(used)]
    image = SphereSubcomplex((gamma.simplices - used) | frozenset(cone),
                             kind="transported")
    if not is_z2_sphere(image.simplices):
        raise TransportBroken("transported %r is not a sphere" % (gamma.key,))
    return image


def transport_family(family, rec, target):
    """Carry every pair avoiding the tetrahedron over to `target`."""
    top = set(target.faces(target.n))
    out = []
    for p in family:
        a = transport_sphere(p.first, rec)
        b = transport_sphere(p.second, rec)
        if a is None or b is None:
            continue
        if a.vertices & b.vertices:
            raise TransportBroken("transported pair %r lost disjointness"
                                  % (p.key,))
        if not (a.simplices <= top and b.simplices <= top):
            raise TransportBroken("transported pair leaves the target complex")
        out.append(SpherePair(a, b))
    return PairFamily(target, tuple(out), "transported")


def build_P(n, order=None, return_records=False):
    """Apply exchanges at all zero-sum apex tetrahedra of K(n).

    `order` is a permutation of ``range(3**n)`` selecting the sequence;
    the x vertex of the k-th tetrahedron of the zero-sum list is
    labelled ``x_k`` whatever the order.
    """
    K, _ = build_K(n)
    tetras = gamma_xi_tetrahedra(n)
    order = range(len(tetras)) if order is None else order
    records = []
    for k in order:
        K, rec = apply_delta_y(K, tetras[k], label="x_%d" % k)
        records.append(rec)
    K.name = "P^(%d)" % n
    return (K, records) if return_records else K


def xi_exchange_sequence(n, stages=None):
    """Complexes after 1, 2, ... zero-sum exchanges on K(n), each with the
    pattern family of K(n) transported along the way.

    Yields ``(complex, family)``; the last stage is P(n).
    """
    K, _ = build_K(n)
    fam = lambda_pattern(K)
    tetras = gamma_xi_tetrahedra(n)
    wanted = set(range(1, len(tetras) + 1) if stages is None else stages)
    for k, t in enumerate(tetras, start=1):
        KY, rec = apply_delta_y(K, t, label="x_%d" % (k - 1))
        fam = transport_family(fam, rec, KY)
        KY.name = "K^(%d)+%dY" % (n, k) if k < len(tetras) else "P^(%d)" % n
        K = KY
        if k in wanted:
            yield K, fam


# -- family search ---------------------------------------------------

@dataclass
class FamilyNode:
    complex: SimplicialComplex
    digest: str
    parent: str = None
    exchange: tuple = None

    def to_dict(self):
        return {"digest": self.digest,
                "parent": self.parent,
                "exchange": list(self.exchange) if self.exchange else None,
                "vertices": len(self.complex.vertices),
                "f_vector": self.complex.f_vector()}


@dataclass
class FamilySearch:
    nodes: list
    edges: list = field(default_factory=list)
    truncated: bool = False

    def digests(self):
        return {nd.digest for nd in self.nodes}

    def to_dict(self):
        return {"nodes": [nd.to_dict() for nd in self.nodes],
                "edges": [list(e) for e in self.edges],
                "truncated": self.truncated}


def family_search(K, max_nodes=1000):
    """Breadth-first search over exchanges, deduplicated up to isomorphism.

    ``edges`` lists every (parent digest, child digest) arrow found,
    including arrows into already-known complexes.
    """
    root = FamilyNode(K, canonicalize(K).digest)
    nodes = [root]
    seen = {root.digest}
    edges = set()
    queue = deque([root])
    truncated = False
    while queue:
        node = queue.popleft()
        for t in find_tetrahedra(node.complex):
            child, _ = apply_delta_y(node.complex, t)
            dig = canonicalize(child).digest
            edges.add((node.digest, dig))
            if dig in seen:
                continue
            if len(nodes) >= max_nodes:
                truncated = True
                continue
            seen.add(dig)
            new = FamilyNode(child, dig, node.digest, tuple(sorted(t.vertices)))
            nodes.append(new)
            queue.append(new)
    return FamilySearch(nodes, sorted(edges), truncated)


def petersen_family():
    """Union/intersection sizes of the exchange families of K_6 and K_{3,3,1}."""
    a = family_search(complete_graph(6))
    b = family_search(build_K(1)[0])
    da, db = a.digests(), b.digests()
    members = a.nodes + [nd for nd in b.nodes if nd.digest not in da]
    return {"union": len(da | db),
            "intersection": len(da & db),
            "all_15_edges": all(len(nd.complex.faces(1)) == 15 for nd in members),
            "sizes": sorted(len(nd.complex.vertices) for nd in members)}


# -- degrees -----------------------------------------------------------

def degree_equation_holds(K, KY, rec):
    """Check that (n-2)-simplex degrees are kept, and equal 6 through x.

    Also checks that the (n-1)-skeleton of K survives as a subcomplex.
    """
    n = K.n
    if n < 2:
        raise ValueError("the degree equation concerns n >= 2")
    if not is_subcomplex(skeleton(K, n - 1), KY):
        return False
    before = degree_table(K, n - 2)
    after = degree_table(KY, n - 2)
    for s, d in after.items():
        if rec.x in s:
            if d != 6:
                return False
        elif before.get(s) != d:
            return False
    return True


def _k_face_degrees(n):
    """Degree multiset of (n-2)-simplices of K(n), counted by face shape.

    A face is determined by whether it holds the apex and which factors
    it meets; its degree counts completions to maximal simplices: an
    apex-free top simplex meets every factor, an apex top simplex misses
    exactly one.
    """
    out = Counter()
    for with_apex in (True, False):
        met = n - 2 if with_apex else n - 1
        free = n + 1 - met
        deg = 0
        if not with_apex:
            deg += 3 ** free                        # apex-free completions
        deg += free * 3 ** (free - 1)               # choose omitted factor
        out[deg] += comb(n + 1, met) * 3 ** met
    return out


def _enumerated_degrees(K, k):
    return Counter(degree_table(K, k).values())


@dataclass
class DisjointnessCertificate:
    n: int
    sigma_degrees: dict
    k_degrees: dict
    sigma_value: int
    method: str
    exchanges_checked: int = 0
    degree_equation: bool = True

    @property
    def holds(self):
        return (set(self.sigma_degrees) == {self.sigma_value}
                and self.sigma_value not in self.k_degrees
                and self.degree_equation)

    def to_dict(self):
        return {"n": self.n,
                "sigma_degrees": {str(k): v for k, v in sorted(self.sigma_degrees.items())},
                "k_degrees": {str(k): v for k, v in sorted(self.k_degrees.items())},
                "sigma_value": self.sigma_value,
                "method": self.method,
                "exchanges_checked": self.exchanges_checked,
                "degree_equation": self.degree_equation,
                "holds": self.holds}


def hdpet_certificate(n, exchanges=0, seed=0, enumerate_up_to=3):
    """Degree-multiset witness that the two exchange families stay apart.

    For n <= `enumerate_up_to` the (n-2)-simplex degrees are enumerated
    from the complexes; above that they are counted per face shape.
    `exchanges` random exchange sequences from K(n) are checked against
    the degree equation.
    """
    if n < 2:
        raise ValueError("the certificate concerns n >= 2")
    sv = comb(n + 5, 2)
    if n <= enumerate_up_to:
        sig = _enumerated_degrees(sigma_skeleton(2 * n + 3, n), n - 2)
        kd = _enumerated_degrees(build_K(n)[0], n - 2)
        method = "enumeration"
    else:
        sig = Counter({comb(n + 5, 2): comb(2 * n + 4, n - 1)})
        kd = _k_face_degrees(n)
        method = "face-shape count"
    ok = True
    if exchanges:
        ok = random_exchange_check(n, exchanges, seed)
    return DisjointnessCertificate(n, dict(sig), dict(kd), sv, method,
                                   exchanges, ok)


def random_exchange_check(n, count, seed=0, start=None):
    """Apply `count` random exchanges from `start` (default K(n)), checking
    the degree equation at every step."""
    rng = random.Random("deg/%d/%s" % (n, seed))
    K = start if start is not None else build_K(n)[0]
    for _ in range(count):
        tetras = find_tetrahedra(K)
        if not tetras:
            K = start if start is not None else build_K(n)[0]
            tetras = find_tetrahedra(K)
        KY, rec = apply_delta_y(K, rng.choice(tetras))
        if not degree_equation_holds(K, KY, rec):
            return False
        K = KY
    return True


__all__ += ["random_exchange_check"]
