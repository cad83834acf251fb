"""
Exact linear embeddings and the crossing predicates built on them.

Embeddings are linear on simplices and send vertices to rational points.
Moment-curve points t -> (t, t^2, ..., t^d) with distinct integer t are
in general position; :func:`randomized_embedding` permutes parameters,
applies a random unimodular shear and revalidates. All predicates are
decided exactly: rational points are rescaled to integers and linear
systems are solved by fraction-free elimination.

Over/under convention: in ``R^(2n+1)`` projected to ``R^(2n)`` by dropping
the last coordinate, "tau over sigma" means tau's last coordinate is
strictly larger at the double point.
"""

import json
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import (
    DegenerateApex,
    DegenerateConfiguration,
    DuplicateParameter,
    GenericityExhausted,
)
from .exact import (
    PRIME,
    bareiss_det,
    integer_rank,
    nonsingular_mask,
    scale_to_integers,
    solve_integer,
    to_fraction,
)

__all__ = [
    "Embedding",
    "Crossing",
    "CrossingReport",
    "max_resample",
    "moment_point",
    "moment_embedding",
    "randomized_embedding",
    "unimodular_shear",
    "general_position_witness",
    "validate_general_position",
    "project",
    "simplex_crossings",
    "crossing_count",
    "lk2_projection",
    "lk2_cone",
    "vkf_crossings",
    "vkf_parity",
]


def max_resample():
    """Resample budget, overridable with ``PLINK_MAX_RESAMPLE``."""
    return int(os.environ.get("PLINK_MAX_RESAMPLE", "64"))


@dataclass(frozen=True, eq=False)
class Embedding:
    """Vertex -> exact point in R^dim, linear on every simplex."""

    complex: object
    dim: int
    points: dict
    seed: int = None
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        pts = {}
        for v, p in self.points.items():
            p = tuple(to_fraction(x) for x in p)
            if len(p) != self.dim:
                raise ValueError("point for %r has %d coordinates, expected %d"
                                 % (v, len(p), self.dim))
            pts[v] = p
        object.__setattr__(self, "points", pts)

    def __getitem__(self, v):
        return self.points[v]

    @cached_property
    def integer_points(self):
        """Points scaled by the common denominator (a positive homothety)."""
        keys = sorted(self.points)
        rows, _ = scale_to_integers([self.points[v] for v in keys])
        return {v: tuple(r) for v, r in zip(keys, rows)}

    def __eq__(self, other):
        if not isinstance(other, Embedding):
            return NotImplemented
        return self.dim == other.dim and self.points == other.points

    def _label(self, v):
        K = self.complex
        if K is not None and v in K.labels:
            return K.label(v)
        return str(v)

    def to_dict(self):
        pts = {}
        for v in sorted(self.points):
            pts[self._label(v)] = ["%d/%d" % (x.numerator, x.denominator)
                                   for x in self.points[v]]
        out = {"dim": self.dim, "seed": self.seed, "points": pts}
        if self.provenance:
            out["provenance"] = self.provenance
        return out

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data, K=None):
        pts = {}
        for label, coords in data["points"].items():
            if K is not None:
                v = K.vertex_by_label(label)
            else:
                v = int(label) if label.isdigit() else label
            pts[v] = coords
        return cls(K, data["dim"], pts, data.get("seed"),
                   data.get("provenance", {}))

    @classmethod
    def from_json(cls, text, K=None):
        return cls.from_dict(json.loads(text), K)


def moment_point(t, d):
    return tuple(Fraction(t) ** k for k in range(1, d + 1))


def moment_embedding(K, d, params):
    """Place vertex v at (t_v, t_v^2, ..., t_v^d).

    `params` is a dict vertex -> integer or a sequence aligned with
    ``K.vertices``.
    """
    if not isinstance(params, dict):
        params = dict(zip(K.vertices, params))
    if len(set(params.values())) != len(params):
        raise DuplicateParameter("moment parameters must be distinct")
    missing = set(K.vertices) - set(params)
    if missing:
        raise ValueError("no parameter for vertices %s" % sorted(missing))
    pts = {v: moment_point(params[v], d) for v in K.vertices}
    return Embedding(K, d, pts, None,
                     {"params": {str(v): params[v] for v in K.vertices}})


def unimodular_shear(d, rng, spread=2):
    """Random integer matrix of determinant 1 (lower times upper unitriangular)."""
    low = [[1 if i == j else (rng.randint(-spread, spread) if j < i else 0)
            for j in range(d)] for i in range(d)]
    up = [[1 if i == j else (rng.randint(-spread, spread) if j > i else 0)
           for j in range(d)] for i in range(d)]
    return [[sum(low[i][k] * up[k][j] for k in range(d)) for j in range(d)]
            for i in range(d)]


def _apply(matrix, point):
    return tuple(sum(m * x for m, x in zip(row, point)) for row in matrix)


def _required_orders(K, d, count):
    """(ambient order, projection order or None) validated for K in R^d."""
    ambient = min(d + 1, count)
    proj = None
    if K is not None and d >= 2 * K.n + 1 and d >= 2:
        proj = min(d, count)
    return ambient, proj


def randomized_embedding(K, d, seed, max_attempts=None):
    """Seeded generic embedding of K into R^d.

    Moment parameters are drawn without replacement from
    [-10|V|, 10|V|] in random order, then a unimodular shear is applied.
    General position is checked at order d+1 and, when d >= 2 dim K + 1,
    for the projection to R^(d-1) at order d. Failed attempts resample
    with sub-seed ``"<seed>/<attempt>"``.
    """
    max_attempts = max_resample() if max_attempts is None else max_attempts
    verts = K.vertices
    nv = len(verts)
    ambient, proj = _required_orders(K, d, nv)
    for attempt in range(max_attempts):
        rng = random.Random("%s/%d" % (seed, attempt))
        ts = rng.sample(range(-10 * nv, 10 * nv + 1), nv)
        shear = unimodular_shear(d, rng)
        pts = {v: _apply(shear, moment_point(t, d)) for v, t in zip(verts, ts)}
        if general_position_witness(list(pts.values()), ambient) is not None:
            continue
        if proj is not None:
            shadow = [p[:-1] for p in pts.values()]
            if general_position_witness(shadow, proj) is not None:
                continue
        prov = {"params": {str(v): t for v, t in zip(verts, ts)},
                "shear": shear, "attempt": attempt}
        return Embedding(K, d, pts, seed, prov)
    raise GenericityExhausted(
        "no generic embedding of %r into R^%d after %d attempts"
        % (K, d, max_attempts))


def general_position_witness(points, order, chunk=50000):
    """First subset (as indices) of `order` points that is affinely dependent.

    Returns None when every such subset is affinely independent.
    """
    pts = [tuple(to_fraction(x) for x in p) for p in points]
    if order > len(pts):
        raise ValueError("order %d exceeds %d points" % (order, len(pts)))
    if order <= 1:
        return None
    ipts, _ = scale_to_integers(pts)
    d = len(ipts[0])
    if order > d + 1:
        return tuple(range(order))
    if order == d + 1:
        homog = [[1] + list(p) for p in ipts]
        residues = np.array([[x % PRIME for x in row] for row in homog],
                            dtype=np.int64)
        subsets = combinations(range(len(ipts)), order)
        while True:
            block = list(_take(subsets, chunk))
            if not block:
                return None
            idx = np.array(block, dtype=np.int64)
            ok = nonsingular_mask(residues[idx])
            for row in np.flatnonzero(~ok):
                sub = block[row]
                if bareiss_det([homog[i] for i in sub]) == 0:
                    return tuple(sub)
    for sub in combinations(range(len(ipts)), order):
        base = ipts[sub[0]]
        diffs = [[x - y for x, y in zip(ipts[i], base)] for i in sub[1:]]
        if integer_rank(diffs) < order - 1:
            return sub
    return None


def _take(iterator, count):
    for _, item in zip(range(count), iterator):
        yield item


def validate_general_position(points, order):
    """True iff every `order`-subset of `points` is affinely independent."""
    return general_position_witness(points, order) is None


def project(e):
    """Drop the last coordinate of every point."""
    if e.dim < 1:
        raise ValueError("cannot project a 0-dimensional embedding")
    pts = {v: p[:-1] for v, p in e.points.items()}
    prov = dict(e.provenance)
    prov["projected_from"] = e.dim
    return Embedding(e.complex, e.dim - 1, pts, e.seed, prov)


# -- crossings ---------------------------------------------------------

def _solve_meeting(P, Q, error=DegenerateConfiguration):
    """Intersection of conv(P) and conv(Q), |P| + |Q| = dim + 2.

    Returns None for no crossing or ``(alpha_nums, beta_nums, den)``.
    Raises `error` on a singular system or a zero barycentric coordinate.
    """
    m = len(P[0])
    rows = [[p[c] for p in P] + [-q[c] for q in Q] for c in range(m)]
    rows.append([1] * len(P) + [0] * len(Q))
    rows.append([0] * len(P) + [1] * len(Q))
    sol = solve_integer(rows, [0] * m + [1, 1])
    if sol is None:
        raise error("singular intersection system")
    num, den = sol
    if any(x == 0 for x in num):
        raise error("barycentric coordinate vanishes")
    if all(x > 0 for x in num):
        return num[:len(P)], num[len(P):], den
    return None


@dataclass(frozen=True)
class Crossing:
    sigma_bary: tuple
    tau_bary: tuple
    point: tuple
    over: bool = None

    def to_dict(self):
        fmt = lambda xs: ["%d/%d" % (x.numerator, x.denominator) for x in xs]
        return {"sigma_bary": fmt(self.sigma_bary),
                "tau_bary": fmt(self.tau_bary),
                "point": fmt(self.point),
                "over": self.over}


@dataclass(frozen=True)
class CrossingReport:
    sigma: tuple
    tau: tuple
    crossings: tuple

    @property
    def count(self):
        return len(self.crossings)

    @property
    def omega(self):
        """Number of crossings where tau passes over sigma."""
        return sum(1 for c in self.crossings if c.over)

    def to_dict(self):
        return {"sigma": list(self.sigma), "tau": list(self.tau),
                "crossings": [c.to_dict() for c in self.crossings]}


def simplex_crossings(sigma, tau, e):
    """Double points of the images of two disjoint simplices.

    With ``len(sigma) + len(tau) == e.dim + 2`` the simplices are
    intersected in R^dim directly (over-flags None). With
    ``len(sigma) + len(tau) == e.dim + 1`` they are intersected after
    dropping the last coordinate and the over-flag records whether tau is
    above sigma.
    """
    sigma, tau = tuple(sigma), tuple(tau)
    if set(sigma) & set(tau):
        raise ValueError("simplices must be disjoint")
    total = len(sigma) + len(tau)
    ip = e.integer_points
    if total == e.dim + 2:
        lifted = False
        P = [ip[v] for v in sigma]
        Q = [ip[v] for v in tau]
    elif total == e.dim + 1:
        lifted = True
        P = [ip[v][:-1] for v in sigma]
        Q = [ip[v][:-1] for v in tau]
    else:
        raise ValueError("simplex sizes %d+%d do not match ambient dim %d"
                         % (len(sigma), len(tau), e.dim))
    hit = _solve_meeting(P, Q)
    if hit is None:
        return CrossingReport(sigma, tau, ())
    a, b, den = hit
    alpha = tuple(Fraction(x, den) for x in a)
    beta = tuple(Fraction(x, den) for x in b)
    over = None
    if lifted:
        zs = sum(x * ip[v][-1] for x, v in zip(a, sigma))
        zt = sum(x * ip[v][-1] for x, v in zip(b, tau))
        if zs == zt:
            raise DegenerateConfiguration("lifted heights coincide")
        over = zt > zs
    point = tuple(sum(x * e.points[v][c] for x, v in zip(alpha, sigma))
                  for c in range(e.dim - (1 if lifted else 0)))
    return CrossingReport(sigma, tau, (Crossing(alpha, beta, point, over),))


class _ShadowCache:
    """Per-embedding memo of projected crossings: (sigma, tau) -> upper or None."""

    def __init__(self, e):
        self.e = e
        self.memo = {}
        ip = e.integer_points
        self.flat = {v: p[:-1] for v, p in ip.items()}
        self.height = {v: p[-1] for v, p in ip.items()}

    def upper(self, sigma, tau):
        """None if the shadows miss; otherwise whichever simplex is higher."""
        key = (sigma, tau) if sigma < tau else (tau, sigma)
        if key in self.memo:
            return self.memo[key]
        s, t = key
        hit = _solve_meeting([self.flat[v] for v in s],
                             [self.flat[v] for v in t])
        res = None
        if hit is not None:
            a, b, _ = hit
            zs = sum(x * self.height[v] for x, v in zip(a, s))
            zt = sum(x * self.height[v] for x, v in zip(b, t))
            if zs == zt:
                raise DegenerateConfiguration("lifted heights coincide")
            res = t if zt > zs else s
        self.memo[key] = res
        return res

    def omega(self, sigma, tau):
        return 1 if self.upper(sigma, tau) == tau else 0


def crossing_count(sigma, tau, e):
    return simplex_crossings(sigma, tau, e).count


def _sphere_simplices(g):
    return sorted(getattr(g, "simplices", g))


def lk2_projection(g1, g2, e, cache=None):
    """Z2 linking number as the parity of crossings with g2 over g1."""
    s1, s2 = _sphere_simplices(g1), _sphere_simplices(g2)
    n = len(s1[0]) - 1
    if e.dim != 2 * n + 1:
        raise ValueError("need ambient dimension %d, got %d" % (2 * n + 1, e.dim))
    cache = cache if cache is not None else _ShadowCache(e)
    total = 0
    for s in s1:
        for t in s2:
            total += cache.omega(s, t)
    return total % 2


def _sample_apex(e, rng):
    span = max((abs(x) for p in e.integer_points.values() for x in p), default=1)
    bound = 2 * span + 7
    return tuple(rng.randint(-bound, bound) for _ in range(e.dim))


def lk2_cone(g1, g2, e, apex=None, seed=0):
    """Z2 linking number by intersecting g2 with the cone from an apex over g1.

    `apex` is in the integer-scaled frame of ``e.integer_points`` when
    given explicitly (for integer embeddings this is the original frame).
    If None, apexes are drawn from a seeded generator and resampled on
    :class:`DegenerateApex` up to the resample budget.
    """
    s1, s2 = _sphere_simplices(g1), _sphere_simplices(g2)
    n = len(s1[0]) - 1
    if e.dim != 2 * n + 1:
        raise ValueError("need ambient dimension %d, got %d" % (2 * n + 1, e.dim))
    ip = e.integer_points
    if apex is not None:
        return _cone_parity(s1, s2, ip, tuple(apex))
    rng = random.Random("apex/%s/%s" % (e.seed, seed))
    for _ in range(max_resample()):
        try:
            return _cone_parity(s1, s2, ip, _sample_apex(e, rng))
        except DegenerateApex:
            continue
    raise GenericityExhausted("no generic cone apex found")


def _cone_parity(s1, s2, ip, apex):
    total = 0
    for s in s1:
        P = [apex] + [ip[v] for v in s]
        for t in s2:
            if _solve_meeting(P, [ip[v] for v in t], DegenerateApex):
                total += 1
    return total % 2


def vkf_crossings(K, e):
    """Total double points over unordered disjoint pairs of top simplices."""
    n = K.n
    if e.dim != 2 * n:
        raise ValueError("need ambient dimension %d, got %d" % (2 * n, e.dim))
    ip = e.integer_points
    top = K.faces(n)
    total = 0
    for i, s in enumerate(top):
        ss = set(s)
        P = [ip[v] for v in s]
        for t in top[i + 1:]:
            if ss.isdisjoint(t) and _solve_meeting(P, [ip[v] for v in t]):
                total += 1
    return total


def vkf_parity(K, e):
    return vkf_crossings(K, e) % 2
