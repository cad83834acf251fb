import random
from fractions import Fraction
from itertools import combinations

import pytest

from plink.complex import closure
from plink.constructions import build_K, complete_graph, fold_join, sigma_skeleton
from plink.errors import DegenerateConfiguration, DuplicateParameter
from plink.geometry import (
    Embedding,
    general_position_witness,
    lk2_cone,
    lk2_projection,
    moment_embedding,
    project,
    randomized_embedding,
    simplex_crossings,
    unimodular_shear,
    validate_general_position,
    vkf_crossings,
    vkf_parity,
)
from plink.spheres import SphereSubcomplex

from oracles import planar_crossings, segments_cross, triangle_piercings

TRI_A = [(0, 0, 0), (3, 0, 0), (0, 3, 0)]
TRI_B = [(1, 1, -1), (1, 1, 1), (5, 5, 1)]
G1 = SphereSubcomplex.boundary_of((0, 1, 2))
G2 = SphereSubcomplex.boundary_of((3, 4, 5))
# unimodular; the projection along the old z axis becomes oblique
SHEAR = [[1, 0, 2], [0, 1, 3], [0, 0, 1]]
TWO_TRIANGLES = closure([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def fixture_embedding(a=TRI_A, b=TRI_B):
    return Embedding(TWO_TRIANGLES, 3, dict(enumerate(list(a) + list(b))))


def transform(points, matrix, shift=(0, 0, 0)):
    return [tuple(sum(m * x for m, x in zip(row, p)) + s
                  for row, s in zip(matrix, shift)) for p in points]


# -- embeddings --------------------------------------------------------

def test_moment_points():
    K = closure([(0, 1, 2)])
    e = moment_embedding(K, 2, [0, 1, 2])
    assert [e[v] for v in range(3)] == [(0, 0), (1, 1), (2, 4)]
    assert validate_general_position(list(e.points.values()), 3)


def test_moment_k6_in_r3():
    K6 = complete_graph(6)
    e = moment_embedding(K6, 3, range(6))
    pts = list(e.points.values())
    assert validate_general_position(pts, 4)
    # independent check: every 4-subset spans a tetrahedron of nonzero volume
    for a, b, c, d in combinations(pts, 4):
        u, v, w = [[x - y for x, y in zip(p, a)] for p in (b, c, d)]
        det = (u[0] * (v[1] * w[2] - v[2] * w[1])
               - u[1] * (v[0] * w[2] - v[2] * w[0])
               + u[2] * (v[0] * w[1] - v[1] * w[0]))
        assert det != 0


def test_shifted_params_stay_generic():
    K6 = complete_graph(6)
    for shift in (-7, 3, 100):
        e = moment_embedding(K6, 3, [t + shift for t in range(6)])
        assert validate_general_position(list(e.points.values()), 4)


def test_duplicate_parameters_rejected():
    with pytest.raises(DuplicateParameter):
        moment_embedding(complete_graph(3), 2, [1, 1, 2])


def test_same_seed_same_embedding():
    K, _ = build_K(1)
    a = randomized_embedding(K, 3, 42)
    b = randomized_embedding(K, 3, 42)
    assert a == b and a.to_json() == b.to_json()
    assert randomized_embedding(K, 3, 43) != a


def test_identity_shear_is_moment_curve():
    class Fixed:
        def randint(self, lo, hi):
            return 0
    assert unimodular_shear(4, Fixed()) == [
        [int(i == j) for j in range(4)] for i in range(4)]


def test_shear_is_unimodular():
    from plink.exact import bareiss_det
    rng = random.Random(9)
    for d in (2, 3, 5, 7):
        assert bareiss_det(unimodular_shear(d, rng)) == 1


def test_thousand_seeds_never_exhaust():
    K, _ = build_K(2)
    for seed in range(1000):
        randomized_embedding(K, 5, seed)


def test_coplanar_witness():
    pts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]
    assert not validate_general_position(pts, 4)
    assert general_position_witness(pts, 4) == (0, 1, 2, 3)
    assert validate_general_position(pts[:3] + pts[4:], 4)


def test_deliberate_dependency_lower_order():
    pts = [(0, 0, 0, 0), (1, 2, 3, 4), (2, 4, 6, 8), (5, 1, 0, 2)]
    assert general_position_witness(pts, 3) == (0, 1, 2)


def test_embedding_json_round_trip():
    K, _ = build_K(1)
    e = randomized_embedding(K, 3, 5)
    back = Embedding.from_json(e.to_json(), K)
    assert back == e
    assert all(isinstance(x, Fraction) for p in back.points.values() for x in p)


def test_project():
    e = moment_embedding(closure([(0, 1, 2)]), 3, [1, 2, 3])
    p = project(e)
    assert p.dim == 2 and p[0] == (1, 1) and p[2] == (3, 9)


# -- crossings ---------------------------------------------------------

def test_segment_crossing():
    K = closure([(0, 1), (2, 3)])
    e = Embedding(K, 2, {0: (0, 0), 1: (2, 2), 2: (0, 2), 3: (2, 0)})
    rep = simplex_crossings((0, 1), (2, 3), e)
    assert rep.count == 1
    c = rep.crossings[0]
    half = Fraction(1, 2)
    assert c.sigma_bary == (half, half) and c.tau_bary == (half, half)
    assert c.point == (1, 1)


def test_far_simplices_do_not_cross():
    K = closure([(0, 1), (2, 3)])
    e = Embedding(K, 2, {0: (0, 0), 1: (1, 0), 2: (50, 50), 3: (51, 53)})
    assert simplex_crossings((0, 1), (2, 3), e).count == 0


def test_touching_is_degenerate():
    K = closure([(0, 1), (2, 3)])
    e = Embedding(K, 2, {0: (0, 0), 1: (2, 2), 2: (1, 1), 3: (2, 0)})
    with pytest.raises(DegenerateConfiguration):
        simplex_crossings((0, 1), (2, 3), e)


def test_convex_k5_five_crossings():
    K5 = complete_graph(5)
    e = moment_embedding(K5, 2, [0, 1, 3, 7, 12])
    assert vkf_crossings(K5, e) == 5
    assert planar_crossings(K5.faces(1), e.points) == 5
    assert vkf_parity(K5, e) == 1


@pytest.mark.parametrize("seed", range(20))
def test_k33_drawings_match_orientation_oracle(seed):
    K33 = fold_join(3, 2)
    e = randomized_embedding(K33, 2, seed)
    expected = planar_crossings(K33.faces(1), e.points)
    assert vkf_crossings(K33, e) == expected
    assert expected % 2 == 1


def test_k5_random_drawings_match_oracle():
    # general position of points does not exclude parallel edges, which
    # are reported as degenerate; count those and check the rest
    K5 = complete_graph(5)
    checked = degenerate = 0
    for seed in range(40):
        e = randomized_embedding(K5, 2, seed)
        try:
            got = vkf_crossings(K5, e)
        except DegenerateConfiguration:
            degenerate += 1
            continue
        assert got == planar_crossings(K5.faces(1), e.points)
        checked += 1
    assert checked >= 20


# -- linking -----------------------------------------------------------

def test_linked_triangles_vertical_projection_is_degenerate():
    # B has two vertices on one vertical line, so dropping z is not generic
    with pytest.raises(DegenerateConfiguration):
        lk2_projection(G1, G2, fixture_embedding())


def test_linked_triangles_piercing_oracle():
    assert triangle_piercings(TRI_A, TRI_B) == 1
    assert triangle_piercings(TRI_B, TRI_A) == 1


def test_linked_triangles_cone():
    e = fixture_embedding()
    assert lk2_cone(G1, G2, e) == 1
    assert lk2_cone(G2, G1, e) == 1


def test_linked_triangles_after_shear():
    e = fixture_embedding(transform(TRI_A, SHEAR), transform(TRI_B, SHEAR))
    assert lk2_projection(G1, G2, e) == 1
    assert lk2_cone(G1, G2, e) == 1


def test_translated_triangles_unlinked():
    far = [(x + 100, y + 100, z + 100) for x, y, z in TRI_B]
    e = fixture_embedding(TRI_A, far)
    assert lk2_cone(G1, G2, e) == 0
    assert triangle_piercings(TRI_A, far) == 0
    e = fixture_embedding(transform(TRI_A, SHEAR), transform(far, SHEAR))
    assert lk2_projection(G1, G2, e) == 0


@pytest.mark.parametrize("seed", range(25))
def test_random_triangle_pairs_match_oracle(seed):
    K6 = complete_graph(6)
    e = randomized_embedding(K6, 3, seed)
    pts = e.points
    for a in combinations(range(6), 3):
        b = tuple(v for v in range(6) if v not in a)
        if a > b:
            continue
        g, h = SphereSubcomplex.boundary_of(a), SphereSubcomplex.boundary_of(b)
        expected = triangle_piercings([pts[v] for v in a],
                                      [pts[v] for v in b]) % 2
        assert lk2_projection(g, h, e) == expected
        assert lk2_projection(h, g, e) == expected
        assert lk2_cone(g, h, e) == expected


def test_projection_parity_is_half_the_crossings():
    # every crossing is over in exactly one direction, so omega + omega' is
    # the crossing count, which is even for two closed curves in the plane
    from plink.geometry import _ShadowCache
    K6 = complete_graph(6)
    e = randomized_embedding(K6, 3, 77)
    cache = _ShadowCache(e)
    g, h = SphereSubcomplex.boundary_of((0, 2, 4)), SphereSubcomplex.boundary_of((1, 3, 5))
    total = sum(1 for s in g.simplices for t in h.simplices
                if cache.upper(s, t) is not None)
    w = sum(cache.omega(s, t) for s in g.simplices for t in h.simplices)
    w2 = sum(cache.omega(t, s) for s in g.simplices for t in h.simplices)
    assert w + w2 == total and total % 2 == 0
    assert w % 2 == w2 % 2 == lk2_projection(g, h, e)


@pytest.mark.parametrize("seed", range(10))
def test_affine_invariance(seed):
    K, _ = build_K(2)
    e = randomized_embedding(K, 5, seed)
    g = SphereSubcomplex.boundary_of((0, 1, 4, 7))
    h = SphereSubcomplex(frozenset({(2, 5, 8), (3, 5, 8), (2, 6, 8), (3, 6, 8),
                                    (2, 5, 9), (3, 5, 9), (2, 6, 9), (3, 6, 9)}),
                         "octahedron")
    rng = random.Random(seed)
    shear = unimodular_shear(5, rng)
    shift = [rng.randint(-50, 50) for _ in range(5)]
    moved = Embedding(K, 5, {v: tuple(
        sum(m * x for m, x in zip(row, p)) + s for row, s in zip(shear, shift))
        for v, p in e.points.items()})
    assert lk2_cone(g, h, moved) == lk2_cone(g, h, e) == lk2_projection(g, h, e)


def test_vkf_skeleton_and_join():
    S = sigma_skeleton(6, 2)
    for seed in range(3):
        assert vkf_parity(S, randomized_embedding(S, 4, seed)) == 1
    J = fold_join(3, 3)
    assert vkf_parity(J, randomized_embedding(J, 4, 0)) == 1


def test_orientation_oracle_sanity():
    assert segments_cross((0, 0), (2, 2), (0, 2), (2, 0))
    assert not segments_cross((0, 0), (1, 0), (0, 1), (1, 1))
