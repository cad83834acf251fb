import random
from itertools import combinations

from hypothesis import given, settings, strategies as st

from plink.canonical import canonicalize, is_isomorphic
from plink.complex import SimplicialComplex
from plink.constructions import (
    build_H,
    build_K,
    complete_graph,
    fold_join,
    kneser_graph,
    sigma_skeleton,
)
from plink.deltay import build_P

from oracles import brute_isomorphic


def relabel(K, perm):
    return SimplicialComplex([tuple(perm[v] for v in s) for s in K.maximal])


def random_relabel(K, rng):
    vs = list(K.vertices)
    targets = list(range(len(vs)))
    rng.shuffle(targets)
    return relabel(K, dict(zip(vs, targets)))


def test_digest_is_hex():
    d = canonicalize(complete_graph(6)).digest
    assert len(d) == 64 and d == d.lower()
    int(d, 16)


def test_k6_relabel_invariant():
    K6 = complete_graph(6)
    rng = random.Random(0)
    assert canonicalize(random_relabel(K6, rng)).digest == canonicalize(K6).digest


def test_petersen_models_agree():
    assert canonicalize(build_P(1)).digest == canonicalize(kneser_graph(5, 2)).digest


def test_different_complexes_differ():
    assert canonicalize(complete_graph(6)).digest != \
        canonicalize(build_K(1)[0]).digest
    assert not is_isomorphic(sigma_skeleton(5, 1), build_K(1)[0])


def test_is_isomorphic_examples():
    K, _ = build_K(2)
    assert is_isomorphic(K, K)
    assert is_isomorphic(build_H(1), fold_join(3, 2))


def test_permutation_is_relabeling():
    K, _ = build_K(1)
    cf = canonicalize(K)
    image = sorted(tuple(sorted(cf.permutation[v] for v in s)) for s in K.maximal)
    assert tuple(image) == cf.simplices


def test_hundred_permutations_each():
    rng = random.Random(11)
    for K in (complete_graph(6), build_K(1)[0], build_K(2)[0], build_P(1),
              build_P(2), fold_join(3, 3), sigma_skeleton(7, 2)):
        ref = canonicalize(K).digest
        for _ in range(100):
            assert canonicalize(random_relabel(K, rng)).digest == ref


def _random_complex(rng, nv, count, dim):
    gens = [tuple(sorted(rng.sample(range(nv), dim + 1))) for _ in range(count)]
    return SimplicialComplex(gens, {v: str(v) for v in range(nv)})


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(3, 7), st.integers(1, 9),
       st.integers(1, 2))
def test_matches_bruteforce_small(seed, nv, count, dim):
    rng = random.Random(seed)
    K = _random_complex(rng, nv, count, min(dim, nv - 1))
    L = _random_complex(rng, nv, count, min(dim, nv - 1)) if seed % 3 else \
        random_relabel(K, rng)
    assert is_isomorphic(K, L) == brute_isomorphic(K, L)


def test_bruteforce_agreement_on_graphs_with_8_vertices():
    rng = random.Random(5)
    edges = list(combinations(range(8), 2))
    for _ in range(40):
        k = rng.randint(6, 14)
        K = SimplicialComplex(rng.sample(edges, k), {v: str(v) for v in range(8)})
        L = SimplicialComplex(rng.sample(edges, k), {v: str(v) for v in range(8)})
        assert is_isomorphic(K, L) == brute_isomorphic(K, L)
        M = random_relabel(K, rng)
        assert is_isomorphic(K, M) and brute_isomorphic(K, M)
