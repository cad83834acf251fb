import pytest

from plink.complex import closure
from plink.constructions import (
    build_K,
    complete_graph,
    fold_join,
    petersen_graph,
    sigma_skeleton,
)
from plink.geometry import Embedding, randomized_embedding
from plink.linking import (
    PairFamily,
    disjoint_pairs,
    exists_linked,
    lambda_cycles,
    lambda_pattern,
    linking_numbers,
    parity_sum,
    simple_cycles,
    trial_seed,
    verify_theorem,
)
from plink.spheres import SpherePair, SphereSubcomplex, is_z2_sphere

from oracles import brute_cycle_pairs


def split_tetrahedra(offset=1000):
    """Two boundaries of 3-simplices separated by a hyperplane in R^5."""
    K = closure([s for vs in ((0, 1, 2, 3), (4, 5, 6, 7))
                 for s in SphereSubcomplex.boundary_of(vs).simplices])
    pts = {}
    for v in range(8):
        t = v + 1
        pts[v] = [t + (offset if v >= 4 else 0), t ** 2, t ** 3, t ** 4, t ** 5]
    return K, Embedding(K, 5, pts)


def test_z2_sphere_examples():
    assert is_z2_sphere(SphereSubcomplex.boundary_of(range(4)).simplices)
    assert not is_z2_sphere({(0, 1, 2)})
    # two disjoint triangles are a cycle but not connected
    two = {(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)}
    assert not is_z2_sphere(two)
    assert is_z2_sphere({(0, 1), (1, 2), (2, 3), (0, 3)})


def test_pattern_sizes():
    K2, idx = build_K(2)
    fam = lambda_pattern(K2)
    assert len(fam) == 27 and fam.validate()
    for p in fam:
        kinds = {g.kind for g in p.components()}
        assert kinds == {"tetrahedron", "octahedron"}
        tet = next(g for g in p.components() if g.kind == "tetrahedron")
        assert idx.apex in tet.vertices
    assert len(lambda_pattern(sigma_skeleton(7, 2))) == 35
    assert len(lambda_pattern(complete_graph(6))) == 10


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pattern_size_k_n(n):
    K, _ = build_K(n)
    assert len(lambda_pattern(K)) == 3 ** (n + 1)


def test_each_tetra_has_one_complementary_octa():
    K2, _ = build_K(2)
    fam = lambda_pattern(K2)
    tets = [next(g for g in p.components() if g.kind == "tetrahedron")
            for p in fam]
    assert len(set(tets)) == 27


@pytest.mark.parametrize("G", [complete_graph(6), fold_join(4, 2), petersen_graph(),
                               build_K(1)[0], fold_join(3, 2)],
                         ids=["K6", "K44", "petersen", "K331", "K33"])
def test_cycle_pairs_match_subset_scan(G):
    fam = lambda_cycles(G)
    assert len(fam) == brute_cycle_pairs(G.faces(1))
    assert fam.validate()


def test_cycle_counts():
    assert len(simple_cycles(complete_graph(4))) == 7
    assert len(simple_cycles(fold_join(3, 2))) == 15
    assert len(lambda_cycles(complete_graph(6))) == 10


def test_pattern_inside_cycles_at_n1():
    for G in (complete_graph(6), build_K(1)[0], fold_join(4, 2)):
        assert lambda_pattern(G).keys() <= lambda_cycles(G).keys()


def test_pair_ordering_is_canonical():
    a = SphereSubcomplex.boundary_of((0, 1, 2))
    b = SphereSubcomplex.boundary_of((3, 4, 5))
    assert SpherePair(a, b) == SpherePair(b, a)
    assert len(disjoint_pairs([a, b, a])) == 1


def test_split_pair():
    K, e = split_tetrahedra()
    fam = lambda_pattern(K)
    assert len(fam) == 1
    assert parity_sum(fam, e) == 0
    assert exists_linked(fam, e) == (False, None)


@pytest.mark.parametrize("n", [1, 2])
def test_parity_on_K_n(n):
    K, _ = build_K(n)
    fam = lambda_pattern(K)
    for s in range(5):
        e = randomized_embedding(K, 2 * n + 1, trial_seed(3, s))
        assert parity_sum(fam, e) == 1
        found, witness = exists_linked(fam, e)
        assert found and witness in fam.pairs


def test_linking_numbers_order():
    K = complete_graph(6)
    fam = lambda_pattern(K)
    e = randomized_embedding(K, 3, 1)
    vals = linking_numbers(fam, e)
    assert len(vals) == 10 and sum(vals) % 2 == 1


def test_k44_cycles_exist_linked():
    G = fold_join(4, 2)
    fam = lambda_cycles(G)
    for s in range(10):
        found, _ = exists_linked(fam, randomized_embedding(G, 3, s))
        assert found


def test_verify_newil_example():
    rep = verify_theorem("newil", 2, 50, 7)
    assert rep.results == [1] * 50 and rep.ok and not rep.violations


def test_verify_cgs_example():
    rep = verify_theorem("cgs", 1, 50, 7)
    assert rep.results == [1] * 50
    assert rep.details["targets"][0]["pairs"] == 10


def test_oldil1_at_n1_is_cgs():
    a = verify_theorem("oldil1", 1, 10, 4)
    b = verify_theorem("cgs", 1, 10, 4)
    assert a.results == b.results == [1] * 10


def test_report_json_deterministic():
    a = verify_theorem("cgs", 1, 5, 11).to_json(timing=False)
    b = verify_theorem("cgs", 1, 5, 11).to_json(timing=False)
    assert a == b


def test_jobs_do_not_change_results():
    a = verify_theorem("newil", 1, 6, 2)
    b = verify_theorem("newil", 1, 6, 2, jobs=2)
    assert a.to_json(timing=False) == b.to_json(timing=False)


def test_unknown_theorem():
    with pytest.raises(ValueError):
        verify_theorem("nope")


def test_family_validate_rejects_foreign_sphere():
    K = complete_graph(6)
    bogus = SpherePair(SphereSubcomplex.boundary_of((0, 1, 2)),
                       SphereSubcomplex.boundary_of((3, 4, 9)))
    assert not PairFamily(K, (bogus,)).validate()
