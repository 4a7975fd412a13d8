import random

import pytest

from indroots.canon import canonical_key
from indroots.engine import indpoly
from indroots.enumeration import rooted_trees, trees
from indroots.families import (
    FamilyError,
    FamilySpec,
    build_s3_s5,
    build_s4,
    complete,
    complete_bipartite,
    corona,
    cycle,
    d_n,
    dagger_swap,
    dagger_targets,
    g_2n,
    g_gkl,
    m_n,
    make,
    path,
    star,
    star_swap,
    t1,
    t2,
    u_n,
)
from indroots.graph import Graph, girth, induced_subgraph, is_connected, is_unicyclic, leaves
from indroots.instances import random_dagger_instance, random_star_swap_instance
from indroots.order import is_equivalent, is_preceq
from indroots.poly import Poly, format_poly
from indroots.wellcovered import (
    is_very_well_covered,
    is_well_covered,
    pendant_edges_perfect_matching,
    wellcovered_branch,
)


def test_make_examples():
    assert is_equivalent(make("u_n:4"), cycle(4))
    assert is_equivalent(make("d_n:6"), cycle(6))
    assert format_poly(indpoly(make("g_2n:5"))) == "1 + 10x + 36x^2 + 59x^3 + 45x^4 + 13x^5"
    assert indpoly(make("g_gkl:3,2,1")) == indpoly(make("g_gkl:3,3,0"))


@pytest.mark.parametrize("n", range(4, 15))
def test_orders_and_sizes(n):
    assert (d_n(n).n, d_n(n).m) == (n, n)
    assert (u_n(n).n, u_n(n).m) == (n, n)
    assert max(u_n(n).degrees()) == n - 1
    D = d_n(n)
    assert is_unicyclic(D) and girth(D) == 3 and len(leaves(D)) == 1
    G = path(n)
    assert corona(G).n == 2 * n
    if n >= 5:
        assert g_2n(n).n == 2 * n


def test_g_gkl_orders():
    for g in (3, 5):
        for k in range(4):
            for l in range(4):
                if k + l:
                    G = g_gkl(g, k, l)
                    assert G.n == g + 2 * (k + l)
                    assert is_unicyclic(G) and girth(G) == g
                    assert is_well_covered(G)


@pytest.mark.parametrize("n", range(4, 21))
def test_u_n_closed_form(n):
    want = Poly((1, 2)) * Poly((1, 1)) ** (n - 3) + Poly((0, 1))
    assert indpoly(u_n(n)) == want


@pytest.mark.parametrize("n", range(5, 13))
def test_g_2n_matches_corona_of_path(n):
    assert indpoly(g_2n(n)) == indpoly(corona(path(n)))


def test_g_2n_vertex_v4_has_no_leaf():
    G = g_2n(5)
    assert not any(G.degree(w) == 1 for w in G.neighbors(3))
    assert not pendant_edges_perfect_matching(G)


def test_minimal_odd_family_shares_one_polynomial():
    for order in range(5, 18, 2):
        t = (order - 3) // 2
        polys = {indpoly(g_gkl(3, k, t - k)) for k in range(t + 1)}
        t5 = (order - 5) // 2
        polys |= {indpoly(g_gkl(5, k, t5 - k)) for k in range(t5 + 1)} if t5 >= 1 else set()
        assert len(polys) == 1, order


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13])
def test_m_n_structure(n):
    G = m_n(n)
    assert G.n == n and is_unicyclic(G) and girth(G) == 3
    legs = [v for v in G.neighbors(0) if v >= 3]
    assert len(legs) == (n - 3) // 2
    assert all(G.degree(v) == 2 for v in legs)


def test_t1_t2_literal_edges():
    assert sorted(t1().edges()) == [(0, 1), (0, 5), (1, 2), (1, 3), (1, 4), (5, 6), (5, 7)]
    assert sorted(t2().edges()) == [(0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (4, 6), (5, 7)]
    assert sorted(t1().degrees()) == [1, 1, 1, 1, 1, 2, 3, 4]
    assert sorted(t2().degrees()) == [1, 1, 1, 1, 2, 2, 2, 4]


def test_corona_examples():
    assert canonical_key(corona(complete(1))) == canonical_key(path(2))
    assert is_equivalent(corona(path(5)), g_2n(5))
    C = corona(cycle(6))
    assert is_well_covered(C) and is_very_well_covered(C)
    for G in (path(4), star(5), complete(4), complete_bipartite(2, 3)):
        H = corona(G)
        assert H.n == 2 * G.n and pendant_edges_perfect_matching(H)


def test_star_swap_spider():
    # spider with legs 2, 1, 1 around centre 0
    G = Graph.from_edges(5, [(0, 1), (1, 2), (0, 3), (0, 4)])
    H = star_swap(G, 2, 0, 3)
    assert len(leaves(H)) == len(leaves(G)) - 1
    assert canonical_key(H) == canonical_key(path(5))
    assert is_preceq(H, G)


def test_star_swap_preconditions():
    G = Graph.from_edges(5, [(0, 1), (1, 2), (0, 3), (0, 4)])
    with pytest.raises(FamilyError, match="path"):
        star_swap(G, 2, 0, 1)
    with pytest.raises(FamilyError, match="leaf"):
        star_swap(G, 1, 0, 3)
    with pytest.raises(FamilyError, match="nearest"):
        star_swap(G, 2, 1, 0)
    with pytest.raises(FamilyError, match="neighbour"):
        star_swap(G, 2, 0, 2)


def test_star_swap_random_instances():
    rng = random.Random(3)
    for _ in range(200):
        G, u, v, w = random_star_swap_instance(rng)
        H = star_swap(G, u, v, w)
        assert len(leaves(H)) == len(leaves(G)) - 1
        assert is_connected(H) == is_connected(G)
        assert is_preceq(H, G)


def test_dagger_random_instances_keep_branch():
    rng = random.Random(4)
    for _ in range(100):
        G, u, v, w, x = random_dagger_instance(rng)
        H = dagger_swap(G, u, v, w, x)
        assert is_preceq(H, G)
        S = wellcovered_branch(H, x)
        assert S is not None and S == wellcovered_branch(G, x)
        if G.n <= 18 and is_well_covered(G):
            assert is_well_covered(H)


def _dagger_moves(G, x):
    S = wellcovered_branch(G, x)
    out = []
    for u in sorted(S or ()):
        try:
            _, v, _ = dagger_targets(G, u, x)
        except FamilyError:
            continue
        for w in sorted(G.neighbors(v)):
            try:
                out.append(dagger_swap(G, u, v, w, x))
            except FamilyError:
                pass
    return out


def test_iterated_dagger_ends_in_caterpillar():
    rng = random.Random(8)
    for _ in range(25):
        G, u, v, w, x = random_dagger_instance(rng)
        while True:
            moves = _dagger_moves(G, x)
            if not moves:
                break
            assert is_preceq(moves[0], G)
            G = moves[0]
        S = wellcovered_branch(G, x)
        B = induced_subgraph(G, [a for a in S if a != x])
        assert sum(G.degree(a) == 2 for a in S if a != x) == 1
        assert canonical_key(B) == canonical_key(corona(path(B.n // 2)))


def test_dagger_preconditions():
    G, u, v, w, x = random_dagger_instance(random.Random(0))
    with pytest.raises(FamilyError):
        dagger_swap(G, x, v, w, x)
    leaf = next(a for a in range(G.n) if G.degree(a) == 1)
    with pytest.raises(FamilyError, match="degree-2"):
        dagger_swap(G, leaf, v, w, x)
    # caterpillar branches have a single degree-2 vertex, so no swap applies
    with pytest.raises(FamilyError, match="two vertices of degree 2"):
        dagger_swap(g_gkl(3, 3, 0), 7, 5, 6, 0)


def test_dagger_without_explicit_root():
    G, u, v, w, x = random_dagger_instance(random.Random(12))
    assert indpoly(dagger_swap(G, u, v, w)) == indpoly(dagger_swap(G, u, v, w, x))


def test_build_s4():
    T = path(4)
    G = build_s4(T, 1, 2)
    assert G.n == 6 and is_unicyclic(G) and girth(G) == 4
    assert G.has_edge(4, 1) and G.has_edge(5, 2) and G.has_edge(4, 5)
    assert is_well_covered(G)
    with pytest.raises(FamilyError, match="pendant"):
        build_s4(corona(star(3)), 1, 4)
    with pytest.raises(FamilyError, match="well-covered"):
        build_s4(path(5), 1, 2)
    with pytest.raises(FamilyError, match="not an edge"):
        build_s4(T, 0, 2)


def test_build_s4_over_coronas():
    for n in range(2, 6):
        for T in trees(n):
            C = corona(T)
            for a, b in C.edges():
                if C.degree(a) > 1 and C.degree(b) > 1:
                    G = build_s4(C, a, b)
                    assert G.n == 2 * n + 2 and is_well_covered(G)


def test_build_s3_s5_examples():
    G = build_s3_s5(3, {0: [(complete(1), 0)]})
    assert canonical_key(G) == canonical_key(g_gkl(3, 1, 0))
    assert is_well_covered(G)
    with pytest.raises(FamilyError, match="nonadjacent"):
        build_s3_s5(5, {0: [(complete(1), 0)], 1: [(complete(1), 0)]})
    with pytest.raises(FamilyError, match="leaf"):
        build_s3_s5(3, {0: [(path(2), 3)]})
    with pytest.raises(FamilyError, match="at least one"):
        build_s3_s5(3, {})
    with pytest.raises(FamilyError, match="3 or 5"):
        build_s3_s5(4, {0: [(complete(1), 0)]})


def test_build_s3_s5_two_branches_well_covered():
    rng = random.Random(9)
    pool = [(R, r) for m in range(1, 4) for R, r in rooted_trees(m)]
    done = 0
    while done < 40:
        g = rng.choice((3, 5))
        c2 = 1 if g == 3 else 2
        a, b = rng.choice(pool), rng.choice(pool)
        G = build_s3_s5(g, {0: [a], c2: [b]})
        if G.n > 13:
            continue
        assert is_unicyclic(G) and is_well_covered(G)
        done += 1


def test_family_spec_parsing():
    assert FamilySpec.parse("g_gkl:3,2,1") == FamilySpec("g_gkl", (3, 2, 1))
    assert str(FamilySpec.parse("u_n:7")) == "u_n:7"
    assert make("t1").n == 8
    with pytest.raises(FamilyError, match="unknown family"):
        FamilySpec.parse("petersen")
    with pytest.raises(FamilyError, match="integers"):
        FamilySpec.parse("path:x")
    with pytest.raises(FamilyError, match="parameter"):
        make("g_gkl:3,1")


@pytest.mark.parametrize("spec, needle", [
    ("path:0", "n >= 1"), ("cycle:2", "n >= 3"), ("d_n:3", "n >= 4"), ("u_n:3", "n >= 4"),
    ("m_n:8", "odd"), ("g_gkl:4,1,0", "g in"), ("g_gkl:3,0,0", r"k \+ l > 0"), ("g_2n:4", "n >= 5"),
])
def test_domain_errors_name_constraint(spec, needle):
    with pytest.raises(FamilyError, match=needle):
        make(spec)
