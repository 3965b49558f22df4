import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramsey_witness.catalog import connected_graphs
from ramsey_witness.families import (
    SINGLE_PARAMETER_KINDS,
    FamilySpec,
    Witness,
    contains_induced,
    generate,
    max_family_parameter,
    verify_embedding,
)
from ramsey_witness.graph import Graph, is_connected
from ramsey_witness.invariants import induced_matching_number, matching_number

from oracles import brute_contains_induced
from test_graph import complete, cycle, graphs, path

# the eight named single-parameter kinds
NAMED = [k for k in SINGLE_PARAMETER_KINDS if not k.startswith("General")]
K2 = complete(2)
P1 = path(1)


def spec_of(kind, n, l=1):
    if kind in ("HairyClique", "Spider"):
        return FamilySpec(kind, n, l=l)
    return FamilySpec(kind, n)


def expected_order(kind, n, l):
    return {
        "Path": n,
        "Clique": n,
        "Star": n + 1,
        "Biclique": 2 * n,
        "HairyClique": n * (l + 1),
        "TriangleClique": 3 * n,
        "Spider": n * l + 1,
        "Friendship": 2 * n + 1,
    }[kind]


@pytest.mark.parametrize("kind", NAMED)
def test_orders(kind):
    for n in range(1, 9):
        for l in range(1, 4):
            g = generate(spec_of(kind, n, l))
            assert g.order == expected_order(kind, n, l)
            assert is_connected(g)


def test_generate_examples():
    assert generate(FamilySpec.hairy(2, 1)) == Graph.from_edges(4, [(0, 1), (0, 2), (1, 3)])
    f2 = generate(FamilySpec.friendship(2))
    assert f2.order == 5 and f2.degree(0) == 4 and f2.edges() == [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]
    assert generate(FamilySpec.spider(3, 1)) == generate(FamilySpec.star(3))
    broom = generate(FamilySpec("GeneralBroom", l=1, pattern=K2, attach=(0, 1)))
    assert broom == complete(3)


def test_biclique_sides():
    g = generate(FamilySpec.biclique(2, 3))
    assert g.order == 5 and g.size == 6
    assert not g.adjacent(0, 1) and g.adjacent(0, 2) and not g.adjacent(2, 4)


def test_broom_handle():
    # P_3 with X = {1}: handle 0-1-2, then 2 joined to the middle of H
    g = generate(FamilySpec("GeneralBroom", l=3, pattern=path(3), attach=(1,)))
    assert g.order == 6
    assert g.edges() == [(0, 1), (1, 2), (2, 4), (3, 4), (4, 5)]


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("l", range(1, 4))
def test_general_identities(n, l):
    assert generate(FamilySpec("GeneralHairy", n, l=l, pattern=P1, attach=(0,))) == generate(FamilySpec.hairy(n, l))
    assert generate(FamilySpec("GeneralStar", n, l=l, pattern=P1, attach=(0,))) == generate(FamilySpec.spider(n, l))
    if l == 1:
        assert generate(FamilySpec("GeneralHairy", n, l=1, pattern=K2, attach=(0, 1))) == generate(
            FamilySpec.triangles(n)
        )
        assert generate(FamilySpec("GeneralStar", n, l=1, pattern=K2, attach=(0, 1))) == generate(
            FamilySpec.friendship(n)
        )


def test_general_orders():
    h = cycle(4)
    for n in range(1, 5):
        for l in range(1, 4):
            gh = generate(FamilySpec("GeneralHairy", n, l=l, pattern=h, attach=(0, 2)))
            gs = generate(FamilySpec("GeneralStar", n, l=l, pattern=h, attach=(0, 2)))
            assert gh.order == n + n * (l - 1 + 4)
            assert gs.order == 1 + n * (l - 1 + 4)
            assert is_connected(gh) and is_connected(gs)


@pytest.mark.parametrize(
    "bad",
    [
        dict(kind="Path", n=0),
        dict(kind="Nope", n=1),
        dict(kind="HairyClique", n=2),
        dict(kind="Spider", n=2, l=0),
        dict(kind="GeneralStar", n=2, l=1, pattern=Graph.from_edges(2, []), attach=(0,)),
        dict(kind="GeneralStar", n=2, l=1, pattern=K2, attach=()),
        dict(kind="GeneralStar", n=2, l=1, pattern=K2, attach=(2,)),
    ],
)
def test_invalid_specs(bad):
    with pytest.raises(ValueError):
        FamilySpec(**bad)


@pytest.mark.parametrize("kind", NAMED)
def test_monotone_nesting(kind):
    for l in (1, 2):
        for n in range(2, 7):
            big = generate(spec_of(kind, n, l))
            small = generate(spec_of(kind, n - 1, l))
            assert contains_induced(big, small) is not None


def test_lower_bounds_hold():
    for n in range(1, 6):
        for spec in (FamilySpec.hairy(n, 2), FamilySpec.triangles(n), FamilySpec.spider(n, 2), FamilySpec.friendship(n)):
            g = generate(spec)
            assert is_connected(g)
            assert induced_matching_number(g)[0] >= (n - 1) / 3
        for spec in (FamilySpec.path(n), FamilySpec.clique(n), FamilySpec.biclique(n), FamilySpec.spider(n, 2), FamilySpec.friendship(n)):
            assert matching_number(generate(spec)) >= (n - 1) / 2


def test_contains_examples():
    assert contains_induced(path(5), path(3)) is not None
    assert contains_induced(complete(4), path(3)) is None
    two_k2 = Graph.from_edges(4, [(0, 1), (2, 3)])
    emb = contains_induced(cycle(6), two_k2)
    assert emb is not None
    c6 = cycle(6)
    assert c6.adjacent(emb[0], emb[1]) and c6.adjacent(emb[2], emb[3])
    assert not any(c6.adjacent(u, v) for u in emb[:2] for v in emb[2:])


def test_contains_induced_matches_permutations():
    rng = random.Random(5)
    hosts = [g for g in connected_graphs(8) if rng.random() < 0.02]
    patterns = list(connected_graphs(5))
    patterns.append(Graph.from_edges(4, [(0, 1), (2, 3)]))
    patterns.append(Graph.from_edges(3, []))
    for host in hosts:
        for pat in rng.sample(patterns, 6):
            emb = contains_induced(host, pat)
            assert (emb is not None) == brute_contains_induced(host, pat)
            if emb is not None:
                assert len(set(emb)) == pat.order
                for p in range(pat.order):
                    for q in range(p + 1, pat.order):
                        assert pat.adjacent(p, q) == host.adjacent(emb[p], emb[q])


@settings(max_examples=120, deadline=None)
@given(graphs(max_order=8), st.integers(1, 5))
def test_contains_induced_property(host, k):
    pats = list(connected_graphs(min(k, 5), min(k, 5)))
    pat = pats[len(pats) // 2]
    assert (contains_induced(host, pat) is not None) == brute_contains_induced(host, pat)


def test_max_parameter_examples():
    assert max_family_parameter(complete(7), "Clique")[0] == 7
    assert max_family_parameter(path(9), "Path")[0] == 9
    n, w = max_family_parameter(generate(FamilySpec.friendship(3)), "Friendship")
    assert n == 3 and verify_embedding(generate(FamilySpec.friendship(3)), w.spec, w.embedding)


@pytest.mark.parametrize("kind", ["Clique", "Star"])
def test_fast_paths_agree_with_generic(kind):
    rng = random.Random(9)
    for g in connected_graphs(7):
        if rng.random() > 0.1:
            continue
        fast = max_family_parameter(g, kind)
        slow = max_family_parameter(g, kind, generic=True)
        assert fast[0] == slow[0]
        assert verify_embedding(g, fast[1].spec, fast[1].embedding)


def test_witness_json_round_trip():
    for spec in (
        FamilySpec.biclique(2, 3),
        FamilySpec.spider(3, 2),
        FamilySpec("GeneralStar", 2, l=2, pattern=cycle(4), attach=(0, 2)),
    ):
        w = Witness(spec, tuple(range(generate(spec).order)))
        assert Witness.from_json(w.to_json()) == w
        assert verify_embedding(generate(spec), spec, w.embedding)


def test_verify_embedding_rejects():
    g = complete(4)
    assert verify_embedding(g, FamilySpec.clique(3), (0, 1, 2))
    assert not verify_embedding(g, FamilySpec.clique(3), (0, 0, 2))
    assert not verify_embedding(g, FamilySpec.clique(3), (0, 1, 9))
    assert not verify_embedding(g, FamilySpec.path(3), (0, 1, 2))
    assert not verify_embedding(g, FamilySpec.clique(3), (0, 1))
