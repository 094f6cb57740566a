import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import seeded_digraphs
from vertexflame.bubbles import (
    ANTI_BUBBLE,
    cut_side,
    is_anti_bubble,
    is_bubble,
    largest_bubble,
    smallest_anti_bubble,
    unite_bubbles,
)
from vertexflame.digraph import entrance
from vertexflame.exceptions import ChainConditionViolated, NotAnEMSeparation, RootInSet
from vertexflame.menger import MengerDeficiency, extreme_separations
from vertexflame.oracle import brute_is_anti_bubble, brute_is_bubble, brute_regions, brute_separations


def test_singleton_is_a_bubble(chain):
    got = is_bubble(chain, "t", {"t"})
    assert got.vertices == {"t"}
    # t has its in-edge from outside, so the trivial path witnesses it
    assert list(got.witness) == [("t",)]


def test_chain_bubble_witness(chain):
    assert list(is_bubble(chain, "t", {"x", "y", "t"}).witness) == [("x", "y", "t")]


def test_diamond_half_is_a_bubble(diamond):
    # entrance {a, t}; the single path a -> t inside the set suffices
    got = is_bubble(diamond, "t", {"a", "t"})
    assert not isinstance(got, MengerDeficiency)
    assert set(got.witness) == {("a", "t"), ("t",)}


def test_bubble_refusal(extra):
    assert list(is_bubble(extra, "t", {"b", "t"}).witness) == [("b", "t"), ("t",)]
    # without b -> t the entrance vertex b cannot reach t inside the set
    got = is_bubble(extra.delete_edges([("b", "t")]), "t", {"b", "t"})
    assert isinstance(got, MengerDeficiency) and got.deficient == {"b"}


def test_bubble_rejects_root(chain):
    with pytest.raises(RootInSet):
        is_bubble(chain, "t", {"r", "t"})


@pytest.mark.parametrize(
    "name, S, B",
    [("chain", {"x"}, {"x", "y", "t"}), ("chain", {"y"}, {"y", "t"}), ("chainz", {"y"}, {"y", "t", "z"})],
)
def test_cut_side_examples(request, name, S, B):
    assert cut_side(request.getfixturevalue(name), "t", S).vertices == B


def test_cut_side_rejects_non_separation(chain):
    with pytest.raises(NotAnEMSeparation):
        cut_side(chain, "t", {"x", "y"})


@pytest.mark.parametrize(
    "name, B", [("chain", {"x", "y", "t"}), ("diamond", {"a", "b", "t"}), ("extra", {"a", "b", "t"})]
)
def test_largest_bubble_examples(request, name, B):
    D = request.getfixturevalue(name)
    assert largest_bubble(D, "t").vertices == B == brute_regions(D, "t").largest_bubble


@pytest.mark.parametrize(
    "name, A", [("chain", {"y", "t"}), ("chainz", {"y", "t"}), ("diamond", {"a", "b", "t"})]
)
@pytest.mark.parametrize("method", ["closure", "greedy"])
def test_smallest_anti_bubble_examples(request, name, A, method):
    D = request.getfixturevalue(name)
    got = smallest_anti_bubble(D, "t", method=method)
    assert got.vertices == A == brute_regions(D, "t").smallest_anti_bubble
    assert got.kind == ANTI_BUBBLE


def test_anti_bubble_examples(chain, diamond, star):
    assert list(is_anti_bubble(chain, {"y", "t"}).witness) == [("r", "x", "y")]
    assert set(is_anti_bubble(diamond, {"a", "b", "t"}).witness) == {("r", "a"), ("r", "b")}
    assert len(is_anti_bubble(star, set()).witness) == 0


def test_unite_examples(chain, chainz, diamond):
    assert unite_bubbles(chain, [({"t"}, "t")]).vertices == {"t"}
    with pytest.raises(ChainConditionViolated) as info:
        unite_bubbles(chainz, [({"y", "t"}, "t"), ({"z"}, "z")])
    assert info.value.index == 1
    assert unite_bubbles(diamond, [({"t"}, "t"), ({"a", "t"}, "t")]).vertices == {"a", "t"}


@given(seeded_digraphs(8), st.data())
def test_regions_match_enumeration(D, data):
    v = data.draw(st.sampled_from(D.non_root()))
    brute = brute_regions(D, v)
    B = largest_bubble(D, v).vertices
    A = smallest_anti_bubble(D, v).vertices
    assert B == brute.largest_bubble
    assert A == brute.smallest_anti_bubble
    assert smallest_anti_bubble(D, v, method="greedy").vertices == A
    assert all(X <= B for X in brute.bubbles)
    S, T = extreme_separations(D, v)
    Dr = D.without_root_edge(v)
    assert entrance(Dr, B) == S.vertices and entrance(Dr, A) == T.vertices
    assert brute_is_bubble(D, v, A)


@given(seeded_digraphs(8), st.data())
def test_cut_side_entrance_identity(D, data):
    v = data.draw(st.sampled_from(D.non_root()))
    Dr = D.without_root_edge(v)
    for S in brute_separations(D, v).all:
        B = cut_side(D, v, S)
        assert entrance(Dr, B.vertices) == S
        assert set(D.in_neighbors(v)) - {D.root} <= B.vertices


@given(seeded_digraphs(7), st.data())
def test_anti_bubbles_closed_under_intersection(D, data):
    v = data.draw(st.sampled_from(D.non_root()))
    antis = sorted(brute_regions(D, v).anti_bubbles, key=sorted)
    X = data.draw(st.sampled_from(antis))
    Y = data.draw(st.sampled_from(antis))
    assert not isinstance(is_anti_bubble(D, X & Y), MengerDeficiency)
    assert brute_is_anti_bubble(D, X & Y)


@given(seeded_digraphs(8), st.data())
def test_unite_output_is_bubble(D, data):
    v = data.draw(st.sampled_from(D.non_root()))
    bubbles = sorted(brute_regions(D, v).bubbles, key=sorted)
    chain = [(data.draw(st.sampled_from(bubbles)), v)]
    union = set(chain[0][0])
    for _ in range(data.draw(st.integers(0, 2))):
        from vertexflame.digraph import interior

        choices = sorted(interior(D, union)) + [v]
        w = data.draw(st.sampled_from(choices))
        B = data.draw(st.sampled_from(sorted(brute_regions(D, w).bubbles, key=sorted)))
        chain.append((B, w))
        union |= B
    got = unite_bubbles(D, chain)
    assert got.vertices == union and brute_is_bubble(D, v, frozenset(union))
