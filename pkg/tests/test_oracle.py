import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import seeded_digraphs
from vertexflame import fixtures
from vertexflame.exceptions import HypothesisViolated, TooLarge
from vertexflame.flame import lovasz_reduce
from vertexflame.menger import kappa
from vertexflame.oracle import (
    LEMMAS,
    LemmaInstance,
    brute_g,
    brute_kappa,
    brute_regions,
    brute_separations,
    gen_random,
    lemma_check,
    random_instance,
)


def fs(*xs):
    return frozenset(xs)


def test_brute_separation_examples(chain, diamond, star):
    seps = brute_separations(chain, "t")
    assert seps.all == {fs("x"), fs("y")}
    assert (seps.minimum, seps.maximum) == (fs("x"), fs("y"))
    assert brute_separations(diamond, "t").all == {fs("a", "b")}
    assert brute_separations(star, "a").all == {fs()}


def test_brute_region_examples(chain, chainz, diamond):
    got = brute_regions(chain, "t")
    assert got.largest_bubble == fs("x", "y", "t")
    assert got.smallest_anti_bubble == fs("y", "t")
    assert brute_regions(chainz, "t").smallest_anti_bubble == fs("y", "t")
    got = brute_regions(diamond, "t")
    assert got.largest_bubble == got.smallest_anti_bubble == fs("a", "b", "t")


def test_brute_g_examples(diamond, extra, chain):
    at, bt = ("a", "t"), ("b", "t")
    assert brute_g(diamond, "t") == {fs(), fs(at), fs(bt), fs(at, bt)}
    assert brute_g(extra, "t") == {fs(), fs(at), fs(bt)}
    assert brute_g(chain, "t") == {fs(), fs(("y", "t"))}


def test_size_guards():
    big = gen_random(18, 0.2, 0)
    with pytest.raises(TooLarge):
        brute_separations(big, "v01")
    with pytest.raises(TooLarge):
        brute_regions(big, "v01")
    with pytest.raises(TooLarge):
        brute_g(gen_random(13, 0.2, 0), "v01")


def test_gen_random_examples():
    one = gen_random(1, 0.5, 7)
    assert one.vertices == ("r",) and one.num_edges == 0
    empty = gen_random(4, 0.0, 1)
    assert empty.num_vertices == 4 and empty.num_edges == 0
    # every ordered pair minus loops minus edges into the root
    assert gen_random(5, 1.0, 3).num_edges == 16
    assert gen_random(9, 0.4, 11) == gen_random(9, 0.4, 11)


def test_gen_random_rejects_bad_arguments():
    with pytest.raises(ValueError):
        gen_random(0, 0.5, 1)
    with pytest.raises(ValueError):
        gen_random(3, 1.5, 1)


def test_lemma_examples(extra, cross):
    assert lemma_check(LemmaInstance("no_collapse", extra, {"v": "t"})).passed
    with pytest.raises(HypothesisViolated):
        lemma_check(LemmaInstance("g_quasi_add_one", extra, {"w": "t", "edge": ("a", "b")}))
    inst = LemmaInstance(
        "pym_shape",
        cross,
        {"X": fixtures.CROSS_X, "Y": fixtures.CROSS_Y, "P": [("x1", "a", "y1")], "Q": [("x2", "a", "y2")]},
    )
    assert lemma_check(inst).passed


def test_aug_walk_rejects_bad_infan(diamond):
    inst = LemmaInstance("aug_walk", diamond, {"v": "t", "X": {"a"}, "infan": [("b", "t")]})
    with pytest.raises(HypothesisViolated):
        lemma_check(inst)


def test_unknown_lemma(extra):
    with pytest.raises(ValueError):
        lemma_check(LemmaInstance("nope", extra))
    with pytest.raises(ValueError):
        random_instance("nope", 5, 0)


@pytest.mark.parametrize("lemma", LEMMAS)
def test_lemmas_on_seeded_instances(lemma):
    for seed in range(15):
        result = lemma_check(random_instance(lemma, 8, seed))
        assert result.passed, result.counterexample


def test_random_instance_is_deterministic():
    a, b = random_instance("largest_emsep", 7, 3), random_instance("largest_emsep", 7, 3)
    assert a == b


def test_no_collapse_after_reduction():
    for seed in range(100):
        D = gen_random(1 + seed % 8, 0.4, seed)
        L = lovasz_reduce(D)
        for v in L.non_root():
            assert lemma_check(LemmaInstance("no_collapse", L, {"v": v})).passed


@given(seeded_digraphs(9), st.data())
def test_brute_kappa_matches_flow(D, data):
    v = data.draw(st.sampled_from(D.non_root()))
    assert brute_kappa(D, v) == kappa(D, v)


@settings(max_examples=40)
@given(seeded_digraphs(9), st.data())
def test_brute_g_is_downward_closed(D, data):
    v = data.draw(st.sampled_from(D.non_root()))
    family = brute_g(D, v)
    assert frozenset() in family
    for I in family:
        assert all(I - {e} in family for e in I)
