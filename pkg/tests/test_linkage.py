import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import seeded_digraphs
from vertexflame.digraph import DISJOINT, PathSystem, build_digraph, path_system
from vertexflame.exceptions import NotDisjoint, NotInG, NotXYPaths
from vertexflame.fixtures import CROSS_X, CROSS_Y
from vertexflame.linkage import (
    cover_extension,
    is_orthogonal,
    is_splice_shaped,
    merge_violation,
    pym_infan,
    pym_merge,
    pym_rooted,
)
from vertexflame.oracle import brute_g, brute_separations, exhaustive_merge


def _disjoint(*paths):
    return PathSystem(tuple(paths), DISJOINT)


def test_cross_merge(cross):
    P, Q = _disjoint(("x1", "a", "y1")), _disjoint(("x2", "a", "y2"))
    R = pym_merge(cross, P, Q, CROSS_X, CROSS_Y)
    assert list(R) == [("x1", "a", "y2")]
    assert is_splice_shaped(R, P, Q)


def test_merge_identical_and_empty(cross):
    P = _disjoint(("x1", "a", "y1"))
    assert pym_merge(cross, P, P, CROSS_X, CROSS_Y) == P
    assert pym_merge(cross, _disjoint(), P, CROSS_X, CROSS_Y) == P


def test_merge_rejects_bad_inputs(cross):
    with pytest.raises(NotXYPaths):
        pym_merge(cross, _disjoint(("a", "y1")), _disjoint(), CROSS_X, CROSS_Y)
    fork = build_digraph(
        ["r", "x", "a", "b", "y1", "y2"],
        [("x", "a"), ("x", "b"), ("a", "y1"), ("b", "y2")],
        "r",
    )
    shared_start = PathSystem((("x", "a", "y1"), ("x", "b", "y2")))
    with pytest.raises(NotDisjoint):
        pym_merge(fork, shared_start, _disjoint(), {"x"}, {"y1", "y2"})


def test_infan_examples(diamond, chain):
    got = pym_infan(diamond, path_system([("a", "t"), ("b", "t")]), path_system([("a", "t")]), "t", {"a", "b"})
    assert set(got) == {("a", "t"), ("b", "t")}
    P = path_system([("x", "y", "t")])
    assert pym_infan(chain, P, PathSystem(), "t", {"x"}) == P
    assert list(pym_infan(chain, P, path_system([("y", "t")]), "t", {"x"})) == [("x", "y", "t")]


def test_rooted_examples(diamond):
    D = build_digraph(["r", "a", "b", "c"], [("r", "a"), ("r", "b"), ("a", "c"), ("b", "c")], "r")
    P = path_system([("r", "a", "c"), ("r", "b", "c")])
    got = pym_rooted(D, P, path_system([("a", "c")]), {"r"}, "c")
    assert set(got) == {("r", "a", "c"), ("r", "b", "c")}
    assert set(pym_rooted(D, P, PathSystem(), {"r"}, "c")) == set(P)
    P = path_system([("r", "a", "t"), ("r", "b", "t")])
    assert set(pym_rooted(diamond, P, path_system([("b", "t")]), {"r"}, "t")) == set(P)


def test_cover_extension_examples(diamond, chain, extra):
    both = {("a", "t"), ("b", "t")}
    assert set(cover_extension(diamond, "t", {"a", "b"}, both)) == {("r", "a", "t"), ("r", "b", "t")}
    assert list(cover_extension(chain, "t", {"y"}, set())) == [("r", "x", "y", "t")]
    assert list(cover_extension(extra, "t", {"a"}, {("b", "t")})) == [("r", "a", "b", "t")]


def test_cover_extension_refuses_unrealisable(extra):
    with pytest.raises(NotInG):
        cover_extension(extra, "t", {"a"}, {("a", "t"), ("b", "t")})


def _random_xy(D, rng_data, X, Y, k):
    from vertexflame.oracle import _random_disjoint_xy
    import random

    return _random_disjoint_xy(D, frozenset(X), frozenset(Y), random.Random(rng_data), k)


@given(seeded_digraphs(8), st.integers(0, 10**6))
def test_merge_shape_and_coverage(D, seed):
    import random

    rng = random.Random(seed)
    rest = list(D.non_root())
    if len(rest) < 2:
        return
    rng.shuffle(rest)
    cut = rng.randint(1, len(rest) - 1)
    X, Y = frozenset(rest[:cut] + [D.root]), frozenset(rest[cut:])
    P = _random_xy(D, seed, X, Y, 3)
    Q = _random_xy(D, seed + 1, X, Y, 3)
    R = pym_merge(D, PathSystem(tuple(P), DISJOINT), PathSystem(tuple(Q), DISJOINT), X, Y)
    assert merge_violation(R.paths, P, Q, X, Y) is None
    assert (exhaustive_merge(P, Q, X, Y) is not None) or not (P or Q)
    assert pym_merge(D, PathSystem(tuple(P), DISJOINT), PathSystem(tuple(P), DISJOINT), X, Y) == PathSystem(tuple(P), DISJOINT)


@given(seeded_digraphs(8), st.data())
def test_cover_extension_orthogonal(D, data):
    v = data.draw(st.sampled_from(D.non_root()))
    if D.indegree(v) > 8:
        return
    S = data.draw(st.sampled_from(sorted(brute_separations(D, v).all, key=sorted)))
    I = data.draw(st.sampled_from(sorted(brute_g(D, v), key=sorted)))
    R = cover_extension(D, v, S, I)
    assert is_orthogonal(D, v, S, R)
    assert R.last_edges() >= I - {(D.root, v)}
