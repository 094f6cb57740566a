"""Acceptance criteria 1-9, each run at its stated size and tolerance.

Every criterion records one ``PASS``/``FAIL`` line; the lines are printed
as they finish and again in the terminal summary.
"""

import random
import time
from collections import deque
from contextlib import contextmanager

import pytest

from vertexflame import fixtures
from vertexflame.bubbles import largest_bubble, smallest_anti_bubble
from vertexflame.cli import main
from vertexflame.digraph import entrance
from vertexflame.exceptions import TooLarge
from vertexflame.flame import (
    certify,
    largeness_check,
    lovasz_reduce,
    no_collapse_step,
    omega_construct,
    verify_certificate,
)
from vertexflame.linkage import cover_extension
from vertexflame.menger import extreme_separations, kappa_vector
from vertexflame import io, oracle
from vertexflame.oracle import (
    LEMMAS,
    brute_g,
    brute_regions,
    brute_separations,
    gen_random,
    lemma_check,
    random_instance,
    random_large_subgraph,
)

RESULTS: list[str] = []


@contextmanager
def criterion(number, text):
    try:
        yield
    except BaseException as exc:
        line = f"FAIL criterion {number}: {text} ({type(exc).__name__}: {exc})"
        RESULTS.append(line)
        print(line)
        raise
    line = f"PASS criterion {number}: {text}"
    RESULTS.append(line)
    print(line)


def _small(count, max_n, salt):
    out = []
    for i in range(count):
        rng = random.Random(f"{salt}:{i}")
        out.append(gen_random(rng.randint(2, max_n), rng.choice([0.2, 0.35, 0.5]), rng.randrange(2**31)))
    return out


@pytest.fixture(scope="module")
def reduction_corpus():
    corpus = []
    for i in range(500):
        rng = random.Random(f"lovasz:{i}")
        corpus.append(gen_random(rng.randint(2, 40), (0.1, 0.3, 0.6)[i % 3], rng.randrange(2**31)))
    return corpus


_REDUCED: dict[int, object] = {}


def test_criterion_1_lovasz_identity(reduction_corpus):
    with criterion(1, "indeg_L = kappa_L = kappa_D and |E(L)| = sum kappa on 500 digraphs in < 60 s"):
        start = time.perf_counter()
        for i, D in enumerate(reduction_corpus):
            L = lovasz_reduce(D)
            kD, kL = kappa_vector(D), kappa_vector(L)
            assert kD == kL, f"instance {i}: connectivity changed"
            assert all(L.indegree(v) == kD[v] for v in kD), f"instance {i}: in-degree mismatch"
            assert L.num_edges == sum(kD.values()), f"instance {i}: edge count"
            _REDUCED[i] = L
        elapsed = time.perf_counter() - start
        assert elapsed < 60, f"took {elapsed:.1f} s"


def _reaches_avoiding(D, v, S):
    seen, queue = {D.root}, deque([D.root])
    while queue:
        u = queue.popleft()
        for w in D.out_neighbors(u):
            if (u, w) == (D.root, v) or w in seen or w in S:
                continue
            seen.add(w)
            queue.append(w)
    return v in seen


def test_criterion_2_certificate_soundness(reduction_corpus):
    with criterion(2, "certificates of reduced digraphs verify on all 500 instances"):
        for i, D in enumerate(reduction_corpus):
            L = _REDUCED[i] if i in _REDUCED else lovasz_reduce(D)
            cert = certify(D, L)
            report = verify_certificate(cert)
            assert report.ok, f"instance {i}: {[(v.vertex, v.reasons()) for v in report.failing()]}"
            # separators are re-checked against the base digraph by plain search
            for v, entry in cert.entries.items():
                assert not _reaches_avoiding(D, v, entry.separator), f"instance {i}, vertex {v}"


def test_criterion_3_extreme_separations():
    with criterion(3, "extreme separations equal the enumerated min/max on 200 instances n <= 10"):
        S, T = extreme_separations(fixtures.chain(), "t")
        assert (S.vertices, T.vertices) == ({"x"}, {"y"})
        for i, D in enumerate(_small(200, 10, "seps")):
            for v in D.non_root():
                S, T = extreme_separations(D, v)
                brute = brute_separations(D, v)
                assert (S.vertices, T.vertices) == (brute.minimum, brute.maximum), f"instance {i}, {v}"


def test_criterion_4_regions():
    with criterion(4, "largest bubble and smallest anti-bubble match enumeration, entrance identities hold"):
        for i, D in enumerate(_small(200, 10, "regions")):
            for v in D.non_root():
                B = largest_bubble(D, v).vertices
                A = smallest_anti_bubble(D, v).vertices
                brute = brute_regions(D, v)
                assert (B, A) == (brute.largest_bubble, brute.smallest_anti_bubble), f"instance {i}, {v}"
                S, T = extreme_separations(D, v)
                Dr = D.without_root_edge(v)
                assert entrance(Dr, B) == S.vertices and entrance(Dr, A) == T.vertices, f"instance {i}, {v}"


def test_criterion_5_no_collapse():
    with criterion(5, "no_collapse_step keeps every smallest separation and largeness on 100 instances n <= 12"):
        for i in range(100):
            rng = random.Random(f"collapse:{i}")
            D = gen_random(rng.randint(2, 12), rng.choice([0.3, 0.45, 0.6]), rng.randrange(2**31))
            L = random_large_subgraph(D, rng)
            before = {u: extreme_separations(L, u)[0].vertices for u in L.non_root()}
            for v in L.non_root():
                L2, Q = no_collapse_step(L, v)
                assert largeness_check(L, L2).large, f"instance {i}, {v}: not large"
                after = {u: extreme_separations(L2, u)[0].vertices for u in L.non_root()}
                assert after == before, f"instance {i}, {v}: separation moved"


def _orthogonal(D, v, S, R):
    hits = []
    for p in R:
        if p[0] != D.root or p[-1] != v:
            return False
        if not all(D.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        inner = S.intersection(p[1:-1])
        if len(inner) != 1:
            return False
        hits.extend(inner)
    insides = [set(p[1:-1]) for p in R]
    disjoint = sum(map(len, insides)) == len(set().union(*insides, set()))
    return disjoint and len(hits) == len(S) and set(hits) == S


def test_criterion_6_pym_and_cover():
    with criterion(6, "merged systems are splice-shaped and covering; cover_extension is orthogonal and covers I - rv"):
        for seed in range(100):
            result = lemma_check(random_instance("pym_shape", 8, seed))
            assert result.passed, result.counterexample
        done = 0
        for i, D in enumerate(_small(400, 8, "cover")):
            if done == 100:
                break
            rng = random.Random(f"cover:{i}")
            candidates = [v for v in D.non_root() if D.indegree(v) > 0]
            if not candidates:
                continue
            v = rng.choice(candidates)
            S = rng.choice(sorted(brute_separations(D, v).all, key=sorted))
            I = rng.choice(sorted(brute_g(D, v), key=sorted))
            R = cover_extension(D, v, S, I)
            assert _orthogonal(D, v, S, R), f"instance {i}, {v}: not orthogonal"
            assert I - {(D.root, v)} <= R.last_edges(), f"instance {i}, {v}: coverage"
            done += 1
        assert done == 100


def test_criterion_7_commitments():
    with criterion(7, "omega_construct keeps every committed system on 100 flames under 3 orders"):
        for i in range(100):
            rng = random.Random(f"omega:{i}")
            F = lovasz_reduce(gen_random(rng.randint(4, 20), rng.choice([0.15, 0.3, 0.5]), rng.randrange(2**31)))
            base = list(F.non_root())
            orders = {tuple(base), tuple(reversed(base))}
            while len(orders) < 3:
                rng.shuffle(base)
                orders.add(tuple(base))
            assert len(orders) == 3
            for order in sorted(orders):
                L, state = omega_construct(F, list(order))
                for step in state.steps:
                    assert step.system.edges() <= L.edge_set, f"instance {i}, order {order}, step {step.index}"


def test_criterion_8_lemmas():
    with criterion(8, f"lemma_check passes for all {len(LEMMAS)} lemma ids on 100 seeded instances each"):
        for lemma in LEMMAS:
            for seed in range(100):
                result = lemma_check(random_instance(lemma, 10, seed))
                assert result.passed, result.counterexample


def test_criterion_9_performance(tmp_path, capsys):
    with criterion(9, "flame build on n = 200, p = 0.05 in < 120 s; oracle size guards enforced"):
        src = tmp_path / "big.json"
        src.write_bytes(io.serialize(gen_random(200, 0.05, 2024), "json"))
        start = time.perf_counter()
        code = main(["flame", "build", str(src)])
        elapsed = time.perf_counter() - start
        capsys.readouterr()
        assert code == 0 and elapsed < 120, f"exit {code} after {elapsed:.1f} s"
        assert (oracle.MAX_REGION_VERTICES, oracle.MAX_G_INDEGREE, oracle.MAX_G_VERTICES) == (16, 8, 12)
        for call in (
            lambda: brute_separations(gen_random(18, 0.2, 1), "v01"),
            lambda: brute_regions(gen_random(18, 0.2, 1), "v01"),
            lambda: brute_g(gen_random(13, 0.2, 1), "v01"),
        ):
            with pytest.raises(TooLarge):
                call()
