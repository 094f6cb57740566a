import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from vertexflame import LargeFlame, fixtures
from vertexflame.flame import verify_certificate


def test_params_round_trip():
    est = LargeFlame(strategy="greedy", order=["a", "b", "t"])
    assert est.get_params() == {"strategy": "greedy", "order": ["a", "b", "t"], "certify": True}
    est.set_params(certify=False)
    assert clone(est).get_params()["certify"] is False


def test_fit_transform(extra):
    est = LargeFlame()
    L = est.fit_transform(extra)
    assert L.num_edges == 3 == sum(est.kappa_.values())
    assert verify_certificate(est.certificate_).ok


def test_accepts_plain_data():
    obj = {"root": "r", "vertices": ["r", "a", "b"], "edges": [["r", "a"], ["r", "b"]]}
    assert LargeFlame().fit(obj).flame_ == fixtures.star()
    triple = (["r", "a"], [("r", "a")], "r")
    assert LargeFlame(certify=False).fit(triple).certificate_ is None
    with pytest.raises(TypeError):
        LargeFlame().fit(42)


def test_unfitted_and_foreign_inputs(extra, diamond):
    with pytest.raises(NotFittedError):
        LargeFlame().transform(extra)
    with pytest.raises(NotFittedError):
        LargeFlame().fit(extra).transform(diamond)


def test_bad_order(extra):
    with pytest.raises(ValueError):
        LargeFlame(order=["a", "zz"]).fit(extra)
