"""A scikit-learn style wrapper around the large-flame pipeline."""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError
from sklearn.utils.validation import check_is_fitted

from .flame import certify, lovasz_reduce, omega_construct
from .menger import kappa_vector
from .validation import check_digraph, check_order


class LargeFlame(TransformerMixin, BaseEstimator):
    """Fit on a rooted digraph; ``transform`` returns its large flame.

    Parameters
    ----------
    strategy : {"sweep", "greedy"}
        Edge-deletion strategy of the reduction step.
    order : sequence of str or None
        Vertex order for the incremental construction (default: id order).
    certify : bool
        Also build a certificate during ``fit``.
    """

    def __init__(self, strategy="sweep", order=None, certify=True):
        self.strategy = strategy
        self.order = order
        self.certify = certify

    def fit(self, X, y=None):
        D = check_digraph(X)
        F = lovasz_reduce(D, strategy=self.strategy)
        L, state = omega_construct(F, check_order(D, self.order))
        self.input_ = D
        self.flame_ = L
        self.state_ = state
        self.kappa_ = kappa_vector(D)
        self.certificate_ = certify(D, L) if self.certify else None
        return self

    def transform(self, X):
        check_is_fitted(self, "flame_")
        D = check_digraph(X)
        if D != self.input_:
            raise NotFittedError("transform expects the digraph the estimator was fitted on")
        return self.flame_
