"""scikit-learn style wrappers around the engine and the 0.33 closed forms."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from . import closed_form as cf
from .dsl import CycleSpec, PathSpec
from .engine import DEFAULT_MAX_POSITIONS, EvalCache, GrundyEngine, Outcome
from .graph import BistarSpec, StarSpec
from .validation import check_code, check_graph, check_graphs

__all__ = ["GrundyEstimator", "closed_form_value"]


def closed_form_value(spec):
    """0.33 value from the closed forms, or None if ``spec`` is not covered."""
    if isinstance(spec, PathSpec):
        return cf.path_grundy(spec.n)
    if isinstance(spec, CycleSpec):
        return cf.cycle_grundy(spec.n)
    if isinstance(spec, StarSpec):
        return cf.star_grundy(spec)
    if isinstance(spec, BistarSpec):
        return cf.bistar_grundy(spec)
    return None


class GrundyEstimator(BaseEstimator):
    """Predicts Grundy values of graphs for a fixed octal game.

    ``X`` is any sequence of :class:`~octalgraph.graph.Graph` objects, DSL
    strings (``"star:1,1,3,4"``) or spec objects.  With
    ``use_closed_form=True`` and code ``0.33``, paths, cycles, stars and
    bistars skip the search.  ``fit`` only validates parameters and, if
    ``X`` is given, warms the position cache.
    """

    def __init__(self, code="0.33", use_closed_form=True, max_positions=DEFAULT_MAX_POSITIONS, canonical=True):
        self.code = code
        self.use_closed_form = use_closed_form
        self.max_positions = max_positions
        self.canonical = canonical

    def fit(self, X=None, y=None):
        self.code_ = check_code(self.code)
        cache = EvalCache(self.code_, self.max_positions) if self.canonical else None
        self.engine_ = GrundyEngine(self.code_, cache, self.max_positions, canonical=self.canonical)
        self._closed = self.use_closed_form and str(self.code_) == "0.33"
        if X is not None:
            self.predict(X)
        return self

    def _value(self, spec, graph) -> int:
        if self._closed and spec is not None:
            value = closed_form_value(spec)
            if value is not None:
                return value
        return self.engine_.grundy(graph)

    def predict(self, X):
        check_is_fitted(self, "engine_")
        return np.array([self._value(spec, g) for spec, g in check_graphs(X)], dtype=np.int64)

    def predict_outcome(self, X):
        return np.array([Outcome.from_grundy(int(v)).value for v in self.predict(X)])

    def winning_moves(self, x) -> list:
        check_is_fitted(self, "engine_")
        _, g = check_graph(x)
        return self.engine_.winning_moves(g)

    def score(self, X, y) -> float:
        """Fraction of graphs whose predicted value equals ``y``."""
        return float(np.mean(self.predict(X) == np.asarray(y)))
