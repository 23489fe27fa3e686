import subprocess
import sys

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from octalgraph import GrundyEstimator, InvalidArgumentError, ParseError, StarSpec, build_cycle
from octalgraph.estimators import closed_form_value
from octalgraph.validation import check_code, check_graph

X = ["path:7", "cycle:9", "star:1,1,3,4", "bistar:1,1/2/1,2", "cat:6:1,2,3", build_cycle(5), StarSpec.of(1, 1, 2)]
Y = [1, 0, 1, 2, 3, 2, 2]


def test_params_roundtrip():
    est = GrundyEstimator(code="0.6", use_closed_form=False)
    params = est.get_params()
    assert params["code"] == "0.6" and params["use_closed_form"] is False
    twin = clone(est)
    assert twin.get_params() == params
    est.set_params(code="0.33")
    assert est.code == "0.33"


def test_predict_mixed_inputs():
    est = GrundyEstimator().fit()
    pred = est.predict(X)
    assert pred.dtype == np.int64
    assert pred.tolist() == Y
    assert est.score(X, Y) == 1.0
    assert est.predict_outcome(["path:3", "path:4"]).tolist() == ["P", "N"]


def test_closed_form_and_engine_agree():
    fast = GrundyEstimator(use_closed_form=True).fit().predict(X)
    slow = GrundyEstimator(use_closed_form=False).fit().predict(X)
    assert fast.tolist() == slow.tolist()


def test_fit_warms_cache():
    est = GrundyEstimator(use_closed_form=False).fit(["cat:8:2,4"])
    assert est.engine_.cache_stats()["entries"] > 0


def test_other_codes_use_engine():
    est = GrundyEstimator(code="0.6").fit()
    assert est.predict(["path:1", "path:2"]).tolist() == [0, 1]
    assert closed_form_value(StarSpec.of(2)) == 0


def test_winning_moves():
    est = GrundyEstimator().fit()
    assert [sorted(m.removed) for m in est.winning_moves("path:4")] == [[0], [3]]


def test_errors():
    with pytest.raises(NotFittedError):
        GrundyEstimator().predict(["path:1"])
    with pytest.raises(ParseError):
        GrundyEstimator(code="0.9").fit()
    est = GrundyEstimator().fit()
    with pytest.raises(InvalidArgumentError):
        est.predict("path:3")
    with pytest.raises(InvalidArgumentError):
        est.predict([3.5])
    with pytest.raises(InvalidArgumentError):
        check_code(33)
    assert check_graph(build_cycle(3))[0] is None


def test_cli_does_not_import_sklearn():
    proc = subprocess.run(
        [sys.executable, "-c", "import sys, octalgraph.cli; print('sklearn' in sys.modules)"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.strip() == "False"
