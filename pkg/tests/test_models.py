import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from effortfit.dataset import Dataset, ProjectRecord
from effortfit.metrics import mae
from effortfit.models import (
    EvaluationError,
    ModelSpec,
    TrainingMAE,
    default_search_space,
    predict,
    predict_all,
)

coef = st.floats(-10, 10, allow_nan=False)
exponent = st.floats(0.01, 2, allow_nan=False)
record = st.builds(ProjectRecord, st.just(1), st.floats(0.1, 500), st.floats(-50, 50),
                   st.floats(0.1, 500))


def test_dimensions():
    assert [m.dimension for m in ModelSpec] == [2, 3, 4]
    assert ModelSpec.MODEL_II.coefficient_names == ("a", "b", "c", "d")


@pytest.mark.parametrize("text, spec", [("basic", ModelSpec.BASIC), ("Model-I", ModelSpec.MODEL_I),
                                        ("model2", ModelSpec.MODEL_II), ("modelii", ModelSpec.MODEL_II)])
def test_parse(text, spec):
    assert ModelSpec.parse(text) is spec


def test_identity_coefficients(nasa):
    assert predict(ModelSpec.BASIC, (1, 1), nasa.records[0]) == pytest.approx(90.2, rel=1e-15)


def test_basic_value():
    # oracle: Python's pow() rather than exp(b*ln(kloc))
    expected = 2.5 * 10.5 ** 0.9
    r = ProjectRecord(8, 10.5, 34, 10.3)
    assert predict(ModelSpec.BASIC, (2.5, 0.9), r) == pytest.approx(expected, rel=1e-14)
    assert expected == pytest.approx(20.7496, abs=1e-4)


def test_power_term_off(nasa):
    r = nasa.records[0]  # me = 30
    assert predict(ModelSpec.MODEL_I, (0, 1, 1), r) == 30


def test_predict_all_order(nasa_split):
    p = predict_all(ModelSpec.BASIC, (1, 1), nasa_split.train)
    assert p.shape == (13,)
    np.testing.assert_allclose(p, nasa_split.train.kloc, rtol=1e-15)


def test_dimension_mismatch(nasa):
    with pytest.raises(ValueError, match="takes 2 coefficients"):
        predict(ModelSpec.BASIC, (1, 1, 1), nasa.records[0])
    with pytest.raises(ValueError):
        predict_all(ModelSpec.MODEL_II, (1, 1, 1), nasa)


def test_non_finite_rejected(nasa):
    with pytest.raises(ValueError):
        predict(ModelSpec.BASIC, (1, math.nan), nasa.records[0])
    # only project 18 (kloc 100.8) overflows at b=154
    assert 154 * math.log(90.2) < math.log(1.7e308) < 154 * math.log(100.8)
    with pytest.raises(EvaluationError, match="project 18"):
        predict_all(ModelSpec.BASIC, (1, 154), nasa)


def test_negative_predictions_pass_through(nasa):
    assert predict(ModelSpec.MODEL_II, (0, 1, 0, -20), nasa.records[0]) == -20


@settings(max_examples=200)
@given(record, coef, exponent, coef)
def test_reductions_exact(r, a, b, c):
    basic = predict(ModelSpec.BASIC, (a, b), r)
    assert predict(ModelSpec.MODEL_I, (a, b, 0.0), r) == basic
    assert predict(ModelSpec.MODEL_II, (a, b, c, 0.0), r) == predict(ModelSpec.MODEL_I, (a, b, c), r)
    assert predict(ModelSpec.MODEL_II, (a, b, 0.0, 0.0), r) == basic


@settings(max_examples=200)
@given(st.floats(0.01, 10), exponent, st.floats(0.1, 1000), st.floats(1.001, 3))
def test_monotone_in_kloc(a, b, kloc, factor):
    small = predict(ModelSpec.BASIC, (a, b), ProjectRecord(1, kloc, 0, 1))
    large = predict(ModelSpec.BASIC, (a, b), ProjectRecord(1, kloc * factor, 0, 1))
    assert large > small


@given(record, coef, exponent)
def test_pure(r, a, b):
    assert predict(ModelSpec.BASIC, (a, b), r) == predict(ModelSpec.BASIC, (a, b), r)


def test_default_search_space():
    s = default_search_space(ModelSpec.BASIC)
    assert (s.lower, s.upper) == ((0.0, 0.01), (10.0, 2.0))
    s2 = default_search_space(ModelSpec.MODEL_II)
    assert s2.dimension == 4
    assert s2.lower == (0.0, 0.01, -5.0, -20.0) and s2.upper == (10.0, 2.0, 5.0, 20.0)
    for spec in ModelSpec:
        sp = default_search_space(spec)
        assert all(lo < hi for lo, hi in zip(sp.lower, sp.upper))


@pytest.mark.parametrize("spec", list(ModelSpec))
def test_training_mae_matches_metric(nasa_split, backend, spec):
    rng = np.random.default_rng(7)
    obj = TrainingMAE(spec, nasa_split.train)
    space = default_search_space(spec)
    for x in space.uniform(rng, 20):
        expected = mae(nasa_split.train.effort, predict_all(spec, x, nasa_split.train))
        assert obj(x) == pytest.approx(expected, rel=1e-12)
    batch = obj.batch(space.uniform(rng, 5))
    assert batch.shape == (5,)


def test_training_mae_overflow_is_inf(nasa_split):
    obj = TrainingMAE(ModelSpec.BASIC, nasa_split.train)
    assert obj(np.array([1e300, 200.0])) == math.inf
    assert np.all(obj.batch(np.array([[1e300, 200.0]])) == math.inf)
