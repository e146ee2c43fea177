import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lukasiewicz.errors import NegativeHeight, NonzeroFinalHeight, ResourceLimit, StepOutOfRange
from lukasiewicz.exactalg import MultiPoly
from lukasiewicz.paths import (INF, ModelParams, count_paths, enumerate_paths, partition_polynomial,
                               validate, weight_polynomial_json, weights)

a, q = MultiPoly.var("a"), MultiPoly.var("q")


def catalan(m):
    c = [1]
    for i in range(1, m + 1):
        c.append(sum(c[j] * c[i - 1 - j] for j in range(i)))
    return c[m]


def motzkin(n):
    # M_n = M_{n-1} + sum_{i=0}^{n-2} M_i M_{n-2-i}
    m = [1]
    for i in range(1, n + 1):
        m.append(m[i - 1] + sum(m[j] * m[i - 2 - j] for j in range(i - 1)))
    return m[n]


PARAMS = [ModelParams(0, 0), ModelParams(0, 1), ModelParams(1, 1), ModelParams(1, 2),
          ModelParams(0, 2), ModelParams(2, 4), ModelParams(0, INF), ModelParams(1, INF)]


def test_params_validation():
    with pytest.raises(ValueError):
        ModelParams(2, 1)
    with pytest.raises(ValueError):
        ModelParams(-1, 2)
    assert ModelParams.parse("1", "inf") == ModelParams(1, INF)
    assert str(ModelParams(1, INF)) == "(1,inf)"


def test_validate_examples():
    p = validate(ModelParams(1, 2), [2, -1, -1])
    assert p.heights == (0, 2, 1, 0)
    assert validate(ModelParams(1, 1), []).steps == ()
    with pytest.raises(StepOutOfRange):
        validate(ModelParams(1, 2), [3, -1, -1, -1])


def test_validate_height_errors():
    with pytest.raises(NegativeHeight):
        validate(ModelParams(0, 1), [-1, 1])
    with pytest.raises(NonzeroFinalHeight):
        validate(ModelParams(0, 1), [1, 0])
    with pytest.raises(StepOutOfRange):
        validate(ModelParams(1, 1), [0])


@pytest.mark.parametrize("params, steps, want", [
    (ModelParams(1, 1), [1, -1, 1, -1], (4, 2, 2)),
    (ModelParams(0, INF), [0, 0], (2, 2, 0)),
    (ModelParams(1, INF), [2, -1, -1], (3, 1, 3)),
])
def test_weights(params, steps, want):
    w = weights(validate(params, steps))
    assert (w.length, w.contacts, w.area) == want


def test_enumeration_examples():
    got = {p.steps for p in enumerate_paths(ModelParams(1, 1), 4)}
    assert got == {(1, -1, 1, -1), (1, 1, -1, -1)}
    assert count_paths(ModelParams(0, 1), 3) == motzkin(3) == 4
    assert enumerate_paths(ModelParams(1, 1), 3) == frozenset()


def test_partition_polynomial_examples():
    assert partition_polynomial(ModelParams(0, 1), 3) == a ** 3 + 2 * a ** 2 + a
    assert partition_polynomial(ModelParams(1, 1), 4) == a + a ** 2
    assert partition_polynomial(ModelParams(0, INF), 2, with_area=True) == a ** 2 + a * q
    assert partition_polynomial(ModelParams(2, 4), 0) == MultiPoly.const(1)


@pytest.mark.parametrize("n", range(17))
def test_dyck_counts(n):
    want = catalan(n // 2) if n % 2 == 0 else 0
    assert partition_polynomial(ModelParams(1, 1), n).evaluate({"a": 1}) == want


@pytest.mark.parametrize("n", range(17))
def test_motzkin_counts(n):
    assert count_paths(ModelParams(0, 1), n) == motzkin(n)


@pytest.mark.parametrize("n", range(11))
def test_unrestricted_counts(n):
    # (0,inf) paths of length n are counted by C_n
    assert count_paths(ModelParams(0, INF), n) == catalan(n)


def test_flat_model():
    for n in range(10):
        assert partition_polynomial(ModelParams(0, 0), n) == a ** n


@pytest.mark.parametrize("params", PARAMS, ids=str)
def test_area_weights_reduce_to_contacts(params):
    for n in range(13):
        both = partition_polynomial(params, n, with_area=True)
        assert both.subs("q", 1) == partition_polynomial(params, n)


@given(st.sampled_from(PARAMS), st.integers(0, 8))
def test_enumeration_is_valid_and_distinct(params, n):
    paths = list(enumerate_paths(params, n))
    assert len({p.steps for p in paths}) == len(paths)
    for p in paths:
        assert validate(params, p.steps) == p
        w = weights(p)
        if n:
            assert w.contacts >= 1
        assert (w.area == 0) == all(s == 0 for s in p.steps)


def test_cap():
    with pytest.raises(ResourceLimit):
        count_paths(ModelParams(0, INF), 8, cap=100)
    with pytest.raises(ResourceLimit):
        partition_polynomial(ModelParams(0, INF), 8, cap=100)


def test_json_serialization():
    p = validate(ModelParams(1, 2), [2, -1, -1])
    assert json.loads(p.to_json()) == [2, -1, -1]
    obj = json.loads(weight_polynomial_json(partition_polynomial(ModelParams(0, INF), 2, True), True))
    assert obj == {"vars": ["a", "q"], "terms": {"1,1": 1, "2,0": 1}}
