import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ddlandscape import CostFunction, DomainError, parse_cost
from ddlandscape.cost import standard_costs


def test_evaluate_examples():
    assert CostFunction.identity()(3) == 3
    assert CostFunction.power(2)(4) == 16
    assert CostFunction.exponential(2)(5) == 32


def test_table_must_increase():
    with pytest.raises(DomainError):
        CostFunction.table([1, 1, 2])
    g = CostFunction.table([1, 3, 7])
    assert g(3) == 7
    with pytest.raises(DomainError):
        g(4)


def test_prefix_sums():
    assert CostFunction.identity().prefix_sum(3) == 6
    assert CostFunction.power(2).prefix_sum(3) == 14
    for g in standard_costs().values():
        assert g.prefix_sum(0) == 0


def test_domain_errors():
    with pytest.raises(DomainError):
        CostFunction.identity()(0)
    with pytest.raises(DomainError):
        CostFunction.identity(max_distance=3)(4)
    with pytest.raises(DomainError):
        CostFunction.identity(max_distance=3).prefix_sum(4)
    with pytest.raises(DomainError):
        CostFunction.power(0)
    with pytest.raises(DomainError):
        CostFunction.exponential(1)


def test_exactness_and_tolerance():
    assert CostFunction.power(3).exact
    assert CostFunction.power(3).tolerance == 0
    g = CostFunction.power(Fraction(1, 2))
    assert not g.exact
    assert g.tolerance == 1e-9
    assert math.isclose(g(4), 2.0)
    assert isinstance(CostFunction.power(2)(3), int)


@pytest.mark.parametrize("text", ["identity", "power:2", "power:3", "exp:2", "exp:3/2", "table:1,3,7", "power:0.5"])
def test_spec_roundtrip(text):
    g = parse_cost(text)
    assert parse_cost(g.spec) == g


@pytest.mark.parametrize("text", ["", "power", "power:-1", "exp:1", "table:3,2", "cube", "table:a,b"])
def test_bad_specs(text):
    with pytest.raises(DomainError):
        parse_cost(text)


@given(st.sampled_from(sorted(standard_costs())), st.integers(1, 30))
def test_prefix_difference_is_evaluate(name, m):
    g = standard_costs()[name]
    assert g.prefix_sum(m) - g.prefix_sum(m - 1) == g(m)
    assert g(m + 1) > g(m)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=10, unique=True))
def test_sorted_table_is_increasing(vals):
    g = CostFunction.table(sorted(vals))
    assert all(g(d + 1) > g(d) for d in range(1, len(vals)))
