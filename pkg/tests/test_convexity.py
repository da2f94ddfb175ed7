import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from ddlandscape import CostFunction, GridFunction, audit, quasistar_grid, star_landscape
from ddlandscape.convexity import (
    ALL_PROPERTIES,
    FAILS,
    HOLDS,
    NOT_APPLICABLE,
    aggregate_instance,
    check_aggregate_monotonicity,
    check_convex_sequence,
    check_discrete_convexity,
    check_forward_differences,
    check_local_submodularity,
    check_quasiconvex,
    check_secant_line,
    crosses,
    discrete_convexity_instance,
    fixture_alternating,
    fixture_quadratic,
    fixture_sqrt,
    local_submodularity_instance,
)
from ddlandscape.cost import standard_costs

ID = CostFunction.identity()


# -- independent scalar oracles --------------------------------------------------


def naive_discrete_convexity(values):
    """All pairs, alpha on the grid k/L with L = 2 lcm(1..max gap), which hits every breakpoint
    and an interior point of every stretch between breakpoints."""
    pts = sorted(values)
    for x, y in itertools.combinations(pts, 2):
        gap = max(abs(a - b) for a, b in zip(x, y))
        L = 2 * math.lcm(*range(1, gap + 1))
        for k in range(1, L):
            alpha = Fraction(k, L)
            z = [alpha * a + (1 - alpha) * b for a, b in zip(x, y)]
            box = itertools.product(*[range(math.floor(c), math.ceil(c) + 1) for c in z])
            nb = [p for p in box if p in values and max(abs(pi - zi) for pi, zi in zip(p, z)) < 1]
            if nb and min(values[p] for p in nb) > alpha * values[x] + (1 - alpha) * values[y]:
                return False
    return True


def naive_local_submodularity(values):
    d = len(next(iter(values)))
    for x in values:
        for u in itertools.product((-1, 0, 1), repeat=d):
            if not any(u):
                continue
            a = tuple(xi + ui for xi, ui in zip(x, u))
            j = tuple(max(p, q) for p, q in zip(x, a))
            m = tuple(min(p, q) for p, q in zip(x, a))
            if all(p in values for p in (a, j, m)) and values[a] + values[x] < values[j] + values[m]:
                return False
    return True


def naive_aggregate(values):
    d = len(next(iter(values)))

    def e(x, *axes):
        p = list(x)
        for k in axes:
            p[k] += 1
        return tuple(p)

    for x in values:
        for i in range(d):
            pts = [(e(x, i, j), e(x, j), e(x, i)) for j in range(d)]
            if all(p in values for trip in pts for p in trip):
                s = sum(values[a] - values[b] - values[c] + values[x] for a, b, c in pts)
                if s < 0:
                    return False
    return True


# -- sequence examples ------------------------------------------------------------


def test_quasiconvex_examples():
    assert check_quasiconvex(star_landscape(7, ID).values).verdict == HOLDS
    r = check_quasiconvex(fixture_alternating(7))
    assert r.verdict == FAILS
    i, j, k = r.witness["indices"]
    a = fixture_alternating(7)
    assert a[j - 1] > max(a[i - 1], a[k - 1])
    assert check_quasiconvex([5] * 6).verdict == HOLDS


@pytest.mark.parametrize("n", range(3, 13))
@pytest.mark.parametrize("name", ["identity", "power:2", "power:3"])
def test_star_convex(n, name):
    assert check_convex_sequence(star_landscape(n, standard_costs()[name]).values).verdict == HOLDS


def test_fixture_q():
    q = fixture_sqrt(7)
    assert check_convex_sequence(q).verdict == FAILS
    assert check_quasiconvex(q).verdict == HOLDS
    r = check_secant_line(q)
    assert r.verdict == FAILS
    i, j, k = r.witness["indices"]
    chord = q[i - 1] + (q[k - 1] - q[i - 1]) * (j - i) / (k - i)
    assert q[j - 1] > chord + 1e-9


def test_fixture_quadratic_is_star():
    assert fixture_quadratic(9) == list(star_landscape(9, ID).values)


def test_arithmetic_progression():
    r = check_convex_sequence([2, 5, 8, 11])
    assert r.verdict == HOLDS
    assert check_secant_line([1, 2, 3]).verdict == HOLDS


def test_forward_differences_examples():
    assert check_forward_differences(star_landscape(9, ID).values).verdict == HOLDS
    assert check_forward_differences([3, 1, 3]).verdict == HOLDS
    assert check_forward_differences([1, 3, 1]).verdict == FAILS


def test_secant_star():
    assert check_secant_line(star_landscape(8, ID).values).verdict == HOLDS


def test_short_sequences_not_applicable():
    for chk in (check_quasiconvex, check_convex_sequence, check_forward_differences, check_secant_line):
        assert chk([1, 2]).verdict == NOT_APPLICABLE


def test_float_tolerance():
    a = [1.0, 0.5 + 1e-12, 0.0]
    assert check_convex_sequence(a).verdict == HOLDS
    assert check_convex_sequence([1.0, 0.5 + 1e-6, 0.0]).verdict == FAILS
    assert check_convex_sequence([1, 2, 1], tol=0).verdict == FAILS


# -- grid examples -------------------------------------------------------------------


def test_star_as_grid():
    land = star_landscape(9, CostFunction.power(2))
    rep = audit(land.to_grid_function())
    assert all(e.verdict == HOLDS for e in rep)
    ls = rep["local_submodularity"]
    assert ls.checked > 0


def test_one_dimensional_submodularity_is_equality():
    gf = GridFunction.from_sequence([5, 1, 7, 2])
    for x in gf.domain:
        for u in [(-1,), (1,)]:
            inst = local_submodularity_instance(gf, x, u)
            if inst is not None:
                assert inst["lhs"] == inst["rhs"]


def test_aggregate_1d_reduces_to_second_difference():
    assert check_aggregate_monotonicity(GridFunction.from_sequence([4, 1, 0, 1, 4])).verdict == HOLDS
    assert check_aggregate_monotonicity(GridFunction.from_sequence([0, 3, 4, 3])).verdict == FAILS


def test_discrete_convexity_hand_witness():
    # quasistar n=4 identity: x=(1,2,3), y=(2,3,1), alpha=1/2, z=(3/2,5/2,2);
    # the only realisable neighbour is (1,3,2) with cost 6 > (5+5)/2
    gf = quasistar_grid(4, ID).to_grid_function()
    assert gf(1, 2, 3) == 5 and gf(2, 3, 1) == 5 and gf(1, 3, 2) == 6
    lhs, nb = discrete_convexity_instance(gf, (1, 2, 3), (2, 3, 1), Fraction(1, 2))
    assert (lhs, nb) == (5, 6)
    assert check_discrete_convexity(gf).verdict == FAILS


def test_power2_submodularity_witness_crosses():
    r = check_local_submodularity(quasistar_grid(6, CostFunction.power(2)).to_grid_function())
    assert r.verdict == FAILS
    assert crosses(r.witness)
    assert r.witness["lhs"] < r.witness["rhs"]


def test_identity_raw_grid_submodularity():
    # every crossing instance on the raw identity grid touches a hole
    r = check_local_submodularity(quasistar_grid(8, ID).to_grid_function())
    assert r.verdict == HOLDS
    assert r.skipped > 0


def test_aggregate_quasistar():
    for n in (7, 9):
        for name in ("identity", "power:2"):
            r = check_aggregate_monotonicity(quasistar_grid(n, standard_costs()[name]).to_grid_function())
            assert r.verdict == HOLDS and r.checked > 0
    r = check_aggregate_monotonicity(quasistar_grid(7, CostFunction.power(3)).to_grid_function())
    assert r.verdict == FAILS
    assert aggregate_instance(GridFunction(quasistar_grid(7, CostFunction.power(3)).cells), r.witness["x"], r.witness["axis"])["sum"] < 0


def test_stop_at_first_same_witness():
    gf = quasistar_grid(9, CostFunction.power(2)).to_grid_function()
    full = check_discrete_convexity(gf)
    fast = check_discrete_convexity(gf, stop_at_first=True)
    assert full.witness == fast.witness
    assert full.complete
    assert fast.failures <= full.failures


def test_audit_dims_and_report():
    rep = audit(quasistar_grid(5, ID).to_grid_function(), label="q5")
    assert rep.verdict("quasiconvex") == NOT_APPLICABLE
    assert set(rep.entries) == set(ALL_PROPERTIES)
    assert rep.mismatches({"quasiconvex": NOT_APPLICABLE}) == []
    assert rep.mismatches({"discrete_convexity": HOLDS}) == ["discrete_convexity"]
    js = rep.to_json()
    assert {"property", "verdict", "witness", "skipped", "tolerance"} <= set(js[0])
    assert "q5" in rep.summary()
    with pytest.raises(ValueError):
        audit([1, 2, 3], ["bogus"])


def test_grid_function_validation():
    with pytest.raises(ValueError):
        GridFunction({})
    with pytest.raises(ValueError):
        GridFunction({(1,): 1, (1, 2): 3})
    with pytest.raises(ValueError):
        GridFunction({(1, 2, 3, 4): 0})


# -- property-based ---------------------------------------------------------------

ints = st.integers(-20, 20)


@given(st.lists(ints, min_size=3, max_size=12))
def test_sequence_equivalences(a):
    c = check_convex_sequence(a).verdict
    assert check_forward_differences(a).verdict == c
    assert check_secant_line(a).verdict == c
    gf = GridFunction.from_sequence(a)
    assert check_discrete_convexity(gf).verdict == c
    assert check_aggregate_monotonicity(gf).verdict == c
    assert check_local_submodularity(gf).verdict == HOLDS
    if c == HOLDS:
        assert check_quasiconvex(a).verdict == HOLDS


@given(st.lists(st.floats(-100, 100, allow_nan=False), min_size=3, max_size=10))
def test_convex_implies_quasiconvex_floats(a):
    if check_convex_sequence(a).verdict == HOLDS:
        assert check_quasiconvex(a).verdict == HOLDS


@given(st.lists(ints, min_size=3, max_size=10))
def test_quasiconvex_matches_bruteforce(a):
    want = all(a[j] <= max(a[i], a[k]) for i, j, k in itertools.combinations(range(len(a)), 3))
    assert (check_quasiconvex(a).verdict == HOLDS) == want


@st.composite
def holey_grids(draw, dims):
    side = draw(st.integers(2, 4 if dims == 2 else 3))
    cells = {}
    for p in itertools.product(range(1, side + 1), repeat=dims):
        if draw(st.booleans()) or not cells:
            cells[p] = draw(st.integers(-6, 6))
    return cells


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3]).flatmap(holey_grids))
def test_grid_checkers_match_naive(values):
    assume(len(values) >= 2)
    gf = GridFunction(values)
    dc = check_discrete_convexity(gf)
    assert (dc.verdict == HOLDS) == naive_discrete_convexity(values)
    assert (check_local_submodularity(gf).verdict == HOLDS) == naive_local_submodularity(values)
    assert (check_aggregate_monotonicity(gf).verdict == HOLDS) == naive_aggregate(values)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([1, 2, 3]).flatmap(holey_grids))
def test_witnesses_reevaluate(values):
    assume(len(values) >= 2)
    gf = GridFunction(values)
    r = check_discrete_convexity(gf)
    if r.verdict == FAILS:
        w = r.witness
        lhs, nb = discrete_convexity_instance(gf, w["x"], w["y"], w["alpha"])
        assert nb > lhs
    r = check_local_submodularity(gf)
    if r.verdict == FAILS:
        inst = local_submodularity_instance(gf, r.witness["x"], r.witness["u"])
        assert inst["lhs"] < inst["rhs"]
    r = check_aggregate_monotonicity(gf)
    if r.verdict == FAILS:
        assert aggregate_instance(gf, r.witness["x"], r.witness["axis"])["sum"] < 0


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 7), st.sampled_from(["identity", "power:2", "power:3", "exp:2"]))
def test_quasistar_witnesses_reevaluate(n, name):
    g = standard_costs()[name]
    gf = quasistar_grid(n, g).to_grid_function()
    rep = audit(gf, ["discrete_convexity", "local_submodularity", "aggregate_monotonicity"])
    for e in rep:
        assert (e.verdict == FAILS) == (e.witness is not None)
    w = rep["discrete_convexity"].witness
    if w:
        lhs, nb = discrete_convexity_instance(gf, w["x"], w["y"], w["alpha"])
        assert nb > lhs
