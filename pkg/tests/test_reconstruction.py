import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from johnson_eigen.combinatorics import ParameterError, binom, eberlein
from johnson_eigen.eigenfunctions import (
    combination, eigenspace_basis, induce, is_eigenfunction, radial,
)
from johnson_eigen.graph import (
    JohnsonParams, SphereSpec, Vertex, ball, canonical_center, johnson, sphere,
)
from johnson_eigen.reconstruction import (
    F1, F2, CounterexampleError, Inconsistent, NotUnique, Unique, check_counterexample,
    counterexample_sphere, criterion, evaluation_grid, hypothesis_holds, oracle_ball,
    oracle_sphere, f0_sphere_center, reconstruct_from_ball, reduced_counterexample, reconstruct_from_sphere,
)
from johnson_eigen.sweep import sample_centers

J93 = JohnsonParams(9, 3)
J83 = JohnsonParams(8, 3)


def random_element(params, i, rng):
    basis = eigenspace_basis(params, i)
    return combination(basis.basis, [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in basis])


def window_instances(n_max):
    out = []
    for n in range(n_max + 1):
        for w in range(n // 2 + 1):
            for i in range(w + 1):
                for r in range(i, w - i + 1):
                    if hypothesis_holds(i, r, w, n):
                        out.append((i, r, w, n))
    return out


# ---------------------------------------------------------------- F1 / F2

def test_f1_single_term():
    for i, r, w, n in [(1, 1, 3, 9), (2, 2, 5, 12), (0, 3, 4, 10)]:
        assert F1(0, 0, i, r, w, n) == Fraction(eberlein(r, i, w, n), binom(w, r) * binom(n - w, r))


def test_f1_named_values():
    assert F1(0, 0, 1, 2, 3, 9) == 0
    assert F1(0, 0, 1, 1, 3, 9) == Fraction(1, 2)
    assert F2(0, 0, 1, 1, 3, 9) == Fraction(1, 2)


def test_f2_1_0_2_2_4_12_is_finite_and_matches_the_oracle_verdict():
    value = F2(1, 0, 2, 2, 4, 12)
    assert isinstance(value, Fraction)
    assert value == induced_value(1, 0, 2, 2, 4, 12)
    rep = criterion(2, 2, JohnsonParams(12, 4))
    assert rep.reconstructible == oracle_sphere(2, 2, JohnsonParams(12, 4)).unique


def test_f_argument_order_checked():
    with pytest.raises(ParameterError):
        F1(1, 0, 2, 2, 4, 12)
    with pytest.raises(ParameterError):
        F2(0, 1, 2, 2, 4, 12)


@pytest.mark.parametrize("inst", window_instances(12))
def test_f2_equals_f1_on_the_diagonal(inst):
    i, r, w, n = inst
    for k in range(i):
        if 2 * k < i:
            assert F1(k, k, i, r, w, n) == F2(k, k, i, r, w, n)


def induced_value(k1, k2, i, r, w, n):
    """Evaluate I(h)(z) directly, with h the spherical function (h(x0') = 1)."""
    t = k1 + k2
    hp = johnson(n - 2 * t, w - 2 * k1)
    h = radial(canonical_center(hp), i - t, hp)
    g = induce(h, w - t)
    a, b = w - 2 * k1, n - w - 2 * k2
    z = [1] * (w - r - k1) + [0] * (r - k1) + [1] * (r - k2) + [0] * (b - (r - k2))
    assert len(z) == a + b
    return g(Vertex(tuple(z)))


@pytest.mark.parametrize("inst", window_instances(11))
def test_f_values_equal_induced_spherical_function_at_z(inst):
    i, r, w, n = inst
    for k1, k2, which in evaluation_grid(i):
        fn = F1 if which == "F1" else F2
        assert fn(k1, k2, i, r, w, n) == induced_value(k1, k2, i, r, w, n)


# ---------------------------------------------------------------- criterion

def test_evaluation_grid_coverage():
    assert evaluation_grid(0) == []
    assert evaluation_grid(1) == [(0, 0, "F1"), (0, 0, "F2")]
    assert evaluation_grid(3) == [
        (0, 0, "F1"), (0, 0, "F2"),
        (0, 1, "F1"), (1, 0, "F2"),
        (0, 2, "F1"), (1, 1, "F1"), (1, 1, "F2"), (2, 0, "F2"),
    ]


@pytest.mark.parametrize("r", range(4))
def test_criterion_index_zero(r):
    rep = criterion(0, r, JohnsonParams(10, 3))
    assert rep.reconstructible and rep.evaluations == ()


def test_criterion_named_instances():
    bad = criterion(1, 2, J93)
    assert not bad.reconstructible
    assert (bad.failing.k1, bad.failing.k2, bad.failing.which) == (0, 0, "F1")
    assert criterion(1, 1, J93).reconstructible


@pytest.mark.parametrize("w, n", [(2, 8), (3, 9), (4, 12)])
def test_criterion_radius_window(w, n):
    rep = criterion(2, 1, JohnsonParams(n, w))
    assert not rep.radius_window_ok and not rep.reconstructible
    assert rep.failing is None


def test_criterion_advisory_outside_n_window():
    rep = criterion(1, 1, JohnsonParams(6, 3))
    assert rep.advisory and not rep.hypothesis_ok


def test_criterion_verdict_invariant():
    for i, r, w, n in window_instances(12):
        rep = criterion(i, r, JohnsonParams(n, w))
        assert rep.reconstructible == (rep.radius_window_ok and all(e.value != 0 for e in rep.evaluations))
        assert [(e.k1, e.k2, e.which) for e in rep.evaluations] == evaluation_grid(i)


def test_criterion_range_errors():
    with pytest.raises(ParameterError):
        criterion(4, 1, J93)
    with pytest.raises(ParameterError):
        criterion(1, 4, J93)


# ---------------------------------------------------------------- oracles

def test_oracle_index_zero_always_unique():
    for r in range(4):
        assert oracle_sphere(0, r, J93).unique


def test_oracle_named_instances():
    bad = oracle_sphere(1, 2, J93)
    assert not bad.unique and bad.kernel_dim == 1
    rad = radial(canonical_center(J93), 1)
    k = next(k for k, x in enumerate(rad.values) if x)
    assert bad.witness == rad.scale(bad.witness.values[k] / rad.values[k])
    assert oracle_sphere(1, 1, J93).unique


def test_oracle_witness_vanishes_on_sphere():
    o = oracle_sphere(2, 1, JohnsonParams(8, 3))
    assert not o.unique
    assert not any(o.witness.restrict(sphere(canonical_center(J83), 1)))
    assert is_eigenfunction(o.witness, 2) and not o.witness.is_zero()


def test_oracle_ball_examples():
    for i in range(3):
        for r in range(i, 3):
            assert oracle_ball(i, r, J83).unique
    o = oracle_ball(2, 1, J83)
    assert not o.unique
    assert oracle_ball(3, 3, J83).unique


@pytest.mark.parametrize("inst", [(1, 2, 3, 9), (1, 1, 3, 9), (2, 1, 4, 10), (1, 0, 2, 7)])
def test_oracle_center_independence(inst):
    i, r, w, n = inst
    p = JohnsonParams(n, w)
    centers = sample_centers(p)
    assert len(centers) == 3
    assert len({oracle_sphere(i, r, p, c).kernel_dim for c in centers}) == 1


# ---------------------------------------------------------------- reconstruction

@given(st.integers(0, 2), st.integers(0, 2), st.lists(st.fractions(max_denominator=7), min_size=70, max_size=70),
       st.sampled_from(sample_centers(J83)))
def test_ball_round_trip_property(i, r, coeffs, center):
    if r < i:
        i, r = r, i
    basis = eigenspace_basis(J83, i)
    f = combination(basis.basis, coeffs[:len(basis)])
    spec = SphereSpec(center, r)
    assert reconstruct_from_ball(i, spec, f) == Unique(f)


def test_reconstruct_from_ball_round_trip():
    rng = random.Random(11)
    f = random_element(J83, 1, rng)
    spec = SphereSpec(canonical_center(J83), 1)
    res = reconstruct_from_ball(1, spec, {v: f(v) for v in spec.ball()})
    assert res == Unique(f)


def test_reconstruct_zero_on_ball():
    spec = SphereSpec(canonical_center(J83), 2)
    res = reconstruct_from_ball(2, spec, {v: 0 for v in spec.ball()})
    assert isinstance(res, Unique) and res.function.is_zero()


def test_reconstruct_wrong_eigenspace_is_inconsistent():
    f = random_element(J83, 2, random.Random(3))
    spec = SphereSpec(canonical_center(J83), 2)
    assert reconstruct_from_ball(1, spec, {v: f(v) for v in spec.ball()}) == Inconsistent()


def test_reconstruct_from_sphere():
    rng = random.Random(5)
    f = random_element(J93, 1, rng)
    good = SphereSpec(canonical_center(J93), 1)
    assert reconstruct_from_sphere(1, good, f) == Unique(f)
    bad = SphereSpec(canonical_center(J93), 2)
    res = reconstruct_from_sphere(1, bad, {v: f(v) for v in bad.sphere()})
    assert isinstance(res, NotUnique)
    assert not res.witness.is_zero()
    assert not any(res.witness.restrict(bad.sphere()))
    assert res.particular.restrict(bad.sphere()) == f.restrict(bad.sphere())


def test_reconstruct_zero_sphere_data():
    spec = SphereSpec(canonical_center(J93), 1)
    res = reconstruct_from_sphere(1, spec, {v: 0 for v in spec.sphere()})
    assert isinstance(res, Unique) and res.function.is_zero()


def test_reconstruct_coverage_errors():
    spec = SphereSpec(canonical_center(J93), 1)
    data = {v: 0 for v in spec.sphere()}
    data.pop(spec.sphere()[0])
    with pytest.raises(ParameterError):
        reconstruct_from_sphere(1, spec, data)
    data = {v: 0 for v in spec.ball()}
    with pytest.raises(ParameterError):
        reconstruct_from_sphere(1, spec, data)


# ---------------------------------------------------------------- counterexamples

def test_counterexample_ball_route():
    p = JohnsonParams(12, 4)
    f = counterexample_sphere(2, 1, p)
    assert check_counterexample(f, 2, 1, p)
    assert not any(f.restrict(ball(canonical_center(p), 1)))


def test_counterexample_radial_route():
    f = counterexample_sphere(1, 2, J93)
    assert f == radial(canonical_center(J93), 1)


def test_counterexample_sphere_route():
    p = JohnsonParams(10, 4)
    assert criterion(2, 3, p).radius_window_ok is False
    f = counterexample_sphere(2, 3, p)
    assert check_counterexample(f, 2, 3, p)


def test_counterexample_refused_when_reconstructible():
    with pytest.raises(CounterexampleError):
        counterexample_sphere(1, 1, J93)


def test_reduced_route_instance():
    # the only n <= 16 instance whose first vanishing value has k1 + k2 > 0
    p = JohnsonParams(14, 5)
    rep = criterion(2, 3, p)
    assert (rep.failing.k1, rep.failing.k2, rep.failing.which) == (1, 0, "F2")
    f = reduced_counterexample(1, 0, 2, 3, p)
    assert check_counterexample(f, 2, 3, p)
    assert counterexample_sphere(2, 3, p) == f


@pytest.mark.parametrize("inst", [(2, 2, 4, 10), (2, 2, 5, 12), (3, 3, 6, 12), (2, 1, 4, 9)])
def test_reduced_construction_is_eigenfunction(inst):
    i, r, w, n = inst
    p = JohnsonParams(n, w)
    for k1, k2, _ in evaluation_grid(i):
        f = reduced_counterexample(k1, k2, i, r, p)
        assert not f.is_zero() and is_eigenfunction(f, i)


# ---------------------------------------------------------------- odd-w gap

@pytest.mark.parametrize("i, r, w, n", [(1, 1, 1, 5), (1, 1, 1, 9), (2, 2, 3, 9), (2, 2, 3, 11)])
def test_window_failure_without_witness(i, r, w, n):
    """w odd, i = r = (w+1)/2: the window fails yet the sphere determines f."""
    p = JohnsonParams(n, w)
    assert hypothesis_holds(i, r, w, n)
    assert not criterion(i, r, p).radius_window_ok
    assert oracle_sphere(i, r, p).unique
    with pytest.raises(ParameterError):
        f0_sphere_center(i, r, p)


def test_complete_graph_case_by_hand():
    # J(n,1) = K_n, lambda_1 = -1: f vanishing off x0 has f(x0) = -(sum of others) = 0
    p = JohnsonParams(6, 1)
    basis = eigenspace_basis(p, 1)
    x0 = canonical_center(p)
    for f in basis.basis:
        assert f(x0) == -sum(f(y) for y in sphere(x0, 1))


def test_odd_weight_family_with_vanishing_f_has_a_witness():
    # i = r = (w+1)/2 again, but F1(1,1) = 0 here, so the reduced route applies
    p = JohnsonParams(13, 5)
    rep = criterion(3, 3, p)
    assert not rep.radius_window_ok
    assert F1(1, 1, 3, 3, 5, 13) == 0
    assert check_counterexample(counterexample_sphere(3, 3, p), 3, 3, p)
