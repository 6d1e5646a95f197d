import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from birkhoff import (
    BadEpsilonError,
    DegenerateSampleError,
    DimensionMismatchError,
    NotInConeError,
    complex_hilbert_distance,
    euclidean_distance,
    hilbert_distance,
    in_positive_cone,
    in_simplex_neighborhood,
    metric_equivalence_ratios,
    metric_sample,
    normalize,
    random_complex_perturbation,
    random_simplex_vector,
)
from oracles import brute_complex_hilbert, brute_hilbert

LOG2 = 0.6931471805599453
LOG4 = 1.3862943611198906

positive_vectors = st.lists(
    st.floats(min_value=1e-3, max_value=1e3), min_size=2, max_size=6
)


def test_identity_is_exact_zero():
    v = np.array([1 / 3, 2 / 3])
    assert hilbert_distance(v, v) == 0.0


def test_two_point_derived_value():
    v = [0.5, 0.5]
    w = [2 / 3, 1 / 3]
    d = hilbert_distance(v, w)
    assert d == pytest.approx(LOG2, abs=1e-12)
    assert d == pytest.approx(brute_hilbert(v, w), abs=1e-12)


def test_three_point_derived_value():
    v = [0.25, 0.5, 0.25]
    w = [0.5, 0.25, 0.25]
    d = hilbert_distance(v, w)
    assert d == pytest.approx(LOG4, abs=1e-12)
    assert d == pytest.approx(brute_hilbert(v, w), abs=1e-12)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        hilbert_distance([0.5, 0.5], [0.25, 0.5, 0.25])


def test_symmetry_is_exact():
    for seed in range(200):
        v = random_simplex_vector(4, seed=seed)
        w = random_simplex_vector(4, seed=seed + 1000)
        assert hilbert_distance(v, w) == hilbert_distance(w, v)


def test_triangle_inequality_real():
    for seed in range(200):
        u = random_simplex_vector(3, seed=3 * seed)
        v = random_simplex_vector(3, seed=3 * seed + 1)
        w = random_simplex_vector(3, seed=3 * seed + 2)
        assert hilbert_distance(u, w) <= (
            hilbert_distance(u, v) + hilbert_distance(v, w) + 1e-9
        )


@given(positive_vectors, st.floats(min_value=1e-4, max_value=1e4))
def test_projective_invariance(a, c):
    b = np.linspace(1.0, 2.0, num=len(a))
    base = hilbert_distance(normalize(a), normalize(b))
    scaled = hilbert_distance(normalize(c * np.asarray(a)), normalize(b))
    assert scaled == pytest.approx(base, abs=1e-12)


def test_complex_identity_and_real_slice():
    v = np.array([0.5 + 0j, 0.5 + 0j])
    w = np.array([2 / 3 + 0j, 1 / 3 + 0j])
    assert complex_hilbert_distance(v, v) == 0.0
    assert complex_hilbert_distance(v, w) == pytest.approx(LOG2, abs=1e-12)
    assert complex_hilbert_distance(v, w) == pytest.approx(
        hilbert_distance(v.real, w.real), abs=1e-12
    )


def test_complex_two_point_derived_value():
    v = np.array([0.5 + 0j, 0.5 + 0j])
    w = np.array([(1 + 0.1j) / 2, (1 - 0.1j) / 2])
    # single ratio pair for n=2; both ordered pairs share one modulus
    expected = abs(cmath.log((w[0] / w[1]) / (v[0] / v[1])))
    d = complex_hilbert_distance(v, w)
    assert d == pytest.approx(expected, abs=1e-13)
    assert d == pytest.approx(brute_complex_hilbert(v, w), abs=1e-13)


def test_complex_symmetry_is_exact():
    for seed in range(100):
        c = random_simplex_vector(3, seed=seed)
        x = random_complex_perturbation(c, 0.01, seed=seed + 1)
        y = random_complex_perturbation(c, 0.01, seed=seed + 2)
        assert complex_hilbert_distance(x, y) == complex_hilbert_distance(y, x)


def test_complex_rejects_cone_outsiders():
    bad = np.array([1 + 1j, -1j])
    good = np.array([0.5 + 0j, 0.5 + 0j])
    with pytest.raises(NotInConeError):
        complex_hilbert_distance(bad, good)
    with pytest.raises(NotInConeError):
        complex_hilbert_distance(good, bad)


def test_cone_membership():
    assert in_positive_cone(np.array([0.25 + 0j, 0.5 + 0j, 0.25 + 0j]))
    # ratio (1+i)/(-i) = -1+i has negative real part
    assert not in_positive_cone(np.array([1 + 1j, -1j]))
    assert not in_positive_cone(np.array([1.0 + 0j, 0.0 + 0j]))


def test_euclidean_distances():
    assert euclidean_distance([1.0, 2.0], [1.0, 2.0]) == 0.0
    assert euclidean_distance([0.0, 0.0], [3.0, 4.0]) == 5.0
    assert euclidean_distance([0.5, 0.5], [2 / 3, 1 / 3]) == pytest.approx(
        math.sqrt(2) / 6, abs=1e-12
    )
    with pytest.raises(DimensionMismatchError):
        euclidean_distance([1.0, 2.0], [1.0, 2.0, 3.0])


def test_neighborhood_explicit_witness():
    w = np.array([0.5 + 0.001j, 0.5 - 0.001j])
    assert in_simplex_neighborhood(w, 0.01)


def test_neighborhood_rejects_negative_real_coordinate():
    w = np.array([1.5 + 0j, -0.5 + 0j])
    assert not in_simplex_neighborhood(w, 0.5)


def test_neighborhood_bad_epsilon():
    w = np.array([0.5 + 0j, 0.5 + 0j])
    with pytest.raises(BadEpsilonError):
        in_simplex_neighborhood(w, 0.0)
    with pytest.raises(BadEpsilonError):
        in_simplex_neighborhood(w, 1.0)


def test_neighborhood_boundary_inside():
    # offsets at exactly (1 - 1e-9) * eps * v_i: rotated roots of unity around
    # the barycenter keep the sum at 1 and the offset moduli exact
    rng = np.random.default_rng(99)
    for _ in range(1000):
        n = int(rng.integers(2, 6))
        eps = float(rng.uniform(1e-4, 0.3))
        v = np.full(n, 1.0 / n)
        zeta = np.exp(2j * np.pi * (np.arange(n) / n + rng.uniform()))
        w = v * (1.0 + (1 - 1e-9) * eps * zeta)
        assert in_simplex_neighborhood(w, eps)


def test_neighborhood_boundary_outside_n2():
    # single-coordinate imaginary bump at (1 + 1e-6) * eps * v_1, re-centered
    # to sum 1; for eps <= 1e-3 the per-coordinate quadratic is infeasible
    rng = np.random.default_rng(101)
    for _ in range(1000):
        eps = float(rng.uniform(1e-4, 1e-3))
        w1 = 0.5 + 0.5j * (1 + 1e-6) * eps
        w = np.array([w1, 1.0 - w1])
        assert not in_simplex_neighborhood(w, eps)


def test_neighborhood_inside_cone_for_small_eps():
    for seed in range(300):
        v = random_simplex_vector(3, seed=seed)
        w = random_complex_perturbation(v, 0.1, seed=seed)
        if in_simplex_neighborhood(w, 0.1):
            assert in_positive_cone(w)


def test_metric_sample_dispatch():
    s = metric_sample([0.5, 0.5], [2 / 3, 1 / 3])
    assert s.hilbert == pytest.approx(LOG2, abs=1e-12)
    assert s.euclidean == pytest.approx(math.sqrt(2) / 6, abs=1e-12)
    v = np.array([0.5 + 0j, 0.5 + 0j])
    sc = metric_sample(v, v)
    assert sc.hilbert == 0.0 and sc.euclidean == 0.0
    # zero distance only happens for (projectively) equal points
    assert np.abs(sc.pair[0] - sc.pair[1]).max() <= 1e-12


def test_equivalence_ratios_finite_positive():
    S = [np.array([0.5, 0.5])]
    lo, hi = metric_equivalence_ratios(S, 1e-3, pairs=100, seed=5)
    assert 0.0 < lo <= hi < math.inf


def test_equivalence_ratios_deterministic():
    S = [random_simplex_vector(3, seed=s) for s in range(5)]
    first = metric_equivalence_ratios(S, 1e-3, pairs=200, seed=11)
    second = metric_equivalence_ratios(S, 1e-3, pairs=200, seed=11)
    assert first == second


def test_equivalence_ratio_barycenter_limit():
    # real-direction limit at the n=2 barycenter, computed by finite
    # differences from the defining formulas: d_E = t*sqrt(2), d_H -> 4t,
    # so d_E/d_H -> sqrt(2)/4 = 0.35355339059... (not 1/(2n))
    t = 1e-7
    v = [0.5, 0.5]
    w = [0.5 + t, 0.5 - t]
    oracle = (math.sqrt(2) * t) / brute_hilbert(v, w)
    assert oracle == pytest.approx(math.sqrt(2) / 4, abs=1e-9)
    library = euclidean_distance(v, w) / hilbert_distance(v, w)
    assert library == pytest.approx(math.sqrt(2) / 4, abs=1e-9)


def test_equivalence_ratios_degenerate_sample():
    # radius so small every pair is projectively equal at the 1e-10 guard
    S = [np.array([0.5, 0.5])]
    with pytest.raises(DegenerateSampleError):
        metric_equivalence_ratios(S, 1e-11, pairs=10, seed=0)


def test_equivalence_ratios_bad_arguments():
    S = [np.array([0.5, 0.5])]
    with pytest.raises(BadEpsilonError):
        metric_equivalence_ratios(S, 0.5, pairs=10, seed=0)
    with pytest.raises(ValueError):
        metric_equivalence_ratios(S, 1e-3, pairs=0, seed=0)
    with pytest.raises(ValueError):
        metric_equivalence_ratios([], 1e-3, pairs=10, seed=0)


def test_complex_triangle_inequality_recorded_not_asserted():
    # the complex metric's triangle inequality is only probed empirically on
    # neighborhood triples; violations are counted and reported
    violations = 0
    worst = 0.0
    for seed in range(300):
        c = random_simplex_vector(3, seed=seed)
        a = random_complex_perturbation(c, 0.01, seed=3 * seed)
        b = random_complex_perturbation(c, 0.01, seed=3 * seed + 1)
        d = random_complex_perturbation(c, 0.01, seed=3 * seed + 2)
        excess = complex_hilbert_distance(a, d) - (
            complex_hilbert_distance(a, b) + complex_hilbert_distance(b, d)
        )
        worst = max(worst, excess)
        if excess > 1e-9:
            violations += 1
    print(f"complex triangle probe: {violations} violations, worst excess {worst:.3e}")
