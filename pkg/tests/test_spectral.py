import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heawood.graph import (
    build,
    complement,
    complete,
    complete_bipartite,
    cube,
    cycle,
    disjoint_union,
    join,
    path,
    petersen,
    star,
)
from heawood.spectral import (
    ConvergenceError,
    adjacency_spectrum,
    algebraic_connectivity,
    fiedler_vector,
    is_ramanujan,
    jacobi_eigh,
    laplacian_matrix,
    laplacian_spectrum,
    ramanujan_check,
)


def lapack(g):
    return np.linalg.eigvalsh(laplacian_matrix(g))


@st.composite
def symmetric_matrices(draw):
    n = draw(st.integers(1, 12))
    vals = draw(st.lists(st.floats(-50, 50), min_size=n * n, max_size=n * n))
    m = np.array(vals).reshape(n, n)
    return (m + m.T) / 2


@given(symmetric_matrices())
@settings(max_examples=150, deadline=None)
def test_jacobi_matches_lapack(m):
    w, v = jacobi_eigh(m, vectors=True)
    scale = max(1.0, np.linalg.norm(m))
    assert np.allclose(w, np.linalg.eigvalsh(m), atol=1e-10 * scale)
    assert np.allclose(m @ v, v * w, atol=1e-9 * scale)
    assert np.allclose(v.T @ v, np.eye(len(w)), atol=1e-10)


def test_jacobi_rejects_bad_input():
    with pytest.raises(ValueError):
        jacobi_eigh(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        jacobi_eigh(np.ones((2, 3)))
    with pytest.raises(ConvergenceError):
        jacobi_eigh(np.array([[1.0, 1.0], [1.0, 2.0]]), max_sweeps=0)


def test_diagonal_input_needs_no_sweeps():
    w, _ = jacobi_eigh(np.diag([3.0, 1.0, 2.0]), max_sweeps=0)
    assert list(w) == [1.0, 2.0, 3.0]


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete(5), [0, 5, 5, 5, 5]),
        (star(5), [0, 1, 1, 1, 5]),
        (complete_bipartite(2, 3), [0, 2, 2, 3, 5]),
        (cube(), [0, 2, 2, 2, 4, 4, 4, 6]),
        (petersen(), [0] + [2] * 5 + [5] * 4),
    ],
)
def test_known_spectra(g, expected):
    assert np.allclose(laplacian_spectrum(g).values, expected, atol=1e-10)


@pytest.mark.parametrize("n", [3, 4, 7, 12, 25])
def test_cycle_and_path(n):
    assert math.isclose(algebraic_connectivity(cycle(n)), 2 - 2 * math.cos(2 * math.pi / n), abs_tol=1e-10)
    assert math.isclose(algebraic_connectivity(path(n)), 2 - 2 * math.cos(math.pi / n), abs_tol=1e-10)


def test_disconnected_has_zero_connectivity():
    g = disjoint_union(cycle(4), complete(3))
    spec = laplacian_spectrum(g)
    assert spec.zero_multiplicity() == 2
    assert abs(algebraic_connectivity(g)) < 1e-10


def test_complement_identity():
    # L(G) + L(complement) = nI - J, so the nonzero parts are n - lambda
    for g in (petersen(), cube(), build(6, [(0, 1), (1, 2), (3, 4)])):
        n = g.n
        ours = np.array(laplacian_spectrum(g).values[1:])
        theirs = np.array(laplacian_spectrum(complement(g)).values[1:])
        assert np.allclose(np.sort(n - ours), theirs, atol=1e-9)


@pytest.mark.parametrize("g1, g2", [(cycle(5), complete(2)), (path(4), star(4)), (petersen(), cycle(3))])
def test_join_formula(g1, g2):
    a = algebraic_connectivity(join(g1, g2))
    expected = min(algebraic_connectivity(g1) + g2.n, algebraic_connectivity(g2) + g1.n)
    assert math.isclose(a, expected, abs_tol=2e-8)


def test_against_lapack(graphs_upto):
    for g in graphs_upto(6, 2):
        assert np.allclose(laplacian_spectrum(g).values, lapack(g), atol=1e-10)


def test_fiedler_vector():
    g = path(6)
    v = fiedler_vector(g)
    lap = laplacian_matrix(g)
    a = algebraic_connectivity(g)
    assert np.allclose(lap @ v, a * v, atol=1e-9)
    assert abs(v.sum()) < 1e-9


def test_adjacency_spectrum():
    assert np.allclose(adjacency_spectrum(petersen()).values, [-2] * 4 + [1] * 5 + [3], atol=1e-10)


def test_ramanujan():
    check = ramanujan_check(petersen())
    assert check.ramanujan and check.degree == 3
    assert math.isclose(check.threshold, 2 * math.sqrt(2))
    assert math.isclose(check.worst, 2.0, abs_tol=1e-10)
    assert is_ramanujan(complete(6))
    with pytest.raises(ValueError):
        ramanujan_check(path(4))
