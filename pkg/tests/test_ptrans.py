"""Density matrices, partial transposes, negativity."""

import numpy as np
import pytest

from helpers import schmidt_negativity
from negfonts import (
    catalog_state,
    decomposition_residual,
    density_from_pure,
    global_pt,
    hermitian_eigenvalues,
    kway_pt,
    make_state,
    negative_eigenvalues,
    negativity,
    normalize,
    random_state,
)
from negfonts.errors import BadK, NotHermitian, QubitOutOfRange


def test_density_product_state():
    rho = density_from_pure(make_state(2, [1, 0, 0, 0]))
    expected = np.zeros((4, 4))
    expected[0, 0] = 1
    np.testing.assert_allclose(rho, expected)


def test_density_ghz4():
    rho = density_from_pure(normalize(catalog_state("GHZ4")))
    nz = np.argwhere(np.abs(rho) > 1e-12)
    assert sorted(map(tuple, nz)) == [(0, 0), (0, 15), (15, 0), (15, 15)]
    np.testing.assert_allclose(np.abs(rho[0, 15]), 0.5)
    assert np.trace(rho) == pytest.approx(1.0)


def test_density_rank_one():
    s = random_state(3, 5)
    eig = hermitian_eigenvalues(density_from_pure(s))
    assert eig[-1] == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(eig[:-1], 0.0, atol=1e-12)


def test_global_pt_diagonal_invariant():
    rho = density_from_pure(make_state(2, [1, 0, 0, 0]))
    np.testing.assert_allclose(global_pt(rho, 1, 2), rho)


def test_global_pt_bell_eigenvalues():
    rho = density_from_pure(catalog_state("Bell"))
    eig = hermitian_eigenvalues(global_pt(rho, 1, 2))
    np.testing.assert_allclose(eig, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)


def test_global_pt_involution_exact():
    for trial in range(500):
        n = 2 + trial % 3
        s = random_state(n, (101, trial))
        rho = density_from_pure(s)
        p = 1 + trial % n
        assert np.array_equal(global_pt(global_pt(rho, p, n), p, n), rho)


def test_transposes_stay_hermitian():
    for trial in range(50):
        n = 3 + trial % 2
        rho = density_from_pure(random_state(n, (7, trial)))
        for p in range(1, n + 1):
            g = global_pt(rho, p, n)
            assert np.max(np.abs(g - g.conj().T)) < 1e-12
            for k in range(2, n + 1):
                m = kway_pt(rho, p, k, n)
                assert np.max(np.abs(m - m.conj().T)) < 1e-12


def test_kway_ghz4_equals_global():
    # a state with only 4-way coherences has identical global and 4-way transposes
    rho = density_from_pure(normalize(catalog_state("GHZ4")))
    for p in range(1, 5):
        np.testing.assert_allclose(kway_pt(rho, p, 4, 4), global_pt(rho, p, 4),
                                   atol=1e-14)


def test_kway_diagonal_invariant():
    rho = np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)
    for k in (2,):
        np.testing.assert_allclose(kway_pt(rho, 1, k, 2), rho)


def test_kway_n2_equals_global():
    rho = density_from_pure(catalog_state("Bell"))
    np.testing.assert_allclose(kway_pt(rho, 1, 2, 2), global_pt(rho, 1, 2))


def test_kway_errors():
    rho = density_from_pure(catalog_state("Bell"))
    with pytest.raises(BadK):
        kway_pt(rho, 1, 5, 2)
    with pytest.raises(QubitOutOfRange):
        kway_pt(rho, 3, 2, 2)
    with pytest.raises(QubitOutOfRange):
        global_pt(rho, 0, 2)


def test_decomposition_identity():
    worst = 0.0
    for trial in range(250):
        n = 3 + trial % 2
        s = random_state(n, (211, trial))
        for p in range(1, n + 1):
            worst = max(worst, decomposition_residual(s, p))
    assert worst < 1e-12


def test_decomposition_ghz4_tight():
    s = normalize(catalog_state("GHZ4"))
    for p in range(1, 5):
        assert decomposition_residual(s, p) < 1e-14


def test_eigenvalues_simple():
    np.testing.assert_allclose(hermitian_eigenvalues(np.eye(4) / 4), [0.25] * 4)
    with pytest.raises(NotHermitian):
        hermitian_eigenvalues(np.array([[0, 1], [0, 0]], dtype=complex))


def test_eigenvalues_trace_and_reconstruction():
    rng = np.random.default_rng(31)
    for _ in range(20):
        g = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
        m = g + g.conj().T
        eig = hermitian_eigenvalues(m)
        assert abs(np.sum(eig) - np.trace(m).real) < 1e-10
        vals, vecs = np.linalg.eigh(m)
        np.testing.assert_allclose(vals, eig, atol=1e-12)
        recon = (vecs * vals) @ vecs.conj().T
        assert np.max(np.abs(m - recon)) < 1e-9


def test_negativity_known_values():
    assert negativity(catalog_state("Bell"), 1) == pytest.approx(1.0, abs=1e-12)
    assert negativity(normalize(catalog_state("GHZ3")), 1) == pytest.approx(1.0, abs=1e-12)
    product = make_state(4, np.eye(16)[0])
    for p in range(1, 5):
        assert negativity(product, p) == pytest.approx(0.0, abs=1e-12)
    assert len(negative_eigenvalues(catalog_state("Bell"), 1)) == 1


def test_negativity_matches_schmidt_oracle():
    for trial in range(200):
        n = 2 + trial % 3
        s = random_state(n, (307, trial))
        p = 1 + trial % n
        assert negativity(s, p) == pytest.approx(schmidt_negativity(s, p), abs=1e-9)
        assert negativity(s, p) >= -1e-12
