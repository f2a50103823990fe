"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import kitnet as kn


def periodic(n, mu, delta):
    return kn.ChainSpec(n, 1.0, mu, delta, "periodic")


def test_ground_state_energy_and_parity():
    spec = periodic(8, 0.0, 1.0)
    g = kn.ground_state(spec)
    assert g.energy == pytest.approx(-8.0, abs=1e-10)
    assert g.parity == -1
    assert abs(np.linalg.norm(g.amplitudes) - 1.0) < 1e-10

    assert kn.ground_energy_analytic(spec) == pytest.approx(g.energy, abs=1e-10)

    trivial = kn.ground_state(periodic(8, 3.0, 0.5))
    assert trivial.parity == 1


def test_quasiparticle_spectrum():
    lambdas = kn.quasiparticle_spectrum(periodic(4, 0.0, 1.0))
    assert np.allclose(lambdas, 2.0)


def test_pair_reduction_and_measures():
    g = kn.ground_state(periodic(8, 1.0, 0.5))
    rho = kn.reduce_to_pair(g, 0, 1)
    assert rho.shape == (4, 4)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    assert kn.concurrence(rho) >= 0.0
    assert kn.mutual_information(g, 0, 1) >= 0.0
    assert kn.l1_coherence(rho) >= 0.0

    site = kn.reduce_to_site(g, 3)
    assert site.shape == (2, 2)
    assert kn.von_neumann_entropy(site) >= 0.0


def test_network_metrics():
    g = kn.ground_state(periodic(8, 0.8, 0.5))
    net = kn.build_network(g, "concurrence")
    w = net.weights
    assert w.shape == (8, 8)
    assert np.allclose(w, w.T)
    assert np.allclose(np.diag(w), 0.0)
    assert net.clustering() is not None
    assert len(net.densities()) == 8


def test_factorization_point_regular_network():
    mu_star = kn.factorization_potential(1.0, 0.5)
    assert mu_star == pytest.approx(math.sqrt(3.0), abs=1e-12)

    g = kn.ground_state(periodic(8, mu_star, 0.5))
    net = kn.build_network(g, "concurrence")
    off = net.weights[np.triu_indices(8, 1)]
    assert off.max() - off.min() < 1e-8
    assert off.min() > 0.0
    assert net.clustering() == pytest.approx(1.0, abs=1e-6)
    assert kn.permutation_invariance_deviation(g) < 1e-8

    theta = kn.factorization_angle(1.0, 0.5)
    psi = kn.factorized_odd_state(8, theta)
    assert kn.fidelity(g, psi) >= 1.0 - 1e-8


def test_zero_modes_and_detection():
    values, real_domain = kn.zero_mode_potentials(8, 1.0, 0.5)
    assert real_domain
    positive = sorted(v for v in values if v > 0)
    assert len(positive) == 4
    for mu_n in positive:
        spec = kn.ChainSpec(8, 1.0, mu_n, 0.5, "open")
        assert kn.min_bdg_gap(spec) <= 1e-8

    _, ok = kn.zero_mode_potentials(8, 0.5, 1.0)
    assert not ok

    chain = kn.ChainSpec(8, 1.0, 0.0, 0.5, "open")
    switches = kn.detect_parity_switches(chain, 0.05, 2.0, points=61)
    assert len(switches) == 4
    assert np.allclose(sorted(switches), positive, atol=1e-3)


def test_fidelity_orthogonal_sectors():
    a = kn.ground_state(periodic(8, 1.0, 0.5))
    b = kn.ground_state(periodic(8, 2.5, 0.5))
    assert kn.fidelity(a, b) <= 1e-10
    assert kn.fidelity(a, a) == pytest.approx(1.0, abs=1e-12)


def test_validation_errors():
    with pytest.raises(ValueError):
        kn.ChainSpec(8, 1.0, 0.0, 0.0, "twisted")
    with pytest.raises(kn.CapacityError):
        kn.ChainSpec(64, 1.0, 0.0, 0.0, "periodic")
    with pytest.raises(ValueError):
        kn.factorization_potential(0.5, 1.0)
