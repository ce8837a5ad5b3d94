import math

import numpy as np
import pytest

from physlimits import qdyn

KET0 = np.array([1.0, 0.0], dtype=complex)
KET1 = np.array([0.0, 1.0], dtype=complex)


def basis(dim, idx):
    v = np.zeros(dim, dtype=complex)
    v[idx] = 1.0
    return v


class TestEvolve:
    def test_zero_time_is_identity(self):
        h = qdyn.random_hamiltonian(5, np.random.default_rng(0))
        psi = qdyn.random_state(5, np.random.default_rng(1))
        assert np.allclose(qdyn.evolve(h, psi, 0.0), psi, atol=1e-12)

    def test_stationary_state_only_gains_phase(self):
        h = np.diag([0.0, 2.0]).astype(complex)
        out = qdyn.evolve(h, KET1, 0.37)
        assert abs(np.vdot(KET1, out)) == pytest.approx(1.0, abs=1e-12)

    def test_group_property(self):
        rng = np.random.default_rng(42)
        h = qdyn.random_hamiltonian(6, rng)
        psi = qdyn.random_state(6, rng)
        one_step = qdyn.evolve(h, psi, 1.3)
        two_step = qdyn.evolve(h, qdyn.evolve(h, psi, 0.8), 0.5)
        assert np.allclose(one_step, two_step, atol=1e-10)

    def test_norm_preserved_across_ensemble(self):
        for index in range(25):
            rng = np.random.default_rng([99, index])
            dim = int(rng.integers(2, 9))
            h = qdyn.random_hamiltonian(dim, rng)
            psi = qdyn.random_state(dim, rng)
            out = qdyn.evolve(h, psi, float(rng.uniform(0, 20)))
            assert np.linalg.norm(out) == pytest.approx(1.0, abs=1e-10)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            qdyn.evolve(np.eye(3), KET0, 1.0)

    def test_non_hermitian_rejected(self):
        with pytest.raises(ValueError, match="Hermitian"):
            qdyn.evolve(np.array([[0.0, 1.0], [0.0, 0.0]]), KET0, 1.0)


class TestNotHamiltonian:
    def test_flips_basis_state_at_minimum_time(self):
        e1 = 2.7
        out = qdyn.evolve(qdyn.not_hamiltonian(e1), KET0, math.pi / e1)
        assert abs(np.vdot(KET1, out)) >= 1 - 1e-10

    def test_mean_energy_equals_spread(self):
        e1 = 1.9
        h = qdyn.not_hamiltonian(e1)
        mean = np.vdot(KET0, h @ KET0).real
        assert mean == pytest.approx(e1 / 2, rel=1e-12)

    def test_full_period_returns_start(self):
        e1 = 0.8
        out = qdyn.evolve(qdyn.not_hamiltonian(e1), KET0, 2 * math.pi / e1)
        assert abs(np.vdot(KET0, out)) == pytest.approx(1.0, abs=1e-10)

    def test_eigenstructure(self):
        h = qdyn.not_hamiltonian(3.0)
        plus = np.array([1.0, 1.0]) / math.sqrt(2)
        minus = np.array([1.0, -1.0]) / math.sqrt(2)
        assert np.allclose(h @ plus, 0.0, atol=1e-12)
        assert np.allclose(h @ minus, 3.0 * minus, atol=1e-12)

    def test_rejects_nonpositive_energy(self):
        with pytest.raises(ValueError):
            qdyn.not_hamiltonian(0.0)


class TestToffoli:
    def test_is_involution(self):
        u = qdyn.toffoli_unitary()
        assert np.array_equal(u @ u, np.eye(8))

    def test_flips_only_when_both_controls_set(self):
        u = qdyn.toffoli_unitary()
        assert np.array_equal(u @ basis(8, 0b110), basis(8, 0b111))
        assert np.array_equal(u @ basis(8, 0b111), basis(8, 0b110))
        assert np.array_equal(u @ basis(8, 0b010), basis(8, 0b010))

    def test_exhaustive_truth_table(self):
        u = qdyn.toffoli_unitary()
        for x in (0, 1):
            for y in (0, 1):
                for z in (0, 1):
                    out = u @ basis(8, 4 * x + 2 * y + z)
                    expected = 4 * x + 2 * y + (z ^ (x & y))
                    assert np.array_equal(out, basis(8, expected))

    def test_boolean_embeddings(self):
        assert qdyn.boolean_embeddings_check() == {"AND": True, "NOT": True, "FANOUT": True}


class TestInvolutionHamiltonian:
    def test_reproduces_gate_on_all_basis_states(self):
        u = qdyn.toffoli_unitary()
        h = qdyn.hamiltonian_for_involution(u, dt=1.0)
        for idx in range(8):
            evolved = qdyn.evolve(h, basis(8, idx), 1.0)
            assert np.allclose(evolved, u @ basis(8, idx), atol=1e-10)

    def test_identity_gives_zero_hamiltonian(self):
        h = qdyn.hamiltonian_for_involution(np.eye(4), dt=0.5)
        assert np.allclose(h, 0.0)

    def test_flipped_state_mean_energy(self):
        dt = 0.25
        h = qdyn.hamiltonian_for_involution(qdyn.toffoli_unitary(), dt=dt)
        mean = np.vdot(basis(8, 0b110), h @ basis(8, 0b110)).real
        assert mean == pytest.approx(math.pi / (2 * dt), rel=1e-12)

    def test_rejects_non_involution(self):
        phase = np.diag([1.0, 1j])
        with pytest.raises(ValueError, match="involution"):
            qdyn.hamiltonian_for_involution(phase, dt=1.0)


class TestOrthogonalizationTime:
    def test_not_gate_attains_both_bounds(self):
        e1 = 2.0
        result = qdyn.orthogonalization_time(qdyn.not_hamiltonian(e1), KET0)
        assert result.found
        assert result.t_orth == pytest.approx(math.pi / e1, rel=1e-6)
        assert result.ml_bound == pytest.approx(math.pi / e1, rel=1e-9)
        assert result.ab_bound == pytest.approx(math.pi / e1, rel=1e-9)
        assert result.mean_energy == pytest.approx(e1 / 2, rel=1e-9)
        assert result.energy_spread == pytest.approx(e1 / 2, rel=1e-9)

    def test_eigenvector_never_orthogonalizes(self):
        h = np.diag([0.0, 1.0, 3.0]).astype(complex)
        result = qdyn.orthogonalization_time(h, basis(3, 2), t_max=200.0)
        assert not result.found
        assert result.t_orth is None
        assert result.ab_bound == math.inf

    def test_ground_state_has_infinite_mean_bound(self):
        h = np.diag([0.0, 1.0]).astype(complex)
        result = qdyn.orthogonalization_time(h, KET0)
        assert not result.found
        assert result.ml_bound == math.inf

    def test_tolerance_validation(self):
        with pytest.raises(ValueError):
            qdyn.orthogonalization_time(qdyn.not_hamiltonian(1.0), KET0, overlap_tol=0.5)
        with pytest.raises(ValueError):
            qdyn.orthogonalization_time(qdyn.not_hamiltonian(1.0), KET0, grid_points=100)

    def test_ensemble_short_run_no_violations(self):
        stats = qdyn.speed_limit_trials(trials=60, max_dim=8, seed=11)
        assert stats.violation_count == 0
        assert stats.found_count > 0
        assert stats.min_margin >= 1 - 1e-9

    def test_trials_are_seed_deterministic(self):
        a = qdyn.speed_limit_trials(trials=40, max_dim=5, seed=3)
        b = qdyn.speed_limit_trials(trials=40, max_dim=5, seed=3)
        assert a == b


class TestUnits:
    def test_seconds_from_natural(self, const):
        # A natural time pi at unit energy scale is pi*hbar seconds.
        assert qdyn.seconds_from_natural(math.pi, 1.0, const) == pytest.approx(
            math.pi * const.hbar, rel=1e-12
        )

    def test_not_gate_converts_to_minimum_si_time(self, const):
        # A NOT gate with mean energy E_mean joules: its natural-units H
        # has e1 = 2 (so mean 1), and the natural flip time pi/2 converts
        # to the minimum SI operation time pi*hbar/(2*E_mean).
        mean_j = 3.3e-20
        t_si = qdyn.seconds_from_natural(math.pi / 2.0, mean_j, const)
        assert t_si == pytest.approx(math.pi * const.hbar / (2 * mean_j), rel=1e-12)

    def test_larger_energy_scale_means_shorter_seconds(self, const):
        slow = qdyn.seconds_from_natural(1.0, 1.0, const)
        fast = qdyn.seconds_from_natural(1.0, 10.0, const)
        assert slow == pytest.approx(10 * fast, rel=1e-12)
