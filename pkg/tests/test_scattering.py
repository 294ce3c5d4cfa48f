import unittest
import numpy as np
from quorum import linalg, phase_space, scattering, util


def phase_state(theta):
    """
    |0> scattered by diag(exp(i theta), 1): Tr(a rho) = exp(i theta)
    """
    return linalg.QuditState.basis(2, 0), np.diag([np.exp(1j * theta), 1])


class ExactScatteringTest(unittest.TestCase):

    def test_matches_direct_trace(self):
        rng = np.random.default_rng(20)
        for dim in range(2, 9):
            for i in range(100):
                rho = linalg.random_state(dim, rng, rank=1 + i % dim)
                a = linalg.random_unitary(dim, rng)
                result = scattering.scatter_exact(rho, a)
                oracle = rho.expectation(a)
                self.assertAlmostEqual(result.sigma_z, oracle.real, delta=1e-10)
                self.assertAlmostEqual(result.sigma_y, oracle.imag, delta=1e-10)

    def test_y_orientation(self):
        rho, a = phase_state(1.0)
        result = scattering.scatter_exact(rho, a)
        self.assertAlmostEqual(result.sigma_z, np.cos(1.0), places=12)
        self.assertAlmostEqual(result.sigma_y, np.sin(1.0), places=12)

    def test_phase_point_operator(self):
        rho = linalg.random_state(3, np.random.default_rng(21))
        a = phase_space.phase_point(3, 1, 0)
        result = scattering.scatter_exact(rho, a)
        self.assertAlmostEqual(result.sigma_z, rho.expectation(a).real, delta=1e-10)
        self.assertAlmostEqual(result.sigma_y, 0.0, delta=1e-10)

    def test_not_unitary(self):
        rho = linalg.QuditState.maximally_mixed(2)
        with self.assertRaises(util.NotUnitaryError):
            scattering.scatter_exact(rho, np.diag([1, 0.5]))

    def test_dimension_mismatch(self):
        with self.assertRaises(util.DimensionError):
            scattering.scatter_exact(linalg.QuditState.maximally_mixed(2), np.eye(3))

    def test_tomography(self):
        rng = np.random.default_rng(22)
        for dim in (2, 3, 5):
            rho = linalg.random_state(dim, rng)
            self.assertTrue(linalg.allclose(scattering.tomography(rho), rho.density_matrix(), 1e-10))

    def test_sampled_tomography_is_close(self):
        rho = linalg.random_state(2, np.random.default_rng(23))
        rebuilt = scattering.tomography(rho, shots=100000, seed=5)
        self.assertTrue(linalg.allclose(rebuilt, rho.density_matrix(), 0.05))


class SampledScatteringTest(unittest.TestCase):

    def test_reproducible(self):
        rho, a = phase_state(0.7)
        first = scattering.scatter_sampled(rho, a, 1000, 7)
        second = scattering.scatter_sampled(rho, a, 1000, 7)
        self.assertEqual(first.to_dict(), second.to_dict())
        self.assertEqual(first.mode, scattering.SAMPLED)
        self.assertEqual(first.shots, 1000)

    def test_seed_is_required(self):
        rho, a = phase_state(0.7)
        with self.assertRaises(util.UsageError):
            scattering.scatter_sampled(rho, a, 1000, None)

    def test_shots_must_be_positive(self):
        rho, a = phase_state(0.7)
        with self.assertRaises(util.UsageError):
            scattering.scatter_sampled(rho, a, 0, 1)
        exact = scattering.scatter_exact(rho, a)
        for shots in (None, 10.0, -1):
            with self.assertRaises(util.UsageError):
                scattering.sample(exact, shots, 1)

    def test_deterministic_outcomes(self):
        rho = linalg.QuditState.basis(3, 1)
        result = scattering.scatter_sampled(rho, np.eye(3), 500, 3)
        self.assertEqual(result.sigma_z, 1.0)
        self.assertEqual(result.stderr_z, 0.0)

    def test_convergence(self):
        rng = np.random.default_rng(24)
        inside = 0
        for seed in range(100):
            dim = 2 + seed % 4
            rho, a = linalg.random_state(dim, rng), linalg.random_unitary(dim, rng)
            exact = scattering.scatter_exact(rho, a)
            result = scattering.sample(exact, 100000, seed)
            if abs(result.sigma_z - exact.sigma_z) <= 5 * result.stderr_z \
                    and abs(result.sigma_y - exact.sigma_y) <= 5 * result.stderr_y:
                inside += 1
        self.assertGreaterEqual(inside, 99)

    def test_standard_error_scaling(self):
        rho, a = phase_state(1.0)
        exact = scattering.scatter_exact(rho, a)
        errors = [scattering.sample(exact, shots, 42).stderr_z for shots in (1000, 10000, 100000)]
        for larger, smaller in zip(errors, errors[1:]):
            ratio = larger / smaller / np.sqrt(10)
            self.assertTrue(1 / 1.2 <= ratio <= 1.2, ratio)

    def test_spawned_seeds(self):
        seeds = scattering.spawn_seeds(9, 3)
        self.assertEqual(seeds, scattering.spawn_seeds(9, 3))
        self.assertEqual(len(set(seeds)), 3)
        self.assertNotEqual(seeds, scattering.spawn_seeds(10, 3))


if __name__ == "__main__":
    unittest.main()
