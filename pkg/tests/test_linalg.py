import unittest
import numpy as np
from quorum import linalg, phase_space, util


class ConventionsTest(unittest.TestCase):

    def test_dft_diagonalizes_shift(self):
        for dim in (2, 3, 5, 8):
            f = linalg.dft_matrix(dim)
            self.assertTrue(linalg.is_unitary(f))
            v = f @ phase_space.shift_u(dim) @ linalg.dagger(f)
            omega = np.exp(2j * np.pi / dim)
            self.assertTrue(linalg.allclose(v, np.diag(omega ** np.arange(dim))))

    def test_hadamard(self):
        self.assertTrue(linalg.allclose(linalg.hadamard(), np.array([[1, 1], [1, -1]]) / np.sqrt(2)))

    def test_controlled_blocks(self):
        gate = linalg.random_unitary(3, np.random.default_rng(1))
        res = linalg.controlled(gate)
        self.assertEqual(res.shape, (6, 6))
        self.assertTrue(linalg.allclose(res[:3, :3], np.eye(3)))
        self.assertTrue(linalg.allclose(res[3:, 3:], gate))
        self.assertTrue(linalg.allclose(res[:3, 3:], np.zeros((3, 3))))

    def test_tensor_ancilla_is_leftmost(self):
        res = linalg.tensor(np.diag([0, 1]), np.eye(2))
        self.assertTrue(linalg.allclose(res, np.diag([0, 0, 1, 1])))

    def test_tensor_size_limit(self):
        saved = util.MAX_DIMENSION
        util.MAX_DIMENSION = 8
        try:
            with self.assertRaises(util.SizeError):
                linalg.tensor(np.eye(4), np.eye(4))
        finally:
            util.MAX_DIMENSION = saved

    def test_tensor_is_associative(self):
        rng = np.random.default_rng(5)
        a, b, c = [rng.integers(-3, 4, size=shape) for shape in ((2, 3), (3, 2), (2, 2))]
        left = linalg.tensor(linalg.tensor(a, b), c)
        self.assertTrue(np.array_equal(left, linalg.tensor(a, linalg.tensor(b, c))))
        self.assertTrue(np.array_equal(left, linalg.tensor(a, b, c)))

    def test_tensor_mixed_product(self):
        rng = np.random.default_rng(6)
        a, c = linalg.random_unitary(2, rng), linalg.random_hermitian(2, rng)
        b, d = linalg.random_hermitian(3, rng), linalg.random_unitary(3, rng)
        self.assertTrue(linalg.allclose(linalg.tensor(a, b) @ linalg.tensor(c, d), linalg.tensor(a @ c, b @ d), 1e-12))

    def test_tensor_blocks(self):
        self.assertTrue(np.array_equal(linalg.tensor(np.eye(2), np.eye(3)), np.eye(6)))
        swap = linalg.tensor([[0, 1], [1, 0]], np.eye(2))
        zero, one = np.zeros((2, 2)), np.eye(2)
        self.assertTrue(np.array_equal(swap, np.block([[zero, one], [one, zero]])))

    def test_dft(self):
        self.assertTrue(np.array_equal(linalg.dft_matrix(1), [[1]]))
        for dim in range(1, 33):
            self.assertTrue(linalg.is_unitary(linalg.dft_matrix(dim), 1e-12), dim)
        with self.assertRaises(util.DimensionError):
            linalg.dft_matrix(0)

    def test_trace_product(self):
        rng = np.random.default_rng(2)
        a, b = linalg.random_hermitian(4, rng), linalg.random_unitary(4, rng)
        self.assertAlmostEqual(linalg.trace_product(a, b), np.trace(a @ b), places=12)
        for i in range(20):
            a = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
            b = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
            self.assertAlmostEqual(linalg.trace_product(a, b), np.trace(a @ b), delta=1e-10)
        with self.assertRaises(util.DimensionError):
            linalg.trace_product(np.eye(2), np.eye(3))


class QuditStateTest(unittest.TestCase):

    def test_pure_validation(self):
        with self.assertRaises(util.InvalidStateError):
            linalg.QuditState.pure([1, 1])
        with self.assertRaises(util.DimensionError):
            linalg.QuditState(3, linalg.QuditState.PURE, [1, 0])

    def test_mixed_validation(self):
        with self.assertRaises(util.InvalidStateError):
            linalg.QuditState.mixed([[0.5, 0.5j], [0.5j, 0.5]])
        with self.assertRaises(util.InvalidStateError):
            linalg.QuditState.mixed(np.eye(2))
        with self.assertRaises(util.InvalidStateError):
            linalg.QuditState.mixed([[1.5, 0], [0, -0.5]])

    def test_unknown_kind(self):
        with self.assertRaises(util.InvalidStateError):
            linalg.QuditState(2, "thermal", np.eye(2) / 2)

    def test_factor_rebuilds_density_matrix(self):
        rng = np.random.default_rng(3)
        for rank in (1, 2, 4):
            rho = linalg.random_state(4, rng, rank=rank)
            factor = rho.factor()
            self.assertLessEqual(factor.shape[1], rank)
            self.assertTrue(linalg.allclose(factor @ linalg.dagger(factor), rho.density_matrix(), 1e-12))

    def test_basis_and_maximally_mixed(self):
        self.assertTrue(linalg.allclose(linalg.QuditState.basis(3, 4).data, [0, 1, 0]))
        rho = linalg.QuditState.maximally_mixed(4)
        self.assertAlmostEqual(rho.expectation(np.eye(4)).real, 1.0, places=12)

    def test_evolve(self):
        rng = np.random.default_rng(4)
        rho = linalg.random_state(3, rng)
        unitary = linalg.random_unitary(3, rng)
        evolved = rho.evolve(unitary)
        expected = unitary @ rho.density_matrix() @ linalg.dagger(unitary)
        self.assertTrue(linalg.allclose(evolved.density_matrix(), expected, 1e-12))
        pure = linalg.QuditState.basis(3, 0).evolve(unitary)
        self.assertTrue(linalg.allclose(pure.data, unitary[:, 0], 1e-12))

    def test_expectation_dimension_mismatch(self):
        with self.assertRaises(util.DimensionError):
            linalg.QuditState.basis(2, 0).expectation(np.eye(3))

    def test_immutable(self):
        rho = linalg.QuditState.basis(2, 0)
        with self.assertRaises(ValueError):
            rho.data[0] = 0


if __name__ == "__main__":
    unittest.main()
