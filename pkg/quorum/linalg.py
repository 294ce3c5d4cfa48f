"""
Dense complex linear algebra and the state representations every other module is built on.

Matrices are plain ``numpy`` arrays of ``complex128``; the helpers here validate shapes, fix the conventions used
project-wide and never modify their inputs. The convention choices are:

- DFT: ``F[j, k] = exp(2*pi*i*j*k / N) / sqrt(N)``. With it ``V = F U F^dagger`` is the diagonal clock matrix
  ``diag(omega^n)`` where ``omega = exp(2*pi*i / N)`` (see ``phase_space.shift_v``).
- Kronecker blocks: ``(a (x) b)[i*rows_b + k, j*cols_b + l] = a[i, j] * b[k, l]``, so the leftmost factor is the
  most significant index. The ancilla qubit is always the leftmost factor.
"""

import numpy as np
from scipy.stats import unitary_group
from quorum import util


def as_matrix(value, name="matrix"):
    """
    Returns `value` as a 2-D complex array, complaining if it isn't a matrix
    """
    matrix = np.asarray(value, dtype=complex)
    if matrix.ndim != 2 or matrix.size == 0:
        raise util.error("{name} must be a non-empty matrix (got shape {shape})".format(name=name, shape=matrix.shape),
                         util.DimensionError)
    return matrix


def check_square(matrix, name="matrix"):
    rows, cols = matrix.shape
    if rows != cols:
        raise util.error("{name} must be square (got {rows}x{cols})".format(name=name, rows=rows, cols=cols),
                         util.DimensionError)
    return rows


def frozen(matrix):
    """
    Marks an array as read-only so cached values can be shared safely
    """
    matrix.setflags(write=False)
    return matrix


def allclose(a, b, atol=None):
    """
    Entry-wise comparison with an explicit absolute tolerance (and no relative one)
    """
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        return False
    return bool(np.all(np.abs(a - b) <= util.tolerance(atol)))


def dagger(matrix):
    return np.conj(np.transpose(matrix))


def is_unitary(matrix, tol=None):
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return allclose(matrix @ dagger(matrix), np.eye(matrix.shape[0]), util.tolerance(tol))


def is_hermitian(matrix, tol=None):
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return allclose(matrix, dagger(matrix), util.tolerance(tol))


def dft_matrix(dim):
    if dim < 1:
        raise util.error("dimension must be positive (got {dim})".format(dim=dim), util.DimensionError)
    n = np.arange(dim)
    return np.exp(2j * np.pi * np.outer(n, n) / dim) / np.sqrt(dim)


def hadamard():
    return dft_matrix(2)


def pauli_z():
    return np.array([[1, 0], [0, -1]], dtype=complex)


def pauli_y():
    return np.array([[0, -1j], [1j, 0]], dtype=complex)


def tensor(a, b, *others):
    """
    Kronecker product of two or more matrices. The size of the result is checked against the `MAX_DIMENSION`
    directive before anything is allocated.
    """
    factors = [as_matrix(a, "left factor"), as_matrix(b, "right factor")]
    factors.extend(as_matrix(other, "factor") for other in others)

    rows, cols = 1, 1
    for factor in factors:
        rows *= factor.shape[0]
        cols *= factor.shape[1]
    if rows > util.MAX_DIMENSION or cols > util.MAX_DIMENSION:
        msg = "tensor product of size {rows}x{cols} exceeds the maximum dimension {max}".format(
            rows=rows, cols=cols, max=util.MAX_DIMENSION)
        raise util.error(msg, util.SizeError, hints=["Raise quorum.util.MAX_DIMENSION if the memory allows it."])

    res = factors[0]
    for factor in factors[1:]:
        res = np.kron(res, factor)
    return res


def controlled(gate):
    """
    Ancilla-controlled gate |0><0| (x) I + |1><1| (x) gate, ancilla as the leftmost factor
    """
    gate = as_matrix(gate, "controlled gate")
    dim = check_square(gate, "controlled gate")
    zero = np.diag([1, 0]).astype(complex)
    one = np.diag([0, 1]).astype(complex)
    return tensor(zero, np.eye(dim)) + tensor(one, gate)


def trace_product(a, b):
    """
    Tr(a b) as the sum over a[i, j] * b[j, i], without forming the product
    """
    a, b = as_matrix(a, "left operand"), as_matrix(b, "right operand")
    dim_a, dim_b = check_square(a, "left operand"), check_square(b, "right operand")
    if dim_a != dim_b:
        msg = "trace of a product needs equal dimensions (got {a} and {b})".format(a=dim_a, b=dim_b)
        raise util.error(msg, util.DimensionError)
    return complex(np.sum(a * np.transpose(b)))


def random_unitary(dim, rng):
    return unitary_group.rvs(dim, random_state=rng)


def random_hermitian(dim, rng):
    matrix = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (matrix + dagger(matrix)) / 2


def random_state(dim, rng, rank=None):
    """
    Random density matrix of the given rank (a pure state when rank is 1, full rank when omitted)
    """
    rank = dim if rank is None else rank
    if rank == 1:
        vector = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        return QuditState.pure(vector / np.linalg.norm(vector))
    factor = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = factor @ dagger(factor)
    return QuditState.mixed(rho / np.trace(rho).real)


class QuditState(util.Repr):
    """
    State of an N dimensional system, either a normalized vector (`kind` == "pure") or a density matrix
    (`kind` == "mixed"). Instances are immutable once built.
    """

    PURE = "pure"
    MIXED = "mixed"

    def __init__(self, dim, kind, data, tol=None):
        self.dim = dim
        self.kind = kind
        self.data = frozen(np.array(data, dtype=complex))
        self._check(util.tolerance(tol))

    def _check(self, tol):
        if self.kind == QuditState.PURE:
            if self.data.shape != (self.dim,):
                msg = "pure state of dimension {dim} needs {dim} amplitudes (got shape {shape})".format(
                    dim=self.dim, shape=self.data.shape)
                raise util.error(msg, util.DimensionError)
            norm = np.linalg.norm(self.data)
            if abs(norm - 1) > tol:
                msg = "pure state is not normalized (norm {norm!r})".format(norm=norm)
                raise util.error(msg, util.InvalidStateError, hints=["Divide the amplitudes by their norm."])

        elif self.kind == QuditState.MIXED:
            if self.data.shape != (self.dim, self.dim):
                msg = "density matrix of dimension {dim} must be {dim}x{dim} (got shape {shape})".format(
                    dim=self.dim, shape=self.data.shape)
                raise util.error(msg, util.DimensionError)
            if not is_hermitian(self.data, tol):
                raise util.error("density matrix is not hermitian", util.InvalidStateError)
            trace = np.trace(self.data)
            if abs(trace - 1) > tol:
                msg = "density matrix trace is {trace!r}, not 1".format(trace=trace)
                raise util.error(msg, util.InvalidStateError)
            smallest = np.linalg.eigvalsh(self.data).min()
            if smallest < -util.CIRCUIT_TOLERANCE:
                msg = "density matrix has a negative eigenvalue ({value!r})".format(value=smallest)
                raise util.error(msg, util.InvalidStateError)

        else:
            msg = "unknown state kind '{kind}'".format(kind=self.kind)
            raise util.error(msg, util.InvalidStateError, hints=["Use 'pure' or 'mixed'."])

    @classmethod
    def pure(cls, vector, tol=None):
        vector = np.asarray(vector, dtype=complex)
        return cls(vector.shape[0], cls.PURE, vector, tol=tol)

    @classmethod
    def mixed(cls, matrix, tol=None):
        matrix = np.asarray(matrix, dtype=complex)
        return cls(matrix.shape[0], cls.MIXED, matrix, tol=tol)

    @classmethod
    def basis(cls, dim, n):
        vector = np.zeros(dim, dtype=complex)
        vector[n % dim] = 1
        return cls.pure(vector)

    @classmethod
    def maximally_mixed(cls, dim):
        return cls.mixed(np.eye(dim) / dim)

    def density_matrix(self):
        if self.kind == QuditState.PURE:
            return np.outer(self.data, np.conj(self.data))
        return np.array(self.data)

    def factor(self):
        """
        Returns M with rho = M M^dagger. Columns are weighted eigenvectors, so a pure state gives a single column
        and a mixed state at most `dim` columns (numerically null eigenvalues are dropped).
        """
        if self.kind == QuditState.PURE:
            return self.data.reshape(self.dim, 1).copy()
        values, vectors = np.linalg.eigh(self.data)
        keep = values > util.DROP_THRESHOLD
        return vectors[:, keep] * np.sqrt(values[keep])

    def expectation(self, operator):
        """
        Direct trace Tr(operator rho). This is the oracle the circuits are checked against.
        """
        operator = as_matrix(operator, "operator")
        if operator.shape != (self.dim, self.dim):
            msg = "operator of shape {shape} does not act on a {dim} dimensional state".format(
                shape=operator.shape, dim=self.dim)
            raise util.error(msg, util.DimensionError)
        if self.kind == QuditState.PURE:
            return complex(np.vdot(self.data, operator @ self.data))
        return trace_product(operator, self.data)

    def evolve(self, unitary):
        """
        Returns the state U rho U^dagger
        """
        unitary = as_matrix(unitary, "unitary")
        if self.kind == QuditState.PURE:
            vector = unitary @ self.data
            return QuditState.pure(vector / np.linalg.norm(vector))
        rho = unitary @ self.data @ dagger(unitary)
        return QuditState.mixed((rho + dagger(rho)) / 2)
