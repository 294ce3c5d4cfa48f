"""
The scattering circuit: a probe qubit (the ancilla) prepared in |0>, a Hadamard on it, a controlled-A on the system,
another Hadamard, and a measurement of the ancilla polarization along z and y:

    anc |0> --H--*--H--[z or y]
                 |
    sys  rho ----A-------------

The polarizations are <sigma_z> = Re Tr(A rho) and <sigma_y> = Im Tr(A rho). The Hadamard flips the y axis
(H sigma_y H = -sigma_y), so the y polarization is read along that flipped axis, which is the orientation the identity
above refers to. In hardware this is a phase gate S followed by a Hadamard before a z measurement; here the ancilla
is measured in the y eigenbasis directly.

`scatter_exact` simulates the whole joint density matrix and reduces it to the ancilla. The direct trace
`QuditState.expectation` is kept apart as the oracle the circuit is tested against.

Sampling uses numpy's PCG64 generator. Each call seeds a `SeedSequence` with the given seed and spawns one child stream
per measured axis, so z and y outcomes never share random numbers and runs are reproducible on every platform.
"""

import numpy as np
from quorum import linalg, phase_space, util

EXACT = "exact"
SAMPLED = "sampled"

# Observable read on the ancilla for the y polarization (see module docstring)
Y_AXIS = -linalg.pauli_y()


class CircuitResult(util.Repr):
    """
    Ancilla polarizations of one circuit, either exact (`shots` == 0) or estimated from `shots` outcomes per axis
    """

    def __init__(self, sigma_z, sigma_y, mode=EXACT, shots=0, seed=None, stderr_z=0.0, stderr_y=0.0):
        self.sigma_z = float(sigma_z)
        self.sigma_y = float(sigma_y)
        self.mode = mode
        self.shots = shots
        self.seed = seed
        self.stderr_z = float(stderr_z)
        self.stderr_y = float(stderr_y)

    def value(self):
        return complex(self.sigma_z, self.sigma_y)

    def to_dict(self):
        return {"sigma_z": self.sigma_z, "sigma_y": self.sigma_y, "mode": self.mode, "shots": self.shots,
                "seed": self.seed, "stderr_z": self.stderr_z, "stderr_y": self.stderr_y}


def seed_sequence(seed):
    """
    Seeds are 64-bit integers; anything else is reduced modulo 2^64
    """
    if seed is None:
        raise util.error("sampled runs need an explicit seed", util.UsageError)
    return np.random.SeedSequence(int(seed) % (1 << 64))


def spawn_seeds(seed, count):
    """
    Splits one seed into `count` independent 64-bit seeds
    """
    children = seed_sequence(seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


def sample_polarization(polarization, shots, rng):
    """
    Draws `shots` +1/-1 outcomes with P(+1) = (1 + polarization) / 2; returns their mean and its standard error
    """
    p_plus = min(1.0, max(0.0, (1 + polarization) / 2))
    if p_plus < util.TOLERANCE:
        p_plus = 0.0
    elif p_plus > 1 - util.TOLERANCE:
        p_plus = 1.0
    n_plus = int(rng.binomial(shots, p_plus))
    mean = (2 * n_plus - shots) / shots
    stderr = np.sqrt(max(0.0, 1 - mean * mean) / shots)
    return mean, float(stderr)


def check_shots(shots):
    if isinstance(shots, bool) or not isinstance(shots, (int, np.integer)) or shots < 1:
        raise util.error("number of shots must be a positive integer (got {shots!r})".format(shots=shots),
                         util.UsageError, hints=["Sampled runs need --shots N with N >= 1."])


def sample(exact, shots, seed):
    """
    Turns an exact CircuitResult into a sampled one
    """
    check_shots(shots)
    rng_z, rng_y = [np.random.Generator(np.random.PCG64(child)) for child in seed_sequence(seed).spawn(2)]
    sigma_z, stderr_z = sample_polarization(exact.sigma_z, shots, rng_z)
    sigma_y, stderr_y = sample_polarization(exact.sigma_y, shots, rng_y)
    return CircuitResult(sigma_z, sigma_y, mode=SAMPLED, shots=shots, seed=seed, stderr_z=stderr_z, stderr_y=stderr_y)


def ancilla_polarizations(ancilla_rho):
    sigma_z = linalg.trace_product(linalg.pauli_z(), ancilla_rho).real
    sigma_y = linalg.trace_product(Y_AXIS, ancilla_rho).real
    return sigma_z, sigma_y


def check_operator(rho, a, tol):
    a = linalg.as_matrix(a, "scattered operator")
    if a.shape != (rho.dim, rho.dim):
        msg = "operator of shape {shape} cannot scatter a {dim} dimensional state".format(shape=a.shape, dim=rho.dim)
        raise util.error(msg, util.DimensionError)
    if not linalg.is_unitary(a, tol):
        msg = "controlled operator is not unitary within {tol!r}".format(tol=tol)
        raise util.error(msg, util.NotUnitaryError,
                         hints=["Non-unitary operators must go through the programmable array (quorum.array)."])
    return a


def scatter_exact(rho, a, tol=None):
    a = check_operator(rho, a, util.circuit_tolerance(tol))
    dim = rho.dim

    # Joint state |0><0| (x) rho, ancilla first
    ancilla = np.diag([1, 0]).astype(complex)
    joint = linalg.tensor(ancilla, rho.density_matrix())

    hadamard = linalg.tensor(linalg.hadamard(), np.eye(dim))
    circuit = hadamard @ linalg.controlled(a) @ hadamard
    joint = circuit @ joint @ linalg.dagger(circuit)

    # Partial trace over the system
    ancilla_rho = np.einsum("ajbj->ab", joint.reshape(2, dim, 2, dim))
    sigma_z, sigma_y = ancilla_polarizations(ancilla_rho)
    return CircuitResult(sigma_z, sigma_y)


def scatter_sampled(rho, a, shots, seed, tol=None):
    return sample(scatter_exact(rho, a, tol=tol), shots, seed)


def tomography(rho, shots=None, seed=None):
    """
    Rebuilds the density matrix from scattering runs over the whole quorum {A(q, p)}: each run gives
    Tr(rho A(q, p)) and rho = sum of Tr(rho A(q, p)) A(q, p) / N over the fundamental cell. Exact when `shots` is
    None, otherwise every operator is sampled with its own seed split from `seed`.
    """
    dim = rho.dim
    points = [(q, p) for q in range(dim) for p in range(dim)]
    seeds = spawn_seeds(seed, len(points)) if shots is not None else [None] * len(points)

    coefficients = {}
    for (q, p), point_seed in zip(points, seeds):
        operator = phase_space.phase_point(dim, q, p)
        if shots is None:
            result = scatter_exact(rho, operator)
        else:
            result = scatter_sampled(rho, operator, shots, point_seed)
        coefficients[(q, p)] = result.sigma_z / dim
    return phase_space.reconstruct(dim, coefficients)
