"""
The programmable gate array: a scattering circuit whose controlled operation is chosen by quantum program registers.

Registers, leftmost tensor factor first:

    ancilla (2) (x) q register (K) (x) p register (K) (x) sign qubit (2) (x) system (N)

K is the register dimension (N for operator programs, 2N to address the whole Wigner grid). The fixed network applies,
when the ancilla is |1> and the program registers hold |q>|p>|phi>:

    controlled-V^-p (power from the p register)
    controlled-R
    controlled-U^q (power from the q register)
    exp(i*pi*p*q / N) on the q and p registers
    sigma_z on the sign qubit, giving (-1)^phi

so the system receives (-1)^phi A(q, p). Without the inter-register phase the network would apply A(q, p) only up to
a phase, and without the ancilla control on the sign flip signed programs would lose their sign.

Stages compose into one block-diagonal unitary over the program basis. Since it never mixes program basis states,
the simulation only materializes the blocks on the program's support; `ControlledNetwork.matrix()` builds the full
unitary for small arrays. The system state rho enters in factored form rho = M M^dagger and the joint state is kept
as a tensor of shape (2, support, N, rank), whose Gram matrix is the joint density matrix.
"""

import numpy as np
from scipy import linalg as scipy_linalg
from quorum import compiler, linalg, phase_space, scattering, util

REGISTER_ORDER = ("ancilla", "q", "p", "sign", "system")


class ArrayConfig(util.Repr):

    def __init__(self, dim, register_dim=None, include_sign_register=True):
        phase_space.check_dim(dim)
        self.dim = dim
        self.register_dim = dim if register_dim is None else register_dim
        self.include_sign_register = include_sign_register
        self.register_order = REGISTER_ORDER

    def register_dims(self):
        sign_dim = 2 if self.include_sign_register else 1
        return {"ancilla": 2, "q": self.register_dim, "p": self.register_dim, "sign": sign_dim,
                "system": self.dim}


class ControlledNetwork(object):
    """
    The hardware of the array, independent of the program. Each stage maps a program basis state (q, p, phi) and
    the current system block to the next one.
    """

    def __init__(self, config):
        self.config = config
        dim = config.dim
        self.reflection = phase_space.reflection_r(dim)
        self.stages = [
            ("controlled-V^-p", lambda q, p, phi, block: phase_space.clock_phases(dim, -p)[:, np.newaxis] * block),
            ("controlled-R", lambda q, p, phi, block: self.reflection @ block),
            ("controlled-U^q", lambda q, p, phi, block: np.roll(block, q % dim, axis=0)),
            ("phase", lambda q, p, phi, block: np.exp(1j * np.pi * p * q / dim) * block),
        ]
        if config.include_sign_register:
            self.stages.append(("controlled-sign", lambda q, p, phi, block: (-1) ** phi * block))

    def check_point(self, q, p, phi):
        size = self.config.register_dim
        if not (0 <= q < size and 0 <= p < size):
            msg = "program point ({q}, {p}) does not fit registers of dimension {size}".format(q=q, p=p, size=size)
            raise util.error(msg, util.DimensionError)
        if phi != 0 and not self.config.include_sign_register:
            raise util.error("signed program on an array without sign register", util.DimensionError)

    def block(self, q, p, phi):
        """
        Operator applied to the system when the ancilla is |1> and the program is |q>|p>|phi>
        """
        self.check_point(q, p, phi)
        block = np.eye(self.config.dim, dtype=complex)
        for name, stage in self.stages:
            block = stage(q, p, phi, block)
        return block

    def blocks(self, points):
        return np.array([self.block(q, p, phi) for q, p, phi in points])

    def matrix(self):
        """
        Dense unitary over all registers. Its size grows as 8 K^2 N, so this is for inspection of small arrays.
        """
        dims = self.config.register_dims()
        size = dims["q"]
        signs = range(dims["sign"])
        blocks = [self.block(q, p, phi) for q in range(size) for p in range(size) for phi in signs]
        program_block = scipy_linalg.block_diag(*blocks)
        if 2 * program_block.shape[0] > util.MAX_DIMENSION:
            raise util.error("network unitary exceeds the maximum dimension", util.SizeError)
        zero = np.diag([1, 0]).astype(complex)
        one = np.diag([0, 1]).astype(complex)
        return np.kron(zero, np.eye(program_block.shape[0])) + np.kron(one, program_block)

    def apply(self, joint, points):
        blocks = self.blocks(points)
        res = np.array(joint)
        res[1] = np.einsum("kij,kjr->kir", blocks, joint[1])
        return res


def hadamard_on_ancilla(joint):
    res = np.empty_like(joint)
    res[0] = (joint[0] + joint[1]) / np.sqrt(2)
    res[1] = (joint[0] - joint[1]) / np.sqrt(2)
    return res


def simulate(rho, config, support):
    """
    Runs the array on `rho` with a program given as a list of (q, p, phi, amplitude) and returns the exact
    polarizations
    """
    if config.dim != rho.dim:
        msg = "array of dimension {array} cannot run on a {state} dimensional state".format(
            array=config.dim, state=rho.dim)
        raise util.error(msg, util.DimensionError)

    network = ControlledNetwork(config)
    points = [(q, p, phi) for q, p, phi, amplitude in support]
    amplitudes = np.array([amplitude for q, p, phi, amplitude in support], dtype=complex)
    factor = rho.factor()

    # Ancilla |0>, program sum of c |q p phi>, system factor
    joint = np.zeros((2, len(support), rho.dim, factor.shape[1]), dtype=complex)
    joint[0] = amplitudes[:, np.newaxis, np.newaxis] * factor[np.newaxis, :, :]

    joint = hadamard_on_ancilla(joint)
    joint = network.apply(joint, points)
    joint = hadamard_on_ancilla(joint)

    ancilla_rho = np.einsum("akir,bkir->ab", joint, np.conj(joint))
    sigma_z, sigma_y = scattering.ancilla_polarizations(ancilla_rho)
    return scattering.CircuitResult(sigma_z, sigma_y)


def run_point_program(rho, q, p):
    """
    Program |q>|p> on registers addressing the whole 2N x 2N grid. The z polarization is Tr(rho A(q, p)).
    """
    size = 2 * rho.dim
    if not (0 <= q < size and 0 <= p < size):
        msg = "grid point ({q}, {p}) is outside [0, {size})".format(q=q, p=p, size=size)
        raise util.error(msg, util.DimensionError)
    config = ArrayConfig(rho.dim, register_dim=size, include_sign_register=False)
    return simulate(rho, config, [(q, p, 0, 1.0)])


def run_program(rho, ps):
    if ps.dim != rho.dim:
        msg = "program for dimension {program} cannot run on a {state} dimensional state".format(
            program=ps.dim, state=rho.dim)
        raise util.error(msg, util.DimensionError)
    config = ArrayConfig(ps.dim, register_dim=ps.register_dim, include_sign_register=True)
    return simulate(rho, config, ps.support())


def run_program_sampled(rho, ps, shots, seed):
    return scattering.sample(run_program(rho, ps), shots, seed)


class Expectation(util.Repr):
    """
    Tr(rho O) as recombined from the hermitian and anti-hermitian programs, with standard errors in sampled mode
    """

    def __init__(self, value, mode, scale_h, scale_k, stderr_real=0.0, stderr_imag=0.0, shots=0, seed=None,
                 degenerate=False, results=None):
        self.value = complex(value)
        self.mode = mode
        self.scale_h = scale_h
        self.scale_k = scale_k
        self.stderr_real = stderr_real
        self.stderr_imag = stderr_imag
        self.shots = shots
        self.seed = seed
        self.degenerate = degenerate
        self.results = results if results is not None else {}

    def to_dict(self):
        return {"real": self.value.real, "imag": self.value.imag, "stderr_real": self.stderr_real,
                "stderr_imag": self.stderr_imag, "scale_h": self.scale_h, "scale_k": self.scale_k,
                "mode": self.mode, "shots": self.shots, "seed": self.seed, "degenerate": self.degenerate}


def expectation(rho, o, mode=scattering.EXACT, shots=None, seed=None):
    if o.dim != rho.dim:
        msg = "operator of dimension {op} cannot be evaluated on a {state} dimensional state".format(
            op=o.dim, state=rho.dim)
        raise util.error(msg, util.DimensionError)
    if mode not in (scattering.EXACT, scattering.SAMPLED):
        msg = "unknown evaluation mode '{mode}'".format(mode=mode)
        raise util.error(msg, util.UsageError, hints=["Use 'exact' or 'sampled'."])
    if mode == scattering.SAMPLED:
        scattering.check_shots(shots)

    compilation = compiler.compile_operator(o)
    scale_h = compilation.scale(compiler.HERMITIAN)
    scale_k = compilation.scale(compiler.ANTI_HERMITIAN)
    shots = shots if mode == scattering.SAMPLED else 0
    if compilation.is_degenerate():
        return Expectation(0, mode, scale_h, scale_k, shots=shots, seed=seed, degenerate=True)

    parts = (compiler.HERMITIAN, compiler.ANTI_HERMITIAN)
    seeds = scattering.spawn_seeds(seed, len(parts)) if mode == scattering.SAMPLED else [None] * len(parts)

    results = {}
    for part, part_seed in zip(parts, seeds):
        program = compilation.program(part)
        if program is None:
            results[part] = None
        elif mode == scattering.SAMPLED:
            results[part] = run_program_sampled(rho, program, shots, part_seed)
        else:
            results[part] = run_program(rho, program)

    real, imag, stderr_real, stderr_imag = 0.0, 0.0, 0.0, 0.0
    hermitian, anti_hermitian = results[compiler.HERMITIAN], results[compiler.ANTI_HERMITIAN]
    if hermitian is not None:
        real = scale_h * hermitian.sigma_z
        stderr_real = scale_h * hermitian.stderr_z
    if anti_hermitian is not None:
        imag = scale_k * anti_hermitian.sigma_z
        stderr_imag = scale_k * anti_hermitian.stderr_z

    return Expectation(complex(real, imag), mode, scale_h, scale_k, stderr_real=stderr_real,
                       stderr_imag=stderr_imag, shots=shots, seed=seed, results=results)
