"""
Discrete Wigner functions and the phase-space domains the array can sum them over.

The Wigner function of a state lives on the 2N x 2N grid:

    W(q, p) = Tr(A(q, p) rho) / 2N

Running the array with the program sum of c(q, p)|q>|p> gives <sigma_z> = 2N sum of |c(q, p)|^2 W(q, p), so a
program with uniform amplitudes over a domain D (and sign bits for subtracted points) measures 2N sum of sign W
divided by |D|. Both forms are reported: the raw sum (sum of sign W) and the polarization-scaled sum
(2N sum of sign W = scale * <sigma_z>, with scale = |D|).

Line sums and translation operators
-----------------------------------

Summing W along a line is a probability: the line sums to the projector on one eigenvector of the translation
operator (for a = 1 the vector exp(i*pi*(c m + b m^2) / N) / sqrt(N)):

    line            points                          operator   eigenvalue
    p - b q = c     (q, c + b q), q in [0, 2N)      T(b, 1)    exp(-i*pi*c / N)
    q = q0          (q0, p), p in [0, 2N)           T(1, 0)    exp(+i*pi*q0 / N)

Both rows are the single rule "a p - b q = c sums to the eigenvalue exp(-i*pi*c / N) of T(b, a)", i.e. eigenphase
index (-c) mod 2N. Lines with c + b N odd carry no weight at all.

Cat maps
--------

The diagonal unitary C = diag(exp(i*pi*(b n^2 + c n) / N)) moves Wigner values along the classical map
(q, p) -> (q, p + b q + c). Where the shift in A(q, p) wraps around, the quadratic phase picks up (-1)^(b N) and the
linear one (-1)^c, so the map is exact if and only if b N + c is even. Other cases are reported through their
covariance residual.
"""

import math
import numpy as np
from scipy import linalg as scipy_linalg
from quorum import array, linalg, phase_space, programs, util

ABOVE = "above"
BELOW = "below"
ABSTAIN = "abstain"


def eigenphase_index(c, dim):
    """
    Eigenphase index of T(b, a) whose probability is the sum along the line a p - b q = c
    """
    return (-c) % (2 * dim)


class WignerGrid(util.Repr):

    def __init__(self, dim, values, tol=None):
        values = np.asarray(values)
        if values.shape != (2 * dim, 2 * dim):
            msg = "Wigner grid of dimension {dim} must be {size}x{size} (got shape {shape})".format(
                dim=dim, size=2 * dim, shape=values.shape)
            raise util.error(msg, util.DimensionError)
        residue = np.abs(np.imag(values)).max()
        if residue > util.circuit_tolerance(tol):
            msg = "Wigner values have an imaginary residue of {residue!r}".format(residue=residue)
            raise util.error(msg, util.InvalidStateError)
        self.dim = dim
        self.values = linalg.frozen(np.array(np.real(values), dtype=float))

    def __getitem__(self, point):
        q, p = point
        return self.values[q % (2 * self.dim), p % (2 * self.dim)]

    def total(self):
        return math.fsum(self.values.ravel())


def wigner(rho):
    """
    Wigner function by direct traces (the oracle for the circuit evaluation)
    """
    dim = rho.dim
    stack = phase_space.phase_point_stack(dim, 2 * dim)
    values = np.einsum("qpij,ji->qp", stack, rho.density_matrix()) / (2 * dim)
    return WignerGrid(dim, values)


def wigner_circuit(rho):
    """
    Wigner function measured point by point with the array programmed by |q>|p>
    """
    dim = rho.dim
    values = np.empty((2 * dim, 2 * dim))
    for q in range(2 * dim):
        for p in range(2 * dim):
            values[q, p] = array.run_point_program(rho, q, p).sigma_z / (2 * dim)
    return WignerGrid(dim, values)


def line_sum(w, b, c):
    """
    Sum of W along p - b q = c (mod 2N); b = 0 gives the horizontal line p = c
    """
    size = 2 * w.dim
    q = np.arange(size)
    return math.fsum(w.values[q, (c + b * q) % size])


def vertical_line_sum(w, q0):
    return math.fsum(w.values[q0 % (2 * w.dim), :])


def line_family_sums(w):
    """
    Total weight of every line family: each a = 1 family (one per shear b) and the vertical family
    """
    size = 2 * w.dim
    res = {}
    for b in range(size):
        res["b={b}".format(b=b)] = math.fsum(line_sum(w, b, c) for c in range(size))
    res["vertical"] = math.fsum(vertical_line_sum(w, q0) for q0 in range(size))
    return res


def translation_probabilities(rho, b, a, tol=None):
    """
    Probabilities of the eigenvalues exp(i*pi*c / N) of T(b, a), keyed by the eigenphase index c in [0, 2N).
    The complex Schur form of a normal matrix is diagonal with an orthonormal basis, which keeps degenerate
    eigenspaces orthogonal.
    """
    dim = rho.dim
    size = 2 * dim
    if b % size == 0 and a % size == 0:
        raise util.error("T(0, 0) is the identity and has a single eigenvalue",
                         hints=["Use a translation with (b, a) != (0, 0)."])
    tol = util.EIGENPHASE_TOLERANCE if tol is None else tol

    triangular, vectors = scipy_linalg.schur(phase_space.translation(dim, b, a), output="complex")
    off_diagonal = np.abs(np.triu(triangular, 1)).max()
    if off_diagonal > tol:
        msg = "translation T({b}, {a}) did not diagonalize (off-diagonal {value!r})".format(
            b=b, a=a, value=off_diagonal)
        raise util.error(msg, util.DegeneracyResolutionError)

    rho_matrix = rho.density_matrix()
    probabilities = {}
    for k, eigenvalue in enumerate(np.diag(triangular)):
        c = int(round(np.angle(eigenvalue) * dim / np.pi)) % size
        if abs(eigenvalue - np.exp(1j * np.pi * c / dim)) > tol:
            msg = "eigenvalue {value!r} of T({b}, {a}) is not of the form exp(i*pi*c/{dim})".format(
                value=eigenvalue, b=b, a=a, dim=dim)
            raise util.error(msg, util.DegeneracyResolutionError)
        vector = vectors[:, k]
        probabilities[c] = probabilities.get(c, 0.0) + np.vdot(vector, rho_matrix @ vector).real
    return probabilities


class PhaseDomain(util.Repr):
    """
    Signed set of grid points. `descriptor` names the constructor and `params` its arguments, both kept for the
    domain file format.
    """

    def __init__(self, dim, signs, descriptor="custom", params=None):
        phase_space.check_dim(dim)
        if len(signs) == 0:
            raise util.error("phase-space domain is empty", util.DegenerateProgramError)
        size = 2 * dim
        self.dim = dim
        self.signs = {}
        for (q, p), sign in signs.items():
            if not (0 <= q < size and 0 <= p < size):
                msg = "domain point ({q}, {p}) is outside the {size}x{size} grid".format(q=q, p=p, size=size)
                raise util.error(msg, util.DimensionError)
            if sign not in (1, -1):
                msg = "domain sign at ({q}, {p}) must be +1 or -1 (got {sign!r})".format(q=q, p=p, sign=sign)
                raise util.error(msg, util.InvalidStateError)
            self.signs[(int(q), int(p))] = int(sign)
        self.descriptor = descriptor
        self.params = params if params is not None else {}

    @property
    def points(self):
        return sorted(self.signs)

    def __len__(self):
        return len(self.signs)


def _positive(points):
    return {point: 1 for point in points}


def line(dim, b, c):
    size = 2 * dim
    points = [(q, (c + b * q) % size) for q in range(size)]
    return PhaseDomain(dim, _positive(points), "line", {"b": b % size, "c": c % size})


def hline(dim, p0):
    size = 2 * dim
    points = [(q, p0 % size) for q in range(size)]
    return PhaseDomain(dim, _positive(points), "hline", {"p0": p0 % size})


def vline(dim, q0):
    size = 2 * dim
    points = [(q0 % size, p) for p in range(size)]
    return PhaseDomain(dim, _positive(points), "vline", {"q0": q0 % size})


def segment(dim, b, c, start, length):
    """
    `length` consecutive points of the line p - b q = c, starting at q = `start`
    """
    size = 2 * dim
    if not 1 <= length <= size:
        msg = "segment length must be in [1, {size}] (got {length})".format(size=size, length=length)
        raise util.error(msg, util.DimensionError)
    points = [((start + k) % size, (c + b * (start + k)) % size) for k in range(length)]
    return PhaseDomain(dim, _positive(points), "segment",
                       {"b": b % size, "c": c % size, "start": start % size, "length": length})


def parallelogram(dim, b, q0, width, c0, height):
    """
    Points with q in [q0, q0 + width) and p - b q in [c0, c0 + height): a rectangle when b = 0, tilted otherwise
    """
    size = 2 * dim
    if not (1 <= width <= size and 1 <= height <= size):
        msg = "parallelogram sides must be in [1, {size}] (got {width}x{height})".format(
            size=size, width=width, height=height)
        raise util.error(msg, util.DimensionError)
    points = [((q0 + i) % size, (c0 + j + b * (q0 + i)) % size) for i in range(width) for j in range(height)]
    return PhaseDomain(dim, _positive(points), "parallelogram",
                       {"b": b % size, "q0": q0 % size, "width": width, "c0": c0 % size, "height": height})


def custom(dim, points, signs=None):
    if signs is None:
        signs = [1] * len(points)
    return PhaseDomain(dim, dict(zip([tuple(point) for point in points], signs)), "custom")


def _disjoint(first, second):
    if first.dim != second.dim:
        raise util.error("domains of different dimensions cannot be combined", util.DimensionError)
    shared = set(first.signs) & set(second.signs)
    if len(shared) > 0:
        msg = "domains overlap at {points}".format(points=sorted(shared))
        raise util.error(msg, util.InvalidStateError, hints=["Combined domains must be disjoint."])


def union(first, second):
    _disjoint(first, second)
    signs = dict(first.signs)
    signs.update(second.signs)
    return PhaseDomain(first.dim, signs, "custom")


def difference(first, second):
    """
    Domain adding W over `first` and subtracting it over `second`
    """
    _disjoint(first, second)
    signs = dict(first.signs)
    signs.update({point: -sign for point, sign in second.signs.items()})
    return PhaseDomain(first.dim, signs, "custom")


def domain_sum(w, domain):
    """
    Exact (raw, polarization-scaled) sums of sign * W over the domain
    """
    raw = math.fsum(sign * w[point] for point, sign in domain.signs.items())
    return raw, 2 * w.dim * raw


def domain_program(domain):
    amplitude = 1 / math.sqrt(len(domain))
    c = {point: amplitude for point in domain.signs}
    phi = {point: 0 if sign > 0 else 1 for point, sign in domain.signs.items()}
    return programs.ProgramState(domain.dim, c, phi, len(domain), register_dim=2 * domain.dim)


def run_domain(rho, domain):
    """
    Exact circuit evaluation of a domain: returns (raw sum, polarization-scaled sum, circuit result)
    """
    ps = domain_program(domain)
    result = array.run_program(rho, ps)
    scaled = ps.scale * result.sigma_z
    return scaled / (2 * rho.dim), scaled, result


class CatMapSpec(util.Repr):

    def __init__(self, b, c, dim):
        phase_space.check_dim(dim)
        self.dim = dim
        self.b = b % (2 * dim)
        self.c = c % (2 * dim)


class CatMap(util.Repr):

    def __init__(self, spec, unitary, residuals):
        self.spec = spec
        self.unitary = unitary
        self.residuals = residuals

    def residual(self):
        return float(self.residuals.max())

    def fundamental_residual(self):
        dim = self.spec.dim
        return float(self.residuals[:dim, :dim].max())


def cat_map_candidate(spec):
    n = np.arange(spec.dim)
    return np.diag(np.exp(1j * np.pi * (spec.b * n * n + spec.c * n) / spec.dim))


def covariance_residuals(spec, unitary):
    """
    For every grid point, the largest entry of |C A(q, p) C^dagger - A(q, p + b q + c)|
    """
    dim, size = spec.dim, 2 * spec.dim
    stack = phase_space.phase_point_stack(dim, size)
    moved = np.einsum("ij,qpjk,lk->qpil", unitary, stack, np.conj(unitary))
    q = np.arange(size)[:, np.newaxis]
    p = np.arange(size)[np.newaxis, :]
    target = stack[np.broadcast_to(q, (size, size)), (p + spec.b * q + spec.c) % size]
    return np.abs(moved - target).max(axis=(2, 3))


def cat_map(spec, tol=None):
    tol = util.EIGENPHASE_TOLERANCE if tol is None else tol
    unitary = cat_map_candidate(spec)
    res = CatMap(spec, unitary, covariance_residuals(spec, unitary))
    if res.fundamental_residual() > tol:
        msg = "cat map with shear {b} and offset {c} is not covariant for N = {dim} (residual {residual!r})".format(
            b=spec.b, c=spec.c, dim=spec.dim, residual=res.fundamental_residual())
        hints = ["Exact covariance needs shear * dimension + offset to be even."]
        raise util.NotCovariantError([(None, msg)], res.residuals, hints=hints)
    return res


def cat_map_unitary(spec, tol=None):
    return cat_map(spec, tol=tol).unitary


def covariance_scan(dims, shears=None, offsets=(0,)):
    """
    Residual report over dimensions and shears; never raises. Rows are dicts with the exactness verdict.
    """
    rows = []
    for dim in dims:
        for b in (range(2 * dim) if shears is None else shears):
            for c in offsets:
                spec = CatMapSpec(b, c, dim)
                unitary = cat_map_candidate(spec)
                residual = float(covariance_residuals(spec, unitary)[:dim, :dim].max())
                rows.append({"dim": dim, "b": spec.b, "c": spec.c, "residual": residual,
                             "exact": residual < util.EIGENPHASE_TOLERANCE})
    return rows


def tilt_offset(dim, b):
    """
    Offset that makes the shear by -b covariant: 0, or N when b N is odd
    """
    return 0 if (b * dim) % 2 == 0 else dim


def tilt_state(rho, b):
    """
    State whose horizontal line p = c + tilt_offset(N, b) carries the Wigner values of rho's line p - b q = c
    """
    shear = cat_map_unitary(CatMapSpec(-b, tilt_offset(rho.dim, b), rho.dim))
    return rho.evolve(shear)


def tilted_line_sum(rho, b, c):
    """
    Sum of W along p - b q = c measured as a horizontal line of the tilted state
    """
    raw, scaled, result = run_domain(tilt_state(rho, b), hline(rho.dim, c + tilt_offset(rho.dim, b)))
    return raw


class Decision(util.Repr):

    def __init__(self, verdict, estimate, epsilon, threshold, shots, scale, stderr, seed):
        self.verdict = verdict
        self.estimate = estimate
        self.epsilon = epsilon
        self.threshold = threshold
        self.shots = shots
        self.scale = scale
        self.stderr = stderr
        self.seed = seed

    def interval(self):
        return self.estimate - self.epsilon, self.estimate + self.epsilon

    def to_dict(self):
        low, high = self.interval()
        return {"verdict": self.verdict, "estimate": self.estimate, "interval": [low, high],
                "epsilon": self.epsilon, "threshold": self.threshold, "shots": self.shots, "scale": self.scale,
                "stderr": self.stderr, "seed": self.seed}


def decision_shots(epsilon, delta, scale):
    """
    Hoeffding sample size: ceil(ln(2 / delta) / (2 epsilon^2)) per unit of scale^2. It depends on the domain only
    through its scale, never on N.
    """
    if not epsilon > 0:
        raise util.error("epsilon must be positive (got {epsilon!r})".format(epsilon=epsilon), util.UsageError)
    if not 0 < delta < 1:
        raise util.error("delta must be in (0, 1) (got {delta!r})".format(delta=delta), util.UsageError)
    base = math.ceil(math.log(2 / delta) / (2 * epsilon ** 2))
    return int(math.ceil(base * scale ** 2))


def decide_threshold(rho, domain, threshold, epsilon, delta, seed):
    """
    Decides whether the polarization-scaled domain sum 2N sum of sign W is above or below `threshold`. The estimate
    is scale * <sigma_z> from sampled runs of the domain program; with the shot count of `decision_shots` it lies
    within 2 epsilon of the exact value with probability at least 1 - delta, so a verdict other than abstain
    contradicts the exact value by more than epsilon with probability at most delta.

    That is weaker than "wrong with probability at most delta": when the exact value lies within epsilon of the
    threshold, a verdict on the wrong side of it is not covered by the bound. Read such verdicts as "not far on the
    other side", or shrink epsilon.
    """
    ps = domain_program(domain)
    shots = decision_shots(epsilon, delta, ps.scale)
    result = array.run_program_sampled(rho, ps, shots, seed)
    estimate = ps.scale * result.sigma_z

    if estimate >= threshold + epsilon:
        verdict = ABOVE
    elif estimate <= threshold - epsilon:
        verdict = BELOW
    else:
        verdict = ABSTAIN
    return Decision(verdict, estimate, epsilon, threshold, shots, ps.scale, ps.scale * result.stderr_z, seed)
