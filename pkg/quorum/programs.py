"""
Operators handed to the array and the program states that encode them.

An operator O on an N dimensional space is given either as a dense matrix or by its coefficients o(q, p) in the
basis of phase-point operators, O = sum of o(q, p) A(q, p) over [0, N)^2. A program state

    |Psi>_P = sum of c(q, p) |q>|p>|phi(q, p)>

stores real amplitudes c(q, p) with sum c^2 = 1 and sign bits phi(q, p). The classical scale S restores the
normalization: the coefficient a program encodes at (q, p) is S c(q, p)^2 (-1)^phi(q, p).
"""

import numpy as np
from quorum import linalg, phase_space, util


class OperatorSpec(util.Repr):

    MATRIX = "matrix"
    COEFFICIENTS = "coeffs"

    def __init__(self, dim, form, data):
        phase_space.check_dim(dim)
        self.dim = dim
        self.form = form
        if form == OperatorSpec.MATRIX:
            matrix = linalg.as_matrix(data, "operator")
            if matrix.shape != (dim, dim):
                msg = "operator of dimension {dim} must be {dim}x{dim} (got shape {shape})".format(
                    dim=dim, shape=matrix.shape)
                raise util.error(msg, util.DimensionError)
            self.data = linalg.frozen(np.array(matrix))
        elif form == OperatorSpec.COEFFICIENTS:
            coefficients = {}
            for (q, p), value in data.items():
                if not (0 <= q < dim and 0 <= p < dim):
                    msg = "coefficient index ({q}, {p}) is outside the basis cell [0, {dim})".format(q=q, p=p, dim=dim)
                    raise util.error(msg, util.DimensionError)
                coefficients[(int(q), int(p))] = complex(value)
            self.data = coefficients
        else:
            msg = "unknown operator form '{form}'".format(form=form)
            raise util.error(msg, util.ParseError, hints=["Use 'matrix' or 'coeffs'."])

    @classmethod
    def from_matrix(cls, matrix):
        matrix = linalg.as_matrix(matrix, "operator")
        return cls(matrix.shape[0], cls.MATRIX, matrix)

    @classmethod
    def from_coefficients(cls, dim, coefficients):
        return cls(dim, cls.COEFFICIENTS, coefficients)

    def matrix(self):
        if self.form == OperatorSpec.MATRIX:
            return np.array(self.data)
        return phase_space.reconstruct(self.dim, self.data)


class ProgramState(util.Repr):
    """
    Amplitudes `c` and sign bits `phi`, both keyed by (q, p), plus the scale factor. `register_dim` is the size of
    the q and p program registers: N for operator programs, 2N when grid points outside [0, N)^2 are addressed.
    """

    def __init__(self, dim, c, phi, scale, register_dim=None, tol=None):
        phase_space.check_dim(dim)
        self.dim = dim
        self.register_dim = dim if register_dim is None else register_dim
        self.c = dict(c)
        self.phi = dict(phi)
        self.scale = float(scale)
        self._check(util.tolerance(tol))

    def _check(self, tol):
        if len(self.c) == 0:
            raise util.error("program state has no amplitudes", util.DegenerateProgramError)
        if set(self.c) != set(self.phi):
            raise util.error("every amplitude needs a sign bit and vice versa", util.InvalidStateError)
        for (q, p), amplitude in self.c.items():
            if not (0 <= q < self.register_dim and 0 <= p < self.register_dim):
                msg = "program point ({q}, {p}) does not fit registers of dimension {dim}".format(
                    q=q, p=p, dim=self.register_dim)
                raise util.error(msg, util.DimensionError)
            if amplitude < 0:
                msg = "program amplitude at ({q}, {p}) is negative".format(q=q, p=p)
                raise util.error(msg, util.InvalidStateError, hints=["Signs belong to the phi bits."])
            if self.phi[(q, p)] not in (0, 1):
                msg = "sign bit at ({q}, {p}) must be 0 or 1".format(q=q, p=p)
                raise util.error(msg, util.InvalidStateError)
        norm = sum(amplitude ** 2 for amplitude in self.c.values())
        if abs(norm - 1) > tol:
            msg = "program amplitudes are not normalized (sum of squares {norm!r})".format(norm=norm)
            raise util.error(msg, util.InvalidStateError)
        if not self.scale > 0:
            raise util.error("program scale must be positive", util.InvalidStateError)

    def support(self):
        """
        Sorted list of (q, p, phi, c) for the nonzero amplitudes
        """
        return [(q, p, self.phi[(q, p)], self.c[(q, p)]) for (q, p) in sorted(self.c)]

    def uses_signs(self):
        return any(bit == 1 for bit in self.phi.values())


def decompile(ps):
    """
    Coefficients encoded by a program: scale * c^2 * (-1)^phi
    """
    return {point: ps.scale * ps.c[point] ** 2 * (-1) ** ps.phi[point] for point in ps.c}


def program_vector(ps):
    """
    State vector over (q register) (x) (p register) (x) (sign qubit), amplitude c(q, p) at index (q, p, phi(q, p))
    """
    size = ps.register_dim
    vector = np.zeros(size * size * 2, dtype=complex)
    for q, p, phi, amplitude in ps.support():
        vector[(q * size + p) * 2 + phi] = amplitude
    return vector
