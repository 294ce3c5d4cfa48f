"""
This pass turns real coefficients into program states.

Every coefficient is written in polar form, coeff(q, p) = S c(q, p)^2 exp(i*pi*phi(q, p)), with

    S = sum of |coeff(q, p)|
    c(q, p) = sqrt(|coeff(q, p)| / S)
    phi(q, p) = 0 if coeff(q, p) >= 0 else 1

so that the amplitudes are normalized (sum c^2 = 1) and S is carried as classical side information to be multiplied
back into the measured polarization. Coefficients below the `DROP_THRESHOLD` directive are exact zeros for the
program: their square roots would only add rounding noise to the register.

A piece whose coefficients all vanish has no program at all (its expectation value is exactly zero).
"""

import math
from quorum import programs, util

PASS_NAME = __name__.split(".")[-1]


def significant(coefficients):
    kept = {}
    for point, value in coefficients.items():
        if isinstance(value, complex):
            if abs(value.imag) > util.DROP_THRESHOLD:
                msg = "program coefficient at {point} is not real ({value!r})".format(point=point, value=value)
                raise util.error(msg, util.InvalidStateError,
                                 hints=["Split the operator into hermitian and anti-hermitian pieces first."])
            value = value.real
        if abs(value) >= util.DROP_THRESHOLD:
            kept[point] = float(value)
    return kept


def compile_program(coefficients, dim, register_dim=None):
    kept = significant(coefficients)
    if len(kept) == 0:
        raise util.error("all program coefficients are zero", util.DegenerateProgramError,
                         hints=["A zero operator has expectation value 0; there is nothing to program."])

    scale = math.fsum(abs(value) for value in kept.values())
    c = {point: math.sqrt(abs(value) / scale) for point, value in kept.items()}
    phi = {point: 0 if value >= 0 else 1 for point, value in kept.items()}
    return programs.ProgramState(dim, c, phi, scale, register_dim=register_dim)


class Normalizer(object):

    def __init__(self, compilation):
        self.compilation = compilation

    def process(self):
        self.compilation.programs = {}
        for name, coefficients in self.compilation.parts.items():
            if len(significant(coefficients)) == 0:
                self.compilation.programs[name] = None
            else:
                self.compilation.programs[name] = compile_program(coefficients, self.compilation.dim)
        self.compilation.passes.append(PASS_NAME)
