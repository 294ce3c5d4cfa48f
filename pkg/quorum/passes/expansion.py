"""
This pass expands the operator in the basis of phase-point operators.

Since the A(q, p) of the fundamental cell are orthogonal, Tr[A(q, p) A(q', p')] = N delta(q - q') delta(p - p'), the
coefficients of O = sum of o(q, p) A(q, p) come from a single trace each:

    o(q, p) = Tr(O A(q, p)) / N

Operators already given by their coefficients are only completed with zeros so that every later pass sees the whole
N x N cell.
"""

from quorum import linalg, phase_space, programs, util

PASS_NAME = __name__.split(".")[-1]


def expand(operator):
    dim = operator.dim
    if operator.form == programs.OperatorSpec.COEFFICIENTS:
        return {(q, p): operator.data.get((q, p), 0j) for q in range(dim) for p in range(dim)}

    matrix = operator.matrix()
    basis = phase_space.phase_point_stack(dim)
    if basis.shape[2:] != matrix.shape:
        msg = "operator of shape {shape} does not match the {dim} dimensional basis".format(
            shape=matrix.shape, dim=dim)
        raise util.error(msg, util.DimensionError)

    coefficients = {}
    for q in range(dim):
        for p in range(dim):
            coefficients[(q, p)] = linalg.trace_product(matrix, basis[q, p]) / dim
    return coefficients


class Expander(object):

    def __init__(self, compilation):
        self.compilation = compilation

    def process(self):
        self.compilation.coefficients = expand(self.compilation.operator)
        self.compilation.passes.append(PASS_NAME)
