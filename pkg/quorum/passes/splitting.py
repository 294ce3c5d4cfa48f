"""
This pass separates the hermitian and anti-hermitian pieces of the operator.

The basis operators are hermitian, so for o(q, p) = h(q, p) + i k(q, p):

    O = sum h A + i sum k A

where both sums are hermitian operators with real coefficients. The array only evaluates hermitian operators, so each
piece gets its own program and the results are recombined on the classical side as <O> = <H> + i <K>.
"""

from quorum.passes import expansion

PASS_NAME = __name__.split(".")[-1]

HERMITIAN = "hermitian"
ANTI_HERMITIAN = "anti_hermitian"


def split_coefficients(coefficients):
    hermitian = {point: value.real for point, value in coefficients.items()}
    anti_hermitian = {point: value.imag for point, value in coefficients.items()}
    return hermitian, anti_hermitian


def hermitian_split(operator):
    return split_coefficients(expansion.expand(operator))


class Splitter(object):

    def __init__(self, compilation):
        self.compilation = compilation

    def process(self):
        hermitian, anti_hermitian = split_coefficients(self.compilation.coefficients)
        self.compilation.parts = {HERMITIAN: hermitian, ANTI_HERMITIAN: anti_hermitian}
        self.compilation.passes.append(PASS_NAME)
