"""
Generalized Pauli operators and the phase-space point operators built from them.

For a system of dimension N:

    U |n> = |n + 1 mod N>                      (cyclic shift)
    V = F U F^dagger = diag(omega^n)           (shift in the conjugated basis, omega = exp(2*pi*i / N))
    R |n> = |N - n mod N>                      (reflection)
    A(q, p) = U^q R V^-p exp(i*pi*p*q / N)     (phase-point operator)
    T(b, a) = U^a V^b exp(i*pi*a*b / N)        (translation operator)

A(q, p) is hermitian for every integer q and p, so it is well defined on the whole 2N x 2N grid where the Wigner
function lives. Only the N x N cell [0, N)^2 is independent; outside it the operators repeat up to a sign:

    A(q + N, p) = exp(i*pi*p) A(q, p)
    A(q, p + N) = exp(i*pi*q) A(q, p)

Restricted to the fundamental cell they are unitary and satisfy Tr[A(q, p) A(q', p')] = N delta(q - q') delta(p - p').
"""

import functools
import numpy as np
from quorum import linalg, util


def check_dim(dim):
    if dim < 2:
        msg = "phase-space operators need a dimension of at least 2 (got {dim})".format(dim=dim)
        raise util.error(msg, util.DimensionError)


class PhasePointIndex(util.Repr):
    """
    Grid point (q, p) of the 2N x 2N phase space. Inputs are reduced modulo 2N.
    """

    def __init__(self, q, p, dim):
        check_dim(dim)
        self.dim = dim
        self.q = q % (2 * dim)
        self.p = p % (2 * dim)

    def __eq__(self, other):
        return isinstance(other, PhasePointIndex) and (self.q, self.p, self.dim) == (other.q, other.p, other.dim)

    def __hash__(self):
        return hash((self.q, self.p, self.dim))

    def is_fundamental(self):
        return self.q < self.dim and self.p < self.dim

    def fundamental(self):
        """
        Returns the equivalent point inside [0, N)^2 and the sign relating both operators
        """
        q, p = self.q % self.dim, self.p % self.dim
        sign = 1
        if self.q >= self.dim and self.p % 2 == 1:
            sign = -sign
        if self.p >= self.dim and q % 2 == 1:
            sign = -sign
        return PhasePointIndex(q, p, self.dim), sign


class TranslationIndex(util.Repr):

    def __init__(self, b, a, dim):
        check_dim(dim)
        self.dim = dim
        self.b = b % (2 * dim)
        self.a = a % (2 * dim)


def shift_u(dim):
    check_dim(dim)
    return np.roll(np.eye(dim, dtype=complex), 1, axis=0)


def clock_phases(dim, power=1):
    """
    Diagonal of V^power, computed from the eigenphases rather than by repeated multiplication
    """
    n = np.arange(dim)
    return np.exp(2j * np.pi * ((power * n) % dim) / dim)


def shift_v(dim):
    check_dim(dim)
    return np.diag(clock_phases(dim))


def reflection_r(dim):
    check_dim(dim)
    res = np.zeros((dim, dim), dtype=complex)
    n = np.arange(dim)
    res[(dim - n) % dim, n] = 1
    return res


def shift_power(dim, power):
    """
    U^power as a permutation matrix (exact for any integer power)
    """
    return np.roll(np.eye(dim, dtype=complex), power % dim, axis=0)


@functools.lru_cache(maxsize=None)
def _phase_point(dim, q, p):
    # Columns of R V^-p are |N - n> scaled by omega^(-p n); U^q then rolls the rows by q
    res = reflection_r(dim) * clock_phases(dim, -p)[np.newaxis, :]
    res = np.roll(res, q % dim, axis=0)
    res *= np.exp(1j * np.pi * p * q / dim)
    return linalg.frozen(res)


def phase_point_op(idx):
    """
    A(q, p) for a grid point. Results are memoized per (N, q, p) and returned read-only; concurrent callers may
    both build a missing entry, which is harmless as they compute the same matrix.
    """
    return _phase_point(idx.dim, idx.q, idx.p)


def phase_point(dim, q, p):
    return phase_point_op(PhasePointIndex(q, p, dim))


@functools.lru_cache(maxsize=None)
def _phase_point_stack(dim, register_dim):
    stack = np.empty((register_dim, register_dim, dim, dim), dtype=complex)
    for q in range(register_dim):
        for p in range(register_dim):
            stack[q, p] = phase_point(dim, q, p)
    return linalg.frozen(stack)


def phase_point_stack(dim, register_dim=None):
    """
    All A(q, p) with q, p in [0, register_dim) as an array of shape (register_dim, register_dim, N, N)
    """
    check_dim(dim)
    return _phase_point_stack(dim, dim if register_dim is None else register_dim)


def translation_op(idx):
    dim, a, b = idx.dim, idx.a, idx.b
    res = shift_power(dim, a) @ np.diag(clock_phases(dim, b))
    return res * np.exp(1j * np.pi * a * b / dim)


def translation(dim, b, a):
    return translation_op(TranslationIndex(b, a, dim))


def reconstruct(dim, coefficients):
    """
    Sum of o(q, p) A(q, p) over a coefficient map {(q, p): o}
    """
    res = np.zeros((dim, dim), dtype=complex)
    for (q, p), value in coefficients.items():
        res += value * phase_point(dim, q, p)
    return res
