"""Independent numerical oracles used by the tests.

These deliberately avoid the library's bracket and projection code paths:
operators are applied to functions through finite differences, and span
membership is exercised by generating combinations forward. All functions
involved are linear, so the central differences are exact up to roundoff
for any step size.
"""
from __future__ import annotations

import numpy as np

FD_STEP = 0.05


def numeric_gradient(f, x: np.ndarray, h: float = FD_STEP) -> np.ndarray:
    d = x.shape[0]
    grad = np.empty(d, dtype=complex)
    for i in range(d):
        e = np.zeros(d)
        e[i] = h
        grad[i] = (f(x + e) - f(x - e)) / (2.0 * h)
    return grad


def operator_apply(coeff: np.ndarray, f):
    """First-order operator A_ij x_j d/dx_i acting on a scalar function."""

    def g(x: np.ndarray):
        return np.dot(coeff @ x, numeric_gradient(f, x))

    return g


def commutator_on_coordinates(a: np.ndarray, b: np.ndarray, points) -> np.ndarray:
    """[J_A, J_B] applied to every coordinate function at every point.

    Returns an array of shape (npoints, d) built purely from nested
    operator applications, never from a matrix-commutator formula.
    """
    d = a.shape[0]
    out = np.empty((len(points), d), dtype=complex)
    for ip, p in enumerate(points):
        for k in range(d):
            phi = lambda x, k=k: x[k]
            ab = operator_apply(a, operator_apply(b, phi))(p)
            ba = operator_apply(b, operator_apply(a, phi))(p)
            out[ip, k] = ab - ba
    return out
