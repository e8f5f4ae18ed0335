"""Submersion tensors from concrete Lie algebras and coordinate vector fields.

S(X, Y, Z) = 1/2 (Z<X,Y> - <[Z,X],Y> - <[Z,Y],X>), k = sum over vertical X of S(X, X, .),
Omega(X, Y, Z) = -<[(1-P)X, (1-P)Y], P Z>. Frames are orthonormal, vertical first.
"""

import json

import numpy as np
import sympy as sp


def tensors_from_brackets(bracket, dim_v, dim, derivative=None):
    """bracket(i, j) -> coefficient vector; derivative(z, i, j) -> Z<X_i, X_j>."""
    inner = lambda u, v: float(np.dot(u, v))
    e = np.eye(dim)
    S = np.zeros((dim_v, dim_v, dim))
    for x in range(dim_v):
        for y in range(dim_v):
            for z in range(dim):
                dz = derivative(z, x, y) if derivative else 0.0
                S[x, y, z] = 0.5 * (dz - inner(bracket(z, x), e[y]) - inner(bracket(z, y), e[x]))
    k = [float(sum(S[x, x, z] for x in range(dim_v))) for z in range(dim)]
    Omega = np.zeros((dim - dim_v, dim - dim_v, dim_v))
    for a in range(dim - dim_v):
        for b in range(dim - dim_v):
            for z in range(dim_v):
                Omega[a, b, z] = -inner(bracket(dim_v + a, dim_v + b), e[z])
    return S, k, Omega


def matrix_algebra(frame):
    """Brackets from matrix commutators, decomposed in the given frame."""
    flat = np.column_stack([f.reshape(-1) for f in frame])

    def bracket(i, j):
        c = frame[i] @ frame[j] - frame[j] @ frame[i]
        coeffs, *_ = np.linalg.lstsq(flat, c.reshape(-1), rcond=None)
        assert np.linalg.norm(flat @ coeffs - c.reshape(-1)) < 1e-12
        return coeffs.real

    return bracket


def heisenberg():
    # Strictly upper-triangular 3x3 matrices; Z central, [X, Y] = Z.
    X = np.zeros((3, 3)); X[0, 1] = 1
    Y = np.zeros((3, 3)); Y[1, 2] = 1
    Z = np.zeros((3, 3)); Z[0, 2] = 1
    return matrix_algebra([Z, X, Y]), 1, 3


def hopf(lam):
    # su(2) basis with [E_i, E_j] = 2 eps_ijk E_k; vertical direction E_3 scaled to unit length lam.
    sig = [np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), np.array([[1, 0], [0, -1]])]
    E = [-1j * s for s in sig]
    return matrix_algebra([E[2] / lam, E[0], E[1]]), 1, 3


def warped_torus(f0, df0):
    # Metric dt^2 + f(t)^2 ds^2 at t = 0; vertical e = f^-1 d_s, horizontal d_t.
    t, s = sp.symbols("t s")
    f = f0 + df0 * t
    fields = [(0, 1 / f), (1, 0)]
    coords = (t, s)

    def apply(v, g):
        return sum(v[c] * sp.diff(g, coords[c]) for c in range(2))

    def lie(u, v):
        return tuple(sp.simplify(apply(u, v[c]) - apply(v, u[c])) for c in range(2))

    def decompose(w):
        # w = a e + b d_t  =>  a = f w_s, b = w_t.
        return np.array([float((f * w[1]).subs(t, 0)), float(w[0].subs(t, 0))])

    bracket = lambda i, j: decompose(lie(fields[i], fields[j]))
    return bracket, 1, 2


def report(name, built):
    bracket, dim_v, dim = built
    S, k, Omega = tensors_from_brackets(bracket, dim_v, dim)
    # Only horizontal Z is reported; vertical Z gives -<[e, e], e> = 0 anyway.
    assert np.allclose(S[:, :, :dim_v], 0)
    S, k = S[:, :, dim_v:], k[dim_v:]
    clean = lambda a: (np.round(a, 12) + 0.0).tolist()
    return name, {"S": clean(S), "k": clean(np.array(k)), "Omega": clean(Omega)}


out = dict([
    report("heisenberg", heisenberg()),
    report("hopf_1", hopf(1.0)),
    report("hopf_0.5", hopf(0.5)),
    report("warped_torus_2_1", warped_torus(2, 1)),
])
print(json.dumps(out, indent=2))
