"""Nijenhuis structures on representations and the deformed action.

A Nijenhuis representation adds to a representation (V, theta) a pair of
operators: N on the base system and Nv on V, subject to the
compatibility identity (for all x, y)

  theta(Nx,Ny) Nv = Nv ( theta(Nx,Ny) + theta(Nx,y) Nv + theta(x,Ny) Nv
                         - Nv theta(Nx,y) - Nv theta(x,Ny)
                         - Nv theta(x,y) Nv + Nv^2 theta(x,y) ).

Such a pair deforms the action to

  theta_N(x,y) = theta(Nx,Ny) - Nv ( theta(Nx,y) + theta(x,Ny)
                                     - Nv theta(x,y) ).

The pair (theta_N, Nv) always satisfies the compatibility identity again,
now read over the deformed bracket [.,.,.]_N.  Whether theta_N also
satisfies the two representation identities of the deformed system
depends on the inputs (it does for the stock examples on the
two-dimensional system, but fails for some square-zero operators in
dimension three); run check_representation on the result to find out.
"""

import itertools

from .linalg import matadd, mat_iszero, matmul, matsub, matvec
from .lts import Report, Representation
from .operators import _check_operator, induced_bracket


def _check_fiber_operator(rep, Nv):
    m = rep.vdim
    if len(Nv) != m or any(len(row) != m for row in Nv):
        raise ValueError("fiber operator must be %d-by-%d" % (m, m))
    return tuple(tuple(row) for row in Nv)


def check_nijenhuis_rep(rep, N, Nv):
    """Verify the compatibility identity on all basis pairs of the base."""
    system = rep.base
    n = system.dim
    N = _check_operator(system, N)
    Nv = _check_fiber_operator(rep, Nv)
    e = [system.basis_vector(i) for i in range(n)]
    violations = []
    for i, j in itertools.product(range(n), repeat=2):
        x, y = e[i], e[j]
        Nx, Ny = matvec(N, x), matvec(N, y)
        tNN = rep.theta_vecs(Nx, Ny)
        tNy = rep.theta_vecs(Nx, y)
        txN = rep.theta_vecs(x, Ny)
        txy = rep.theta[(i, j)]
        lhs = matmul(tNN, Nv)
        inner = matadd(tNN, matadd(matmul(tNy, Nv), matmul(txN, Nv)))
        inner = matsub(inner, matmul(Nv, tNy))
        inner = matsub(inner, matmul(Nv, txN))
        inner = matsub(inner, matmul(Nv, matmul(txy, Nv)))
        inner = matadd(inner, matmul(matmul(Nv, Nv), txy))
        rhs = matmul(Nv, inner)
        if lhs != rhs:
            violations.append({"identity": "nijenhuis-representation",
                               "at": (i, j), "lhs": lhs, "rhs": rhs})
    return Report(not violations, violations)


def deformed_theta(rep, N, Nv):
    """The deformed action theta_N as a dict over basis pairs."""
    system = rep.base
    n = system.dim
    N = _check_operator(system, N)
    Nv = _check_fiber_operator(rep, Nv)
    e = [system.basis_vector(i) for i in range(n)]
    out = {}
    for i, j in itertools.product(range(n), repeat=2):
        Nx, Ny = matvec(N, e[i]), matvec(N, e[j])
        tNN = rep.theta_vecs(Nx, Ny)
        inner = matadd(rep.theta_vecs(Nx, e[j]), rep.theta_vecs(e[i], Ny))
        inner = matsub(inner, matmul(Nv, rep.theta[(i, j)]))
        out[(i, j)] = matsub(tNN, matmul(Nv, inner))
    return out


def induce_rep(rep, N, Nv):
    """Build theta_N as an action over the deformed system.

    N does not need to be invertible.  The returned representation has
    base equal to the deformed system of (rep.base, N); its derived
    family D_N comes from theta_N in the usual way.  The compatibility
    identity for (theta_N, Nv) over the deformed system always holds,
    but the representation identities themselves may fail; callers who
    need them should run check_representation on the result.
    """
    deformed, _ = induced_bracket(rep.base, N)
    return Representation(deformed, rep.vdim, deformed_theta(rep, N, Nv))


def is_trivial_action(rep):
    """True when every theta(e_i, e_j) is the zero matrix."""
    return all(mat_iszero(M) for M in rep.theta.values())
