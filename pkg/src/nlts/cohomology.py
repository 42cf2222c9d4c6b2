"""Cohomology of a Lie triple system twisted by a Nijenhuis structure.

Cochains live in odd degrees.  A degree-1 cochain is a linear map T -> V
stored as ``{(i,): vector}``; a degree-(2k+1) cochain is a multilinear
map T^(2k+1) -> V stored as ``{(i1,...,i2k+1): vector}`` and required to
be antisymmetric in its last-but-one pair of slots with vanishing cyclic
sum over its last three slots.

Three operators act on these spaces:

  * ``delta``   -- the Yamaguti coboundary of the underlying system and
                   representation (degree +2);
  * ``partial`` -- the same coboundary formula built from the deformed
                   bracket and deformed action, except that every
                   bracket fed into a cochain slot is expanded as the
                   alternating sum  [.,.,.]_N - Nv [.,.,.]' + Nv^2 [.,.,.]
                   (deformed, once-transformed, and plain graded parts);
  * ``phi``     -- the operator comparison map, a product over slots of
                   (apply N in that slot) - (apply Nv to the value).

They combine into one square-zero differential on pairs,

  d(f, g) = ( delta f,  partial g + (-1)^k phi f ),    k = (deg f + 1)/2,

with g one bracket-degree below f (absent in degree 1).  Cohomology in
degree 1 is ker d; in degrees 3 and 5 it is ker d modulo the image of
the previous d.
"""

import itertools

from .linalg import (
    kernel_basis,
    matvec,
    rank,
    solve_linear,
    vadd,
    viszero,
    vscale,
    vsub,
    vzero,
)
from .lts import Report
from .nrep import _check_fiber_operator, deformed_theta
from .operators import _check_operator, _deformed_parts

_W3_CACHE = {}


def _w3_data(n):
    """Constrained 3-tensor space over an n-dimensional base.

    Returns (basis, free) where basis is a list of dicts
    (i,j,k) -> int spanning the tensors antisymmetric in slots 1,2 with
    zero cyclic sum, and free lists one transversal tuple per basis
    element (evaluation there is a linear isomorphism onto coordinates).
    """
    if n in _W3_CACHE:
        return _W3_CACHE[n]
    tuples = list(itertools.product(range(n), repeat=3))
    index = {t: c for c, t in enumerate(tuples)}
    rows = []
    for i, j, k in tuples:
        row = [0] * len(tuples)
        row[index[(i, j, k)]] += 1
        row[index[(j, i, k)]] += 1
        rows.append(row)
        row = [0] * len(tuples)
        row[index[(i, j, k)]] += 1
        row[index[(j, k, i)]] += 1
        row[index[(k, i, j)]] += 1
        rows.append(row)
    vectors = kernel_basis(rows)
    basis = []
    free = []
    used = set()
    for v in vectors:
        basis.append({t: v[index[t]] for t in tuples if v[index[t]]})
        lead = None
        for t in tuples:
            if v[index[t]] and t not in used and all(
                    w[index[t]] == 0 for w in vectors if w is not v):
                lead = t
                break
        if lead is None:
            raise RuntimeError("no transversal position for constraint basis")
        used.add(lead)
        free.append(lead)
    _W3_CACHE[n] = (basis, free)
    return basis, free


def cochain_space_dim(dim, vdim, degree):
    """Dimension of the constrained cochain space of one degree."""
    if degree == 1:
        return dim * vdim
    if degree < 1 or degree % 2 == 0:
        raise ValueError("cochains live in odd degrees, got %d" % degree)
    basis, _ = _w3_data(dim)
    return vdim * (dim ** (degree - 3)) * len(basis)


def zero_cochain(dim, vdim, degree):
    return {t: vzero(vdim)
            for t in itertools.product(range(dim), repeat=degree)}


def normalize_cochain(f, dim, vdim, degree):
    """Complete dict form with frozen tuple values; missing keys are zero."""
    out = {}
    for t in itertools.product(range(dim), repeat=degree):
        v = f.get(t)
        if v is None:
            out[t] = vzero(vdim)
        else:
            v = tuple(v)
            if len(v) != vdim:
                raise ValueError("value at %r has length %d, expected %d"
                                 % (t, len(v), vdim))
            out[t] = v
    return out


def cochain_iszero(f):
    return all(viszero(v) for v in f.values())


def cochain_add(f, g):
    return {t: vadd(f[t], g[t]) for t in f}


def cochain_sub(f, g):
    return {t: vsub(f[t], g[t]) for t in f}


def cochain_scale(c, f):
    return {t: vscale(c, v) for t, v in f.items()}


def validate_cochain(f, dim, vdim, degree):
    """Shape plus the slot constraints of the given degree."""
    violations = []
    try:
        f = normalize_cochain(f, dim, vdim, degree)
    except ValueError as exc:
        return Report(False, [{"constraint": "shape", "detail": str(exc)}])
    if degree == 1:
        return Report(True)
    if degree % 2 == 0 or degree < 3:
        return Report(False, [{"constraint": "degree",
                               "detail": "expected an odd degree >= 1"}])
    p = degree - 3
    for prefix in itertools.product(range(dim), repeat=p):
        for i, j, k in itertools.product(range(dim), repeat=3):
            v = vadd(f[prefix + (i, j, k)], f[prefix + (j, i, k)])
            if not viszero(v):
                violations.append({"constraint": "antisymmetry",
                                   "at": prefix + (i, j, k), "value": v})
            v = vadd(vadd(f[prefix + (i, j, k)], f[prefix + (j, k, i)]),
                     f[prefix + (k, i, j)])
            if not viszero(v):
                violations.append({"constraint": "cyclic",
                                   "at": prefix + (i, j, k), "value": v})
    return Report(not violations, violations)


class Complex:
    """All cochain operators for one (system, representation, N, Nv) tuple."""

    def __init__(self, system, rep, N, Nv):
        if rep.base is not system and rep.base != system:
            raise ValueError("representation is not over the given system")
        self.system = system
        self.rep = rep
        self.n = system.dim
        self.m = rep.vdim
        self.N = _check_operator(system, N)
        self.Nv = _check_fiber_operator(rep, Nv)
        n = self.n
        self.theta = rep.theta
        self.D = {(i, j): rep.D(i, j)
                  for i in range(n) for j in range(n)}
        self.thetaN = deformed_theta(rep, self.N, self.Nv)
        self.DN = {(i, j): self._dn(i, j) for i in range(n) for j in range(n)}
        e = [system.basis_vector(i) for i in range(n)]
        self.p2 = {}
        self.p1 = {}
        self.p0 = {}
        for t in itertools.product(range(n), repeat=3):
            a2, a1, a0 = _deformed_parts(system, e[t[0]], e[t[1]], e[t[2]],
                                         self.N)
            self.p0[t] = a0
            self.p1[t] = vsub(a1, matvec(self.N, a0))
            self.p2[t] = vsub(a2, matvec(self.N, vsub(a1, matvec(self.N, a0))))
        self._dcols = {}
        self._rank = {}

    def _dn(self, i, j):
        a = self.thetaN[(j, i)]
        b = self.thetaN[(i, j)]
        return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))

    # -- evaluation helpers -------------------------------------------------

    def _insert(self, f, args, pos, w):
        """f with the coefficient vector w substituted into slot pos."""
        acc = None
        for t in range(self.n):
            c = w[t]
            if not c:
                continue
            v = f[args[:pos] + (t,) + args[pos + 1:]]
            if acc is None:
                acc = [c * x for x in v]
            else:
                for a in range(self.m):
                    acc[a] += c * v[a]
        if acc is None:
            return vzero(self.m)
        return tuple(acc)

    def _tele(self, f, args, pos, key):
        """Alternating insertion of the three graded brackets at one slot."""
        v = self._insert(f, args, pos, self.p2[key])
        v = vsub(v, matvec(self.Nv, self._insert(f, args, pos, self.p1[key])))
        v = vadd(v, matvec(self.Nv, matvec(
            self.Nv, self._insert(f, args, pos, self.p0[key]))))
        return v

    # -- the three operators ------------------------------------------------

    def _delta_like(self, f, degree, theta, D, ins):
        n = self.n
        out = {}
        if degree == 1:
            for t in itertools.product(range(n), repeat=3):
                x1, x2, x3 = t
                v = matvec(theta[(x2, x3)], f[(x1,)])
                v = vsub(v, matvec(theta[(x1, x3)], f[(x2,)]))
                v = vadd(v, matvec(D[(x1, x2)], f[(x3,)]))
                v = vsub(v, ins(f, (0,), 0, t))
                out[t] = v
            return out
        if degree == 3:
            for t in itertools.product(range(n), repeat=5):
                x1, x2, x3, x4, x5 = t
                v = matvec(theta[(x4, x5)], f[(x1, x2, x3)])
                v = vsub(v, matvec(theta[(x3, x5)], f[(x1, x2, x4)]))
                v = vsub(v, matvec(D[(x1, x2)], f[(x3, x4, x5)]))
                v = vadd(v, matvec(D[(x3, x4)], f[(x1, x2, x5)]))
                v = vadd(v, ins(f, (0, x4, x5), 0, (x1, x2, x3)))
                v = vadd(v, ins(f, (x3, 0, x5), 1, (x1, x2, x4)))
                v = vadd(v, ins(f, (x3, x4, 0), 2, (x1, x2, x5)))
                v = vsub(v, ins(f, (x1, x2, 0), 2, (x3, x4, x5)))
                out[t] = v
            return out
        if degree == 5:
            for t in itertools.product(range(n), repeat=7):
                x1, x2, x3, x4, x5, x6, x7 = t
                v = matvec(theta[(x6, x7)], f[(x1, x2, x3, x4, x5)])
                v = vsub(v, matvec(theta[(x5, x7)], f[(x1, x2, x3, x4, x6)]))
                v = vadd(v, matvec(D[(x1, x2)], f[(x3, x4, x5, x6, x7)]))
                v = vsub(v, matvec(D[(x3, x4)], f[(x1, x2, x5, x6, x7)]))
                v = vadd(v, matvec(D[(x5, x6)], f[(x1, x2, x3, x4, x7)]))
                v = vsub(v, ins(f, (0, x4, x5, x6, x7), 0, (x1, x2, x3)))
                v = vsub(v, ins(f, (x3, 0, x5, x6, x7), 1, (x1, x2, x4)))
                v = vsub(v, ins(f, (x3, x4, 0, x6, x7), 2, (x1, x2, x5)))
                v = vsub(v, ins(f, (x3, x4, x5, 0, x7), 3, (x1, x2, x6)))
                v = vsub(v, ins(f, (x3, x4, x5, x6, 0), 4, (x1, x2, x7)))
                v = vadd(v, ins(f, (x1, x2, 0, x6, x7), 2, (x3, x4, x5)))
                v = vadd(v, ins(f, (x1, x2, x5, 0, x7), 3, (x3, x4, x6)))
                v = vadd(v, ins(f, (x1, x2, x5, x6, 0), 4, (x3, x4, x7)))
                v = vsub(v, ins(f, (x1, x2, x3, x4, 0), 4, (x5, x6, x7)))
                out[t] = v
            return out
        raise ValueError("differentials act on degrees 1, 3, 5; got %d" % degree)

    def delta(self, f, degree):
        """Yamaguti coboundary of the underlying structure (degree +2)."""
        f = normalize_cochain(f, self.n, self.m, degree)
        ins = lambda g, args, pos, key: self._insert(g, args, pos, self.p0[key])
        return self._delta_like(f, degree, self.theta, self.D, ins)

    def partial(self, f, degree):
        """Deformed coboundary with alternating graded insertions (degree +2)."""
        f = normalize_cochain(f, self.n, self.m, degree)
        return self._delta_like(f, degree, self.thetaN, self.DN, self._tele)

    def phi(self, f, degree):
        """Product over slots of (apply N in the slot) - (apply Nv after)."""
        f = normalize_cochain(f, self.n, self.m, degree)
        n, m, N, Nv = self.n, self.m, self.N, self.Nv
        g = f
        for s in range(degree):
            ng = {}
            for t, gt in g.items():
                ts = t[s]
                acc = [0] * m
                for r in range(n):
                    c = N[r][ts]
                    if c:
                        v = g[t[:s] + (r,) + t[s + 1:]]
                        for a in range(m):
                            acc[a] += c * v[a]
                w = matvec(Nv, gt)
                ng[t] = tuple(x - y for x, y in zip(acc, w))
            g = ng
        return g

    def d(self, f, g, degree):
        """The pair differential; g must be None in degree 1."""
        if degree == 1:
            if g is not None:
                raise ValueError("degree-1 cochains have no companion")
            df = self.delta(f, 1)
            second = cochain_scale(-1, self.phi(f, 1))
            return df, second
        if degree not in (3, 5):
            raise ValueError("the pair differential acts in degrees 1, 3, 5")
        if g is None:
            g = zero_cochain(self.n, self.m, degree - 2)
        sign = 1 if degree == 3 else -1
        df = self.delta(f, degree)
        second = self.partial(g, degree - 2)
        pf = self.phi(f, degree)
        if sign == 1:
            second = cochain_add(second, pf)
        else:
            second = cochain_sub(second, pf)
        return df, second

    # -- bases, flattening, matrices ---------------------------------------

    def cochain_basis(self, degree):
        n, m = self.n, self.m
        out = []
        if degree == 1:
            for i in range(n):
                for a in range(m):
                    f = zero_cochain(n, m, 1)
                    f[(i,)] = tuple(1 if b == a else 0 for b in range(m))
                    out.append(f)
            return out
        basis3, _ = _w3_data(n)
        for prefix in itertools.product(range(n), repeat=degree - 3):
            for c3 in basis3:
                for a in range(m):
                    f = zero_cochain(n, m, degree)
                    for t, coef in c3.items():
                        f[prefix + t] = tuple(coef if b == a else 0
                                              for b in range(m))
                    out.append(f)
        return out

    def flatten(self, f, degree):
        """Coordinates of a constrained cochain (transversal evaluation)."""
        n, m = self.n, self.m
        if degree == 1:
            return [f[(i,)][a] for i in range(n) for a in range(m)]
        _, free = _w3_data(n)
        out = []
        for prefix in itertools.product(range(n), repeat=degree - 3):
            for t in free:
                out.extend(f[prefix + t])
        return out

    def from_coefficients(self, coeffs, degree):
        """Linear combination of the cochain basis."""
        basis = self.cochain_basis(degree)
        f = zero_cochain(self.n, self.m, degree)
        for c, b in zip(coeffs, basis):
            if c:
                f = cochain_add(f, cochain_scale(c, b))
        return f

    def _pair_domain(self, degree):
        """Basis of the domain of d in one degree, as (f, g) pairs."""
        if degree == 1:
            return [(f, None) for f in self.cochain_basis(1)]
        top = [(f, None) for f in self.cochain_basis(degree)]
        low = [(None, g) for g in self.cochain_basis(degree - 2)]
        return top + low

    def _d_columns(self, degree):
        if degree in self._dcols:
            return self._dcols[degree]
        n, m = self.n, self.m
        cols = []
        for f, g in self._pair_domain(degree):
            fc = f if f is not None else zero_cochain(n, m, degree)
            gc = g if degree > 1 else None
            if degree > 1 and gc is None:
                gc = zero_cochain(n, m, degree - 2)
            df, second = self.d(fc, gc, degree)
            cols.append(self.flatten(df, degree + 2)
                        + self.flatten(second, degree if degree > 1 else 1))
        self._dcols[degree] = cols
        return cols

    def d_rank(self, degree):
        if degree not in self._rank:
            self._rank[degree] = rank(self._d_columns(degree))
        return self._rank[degree]

    def pair_flatten(self, f, g, degree):
        if degree == 1:
            return self.flatten(f, 1)
        fc = f if f is not None else zero_cochain(self.n, self.m, degree)
        gc = g if g is not None else zero_cochain(self.n, self.m, degree - 2)
        return self.flatten(fc, degree) + self.flatten(gc, degree - 2)

    def pair_from_coefficients(self, coeffs, degree):
        """Split a domain coefficient vector into the (f, g) pair."""
        if degree == 1:
            return self.from_coefficients(coeffs, 1), None
        split = cochain_space_dim(self.n, self.m, degree)
        f = self.from_coefficients(coeffs[:split], degree)
        g = self.from_coefficients(coeffs[split:], degree - 2)
        return f, g

    def kernel_pairs(self, degree):
        """Basis of ker d in one degree, as (f, g) pairs."""
        cols = self._d_columns(degree)
        if not cols:
            return []
        rows = [list(r) for r in zip(*cols)]
        return [self.pair_from_coefficients(v, degree)
                for v in kernel_basis(rows)]

    # -- verdicts -----------------------------------------------------------

    def is_cocycle(self, f, g, degree):
        """Whether d(f, g) vanishes; witnesses name the failing component."""
        for h, deg in ((f, degree), (g, degree - 2) if degree > 1 else (None, 0)):
            if h is None:
                continue
            shape = validate_cochain(h, self.n, self.m, deg)
            if not shape:
                return Report(False, shape.violations)
        df, second = self.d(f, g if degree > 1 else None, degree)
        violations = []
        for t, v in sorted(df.items()):
            if not viszero(v):
                violations.append({"component": "bracket", "at": t, "value": v})
        for t, v in sorted(second.items()):
            if not viszero(v):
                violations.append({"component": "operator", "at": t, "value": v})
        return Report(not violations, violations)

    def is_coboundary(self, f, g, degree):
        """Search d-preimages: degree 3 looks in C^1, degree 5 in C^3 + C^1.

        Returns (found, pair) where pair is a domain preimage (gamma, None)
        or (psi, chi) when found, else (False, None).
        """
        if degree not in (3, 5):
            raise ValueError("coboundaries arrive in degrees 3 and 5")
        cols = self._d_columns(degree - 2)
        target = self.pair_flatten(f, g, degree)
        if not cols:
            return (all(x == 0 for x in target), None)
        rows = [list(r) for r in zip(*cols)]
        solution = solve_linear(rows, target)
        if solution is None:
            return False, None
        return True, self.pair_from_coefficients(solution, degree - 2)

    def cohomology_dim(self, degree):
        """Cocycle, coboundary, and quotient dimensions in one degree."""
        n, m = self.n, self.m
        if degree == 1:
            dim_c = cochain_space_dim(n, m, 1)
            z = dim_c - self.d_rank(1)
            return {"degree": 1, "dim_cochains": dim_c, "dim_cocycles": z,
                    "dim_coboundaries": 0, "dim_H": z}
        if degree not in (3, 5):
            raise ValueError("cohomology is computed in degrees 1, 3, 5")
        dim_c = (cochain_space_dim(n, m, degree)
                 + cochain_space_dim(n, m, degree - 2))
        z = dim_c - self.d_rank(degree)
        b = self.d_rank(degree - 2)
        return {"degree": degree, "dim_cochains": dim_c, "dim_cocycles": z,
                "dim_coboundaries": b, "dim_H": z - b}
