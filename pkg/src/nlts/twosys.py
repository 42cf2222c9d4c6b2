"""Lie triple 2-systems, their Nijenhuis structures, and crossed modules.

A Lie triple 2-system is a two-term object (T0, T1, h, l3, l5): a base
space T0, a fiber space T1, a linear map h : T1 -> T0, a trilinear
bracket l3 defined on argument mixtures with at most one T1 entry (two
or more T1 entries give zero), and a five-argument map
l5 : T0^5 -> T1.  The bracket is stored as four tensors keyed by the
slot carrying the T1 argument:

  l3_000[(i,j,k)]  base bracket, lands in T0;
  l3_100[(a,i,j)]  T1 argument first, lands in T1;
  l3_010[(i,a,j)]  T1 argument second;
  l3_001[(i,j,a)]  T1 argument third.

A Nijenhuis structure on such a system is a triple (N0, N1, N2): base
and fiber operators plus a correcting map N2 : T0^3 -> T1.  The
compatibility conditions tie the failure of N0 to be Nijenhuis on the
base to h o N2, the failure on the fiber action to N2(., ., h(.)), and
the five-argument coherence to the degree-5 pair differential of the
associated complex (base system, slot-one action, N0, N1).

A 2-system with h = 0 is skeletal; one with l5 = 0 (and N2 = 0 for the
Nijenhuis structure) is strict.  Skeletal structures repackage exactly
as degree-5 cocycle pairs, and strict ones as crossed modules.
"""

import itertools

from .linalg import (
    matadd,
    matmul,
    matscale,
    matsub,
    matvec,
    vadd,
    viszero,
    vscale,
    vsub,
    vzero,
    zeros,
)
from .lts import LieTripleSystem, Report, Representation
from .cohomology import Complex, normalize_cochain, zero_cochain
from .operators import nijenhuis_defect, _deformed_parts, _check_operator


def _freeze_tensor(table, shape, outdim, name):
    out = {}
    for key in itertools.product(*(range(s) for s in shape)):
        v = table.get(key) if table else None
        if v is None:
            out[key] = vzero(outdim)
        else:
            v = tuple(v)
            if len(v) != outdim:
                raise ValueError("%s value at %r has length %d, expected %d"
                                 % (name, key, len(v), outdim))
            out[key] = v
    return out


class LieTriple2System:
    """Two-term Lie triple data (T0, T1, h, graded l3, l5)."""

    def __init__(self, dim0, dim1, h, l3_000=None, l3_100=None, l3_010=None,
                 l3_001=None, l5=None):
        self.n0 = int(dim0)
        self.n1 = int(dim1)
        if len(h) != self.n0 or any(len(row) != self.n1 for row in h):
            raise ValueError("h must be a %d-by-%d matrix" % (self.n0, self.n1))
        self.h = tuple(tuple(row) for row in h)
        n0, n1 = self.n0, self.n1
        self.l3_000 = _freeze_tensor(l3_000, (n0, n0, n0), n0, "l3_000")
        self.l3_100 = _freeze_tensor(l3_100, (n1, n0, n0), n1, "l3_100")
        self.l3_010 = _freeze_tensor(l3_010, (n0, n1, n0), n1, "l3_010")
        self.l3_001 = _freeze_tensor(l3_001, (n0, n0, n1), n1, "l3_001")
        self.l5 = _freeze_tensor(l5, (n0,) * 5, n1, "l5")

    # -- multilinear evaluation, args as basis indices or vectors ----------

    def _ev(self, table, shape, args):
        vecpos = [p for p, a in enumerate(args) if not isinstance(a, int)]
        if not vecpos:
            return table[tuple(args)]
        outdim = len(next(iter(table.values())))
        acc = [0] * outdim
        ranges = [range(shape[p]) for p in vecpos]
        for repl in itertools.product(*ranges):
            coef = 1
            for p, t in zip(vecpos, repl):
                coef = coef * args[p][t]
            if not coef:
                continue
            key = list(args)
            for p, t in zip(vecpos, repl):
                key[p] = t
            v = table[tuple(key)]
            for r in range(outdim):
                if v[r]:
                    acc[r] += coef * v[r]
        return tuple(acc)

    def ev000(self, x, y, z):
        return self._ev(self.l3_000, (self.n0, self.n0, self.n0), (x, y, z))

    def ev100(self, a, x, y):
        return self._ev(self.l3_100, (self.n1, self.n0, self.n0), (a, x, y))

    def ev010(self, x, a, y):
        return self._ev(self.l3_010, (self.n0, self.n1, self.n0), (x, a, y))

    def ev001(self, x, y, a):
        return self._ev(self.l3_001, (self.n0, self.n0, self.n1), (x, y, a))

    def ev5(self, *args):
        return self._ev(self.l5, (self.n0,) * 5, args)

    def h_vec(self, a):
        """h applied to a fiber basis index or vector."""
        if isinstance(a, int):
            return tuple(self.h[r][a] for r in range(self.n0))
        return matvec(self.h, a)

    def base_system(self):
        return LieTripleSystem(self.n0, self.l3_000)

    def slot1_action(self):
        """Matrices of the first-slot action: (x, y) -> l3(., x, y) on T1."""
        n0, n1 = self.n0, self.n1
        out = {}
        for i in range(n0):
            for j in range(n0):
                out[(i, j)] = tuple(tuple(self.l3_100[(a, i, j)][r]
                                          for a in range(n1))
                                    for r in range(n1))
        return out

    def third_slot_action(self):
        """Matrices of the third-slot pattern: (x, y) -> l3(x, y, .)."""
        n0, n1 = self.n0, self.n1
        out = {}
        for i in range(n0):
            for j in range(n0):
                out[(i, j)] = tuple(tuple(self.l3_001[(i, j, a)][r]
                                          for a in range(n1))
                                    for r in range(n1))
        return out

    def is_skeletal(self):
        return all(all(x == 0 for x in row) for row in self.h)

    def is_strict(self):
        return all(viszero(v) for v in self.l5.values())


class Nijenhuis2Structure:
    """Operator triple (N0, N1, N2) on a Lie triple 2-system."""

    def __init__(self, dim0, dim1, N0, N1, N2=None):
        self.n0 = int(dim0)
        self.n1 = int(dim1)
        if len(N0) != self.n0 or any(len(row) != self.n0 for row in N0):
            raise ValueError("N0 must be %d-by-%d" % (self.n0, self.n0))
        if len(N1) != self.n1 or any(len(row) != self.n1 for row in N1):
            raise ValueError("N1 must be %d-by-%d" % (self.n1, self.n1))
        self.N0 = tuple(tuple(row) for row in N0)
        self.N1 = tuple(tuple(row) for row in N1)
        self.N2 = _freeze_tensor(N2, (self.n0,) * 3, self.n1, "N2")

    def is_strict_part(self):
        return all(viszero(v) for v in self.N2.values())


def associated_complex(sys2, nstr):
    """The cochain complex of (base system, first-slot action, N0, N1)."""
    base = sys2.base_system()
    rep = Representation(base, sys2.n1, sys2.slot1_action())
    return Complex(base, rep, nstr.N0, nstr.N1)


# ---------------------------------------------------------------------------
# the eleven 2-system conditions

def check_2system(sys2):
    """All coherence conditions of a Lie triple 2-system, with witnesses."""
    n0, n1 = sys2.n0, sys2.n1
    s = sys2
    v = []

    def bad(cond, at, lhs, rhs=None):
        entry = {"condition": cond, "at": at, "lhs": lhs}
        if rhs is not None:
            entry["rhs"] = rhs
        v.append(entry)

    # L1: antisymmetry in the first two slots, in every grading
    for i, j, k in itertools.product(range(n0), repeat=3):
        w = vadd(s.l3_000[(i, j, k)], s.l3_000[(j, i, k)])
        if not viszero(w):
            bad("L1-base-antisymmetry", (i, j, k), w)
    for i, j in itertools.product(range(n0), repeat=2):
        for a in range(n1):
            w = vadd(s.l3_001[(i, j, a)], s.l3_001[(j, i, a)])
            if not viszero(w):
                bad("L1-third-slot-antisymmetry", (i, j, a), w)
            w = vadd(s.l3_100[(a, i, j)], s.l3_010[(i, a, j)])
            if not viszero(w):
                bad("L1-mixed-antisymmetry", (a, i, j), w)

    # L2: h intertwines the fiber bracket with the base bracket
    for a in range(n1):
        ha = s.h_vec(a)
        for j, k in itertools.product(range(n0), repeat=2):
            lhs = matvec(s.h, s.l3_100[(a, j, k)])
            rhs = s.ev000(ha, j, k)
            if lhs != rhs:
                bad("L2", (a, j, k), lhs, rhs)

    # L3: the three h-balancing identities
    for a, b in itertools.product(range(n1), repeat=2):
        ha, hb = s.h_vec(a), s.h_vec(b)
        for x in range(n0):
            lhs = s.ev010(ha, b, x)
            rhs = s.ev100(a, hb, x)
            if lhs != rhs:
                bad("L3-first", (a, b, x), lhs, rhs)
            lhs = s.ev001(ha, x, b)
            rhs = s.ev100(a, x, hb)
            if lhs != rhs:
                bad("L3-second", (a, b, x), lhs, rhs)
            lhs = s.ev001(x, ha, b)
            rhs = s.ev010(x, a, hb)
            if lhs != rhs:
                bad("L3-third", (a, b, x), lhs, rhs)

    # L4: cyclic sums, in every grading
    for i, j, k in itertools.product(range(n0), repeat=3):
        w = vadd(vadd(s.l3_000[(i, j, k)], s.l3_000[(j, k, i)]),
                 s.l3_000[(k, i, j)])
        if not viszero(w):
            bad("L4-base-cyclic", (i, j, k), w)
    for i, j in itertools.product(range(n0), repeat=2):
        for a in range(n1):
            w = vadd(vadd(s.l3_001[(i, j, a)], s.l3_010[(j, a, i)]),
                     s.l3_100[(a, i, j)])
            if not viszero(w):
                bad("L4-mixed-cyclic", (i, j, a), w)

    # L5: h of l5 measures the base five-term defect
    for t in itertools.product(range(n0), repeat=5):
        x1, x2, x3, x4, x5 = t
        lhs = matvec(s.h, s.l5[t])
        rhs = vscale(-1, s.ev000(x1, x2, s.l3_000[(x3, x4, x5)]))
        rhs = vadd(rhs, s.ev000(x3, s.l3_000[(x1, x2, x4)], x5))
        rhs = vadd(rhs, s.ev000(s.l3_000[(x1, x2, x3)], x4, x5))
        rhs = vadd(rhs, s.ev000(x3, x4, s.l3_000[(x1, x2, x5)]))
        if lhs != rhs:
            bad("L5", t, lhs, rhs)

    # L6..L10: l5 on h(a) in each slot equals the mixed five-term defect
    for a in range(n1):
        ha = s.h_vec(a)
        for t in itertools.product(range(n0), repeat=4):
            y2, y3, y4, y5 = t
            lhs = s.ev5(ha, y2, y3, y4, y5)
            rhs = vscale(-1, s.ev100(a, y2, s.l3_000[(y3, y4, y5)]))
            rhs = vadd(rhs, s.ev010(y3, s.l3_100[(a, y2, y4)], y5))
            rhs = vadd(rhs, s.ev100(s.l3_100[(a, y2, y3)], y4, y5))
            rhs = vadd(rhs, s.ev001(y3, y4, s.l3_100[(a, y2, y5)]))
            if lhs != rhs:
                bad("L6", (a,) + t, lhs, rhs)

            y1, y3, y4, y5 = t
            lhs = s.ev5(y1, ha, y3, y4, y5)
            rhs = vscale(-1, s.ev010(y1, a, s.l3_000[(y3, y4, y5)]))
            rhs = vadd(rhs, s.ev010(y3, s.l3_010[(y1, a, y4)], y5))
            rhs = vadd(rhs, s.ev100(s.l3_010[(y1, a, y3)], y4, y5))
            rhs = vadd(rhs, s.ev001(y3, y4, s.l3_010[(y1, a, y5)]))
            if lhs != rhs:
                bad("L7", (y1, a, y3, y4, y5), lhs, rhs)

            y1, y2, y4, y5 = t
            lhs = s.ev5(y1, y2, ha, y4, y5)
            rhs = vscale(-1, s.ev001(y1, y2, s.l3_100[(a, y4, y5)]))
            rhs = vadd(rhs, s.ev100(a, s.l3_000[(y1, y2, y4)], y5))
            rhs = vadd(rhs, s.ev100(s.l3_001[(y1, y2, a)], y4, y5))
            rhs = vadd(rhs, s.ev100(a, y4, s.l3_000[(y1, y2, y5)]))
            if lhs != rhs:
                bad("L8", (y1, y2, a, y4, y5), lhs, rhs)

            y1, y2, y3, y5 = t
            lhs = s.ev5(y1, y2, y3, ha, y5)
            rhs = vscale(-1, s.ev001(y1, y2, s.l3_010[(y3, a, y5)]))
            rhs = vadd(rhs, s.ev010(y3, s.l3_001[(y1, y2, a)], y5))
            rhs = vadd(rhs, s.ev010(s.l3_000[(y1, y2, y3)], a, y5))
            rhs = vadd(rhs, s.ev010(y3, a, s.l3_000[(y1, y2, y5)]))
            if lhs != rhs:
                bad("L9", (y1, y2, y3, a, y5), lhs, rhs)

            y1, y2, y3, y4 = t
            lhs = s.ev5(y1, y2, y3, y4, ha)
            rhs = vscale(-1, s.ev001(y1, y2, s.l3_001[(y3, y4, a)]))
            rhs = vadd(rhs, s.ev001(y3, s.l3_000[(y1, y2, y4)], a))
            rhs = vadd(rhs, s.ev001(s.l3_000[(y1, y2, y3)], y4, a))
            rhs = vadd(rhs, s.ev001(y3, y4, s.l3_001[(y1, y2, a)]))
            if lhs != rhs:
                bad("L10", (y1, y2, y3, y4, a), lhs, rhs)

    # L11: the fourteen-term coherence of l5 with the graded bracket
    for t in itertools.product(range(n0), repeat=7):
        x1, x2, x3, x4, x5, x6, x7 = t
        w = s.ev100(s.l5[(x1, x2, x3, x4, x5)], x6, x7)
        w = vsub(w, s.ev100(s.l5[(x1, x2, x3, x4, x6)], x5, x7))
        w = vadd(w, s.ev001(x1, x2, s.l5[(x3, x4, x5, x6, x7)]))
        w = vsub(w, s.ev001(x3, x4, s.l5[(x1, x2, x5, x6, x7)]))
        w = vadd(w, s.ev001(x5, x6, s.l5[(x1, x2, x3, x4, x7)]))
        w = vsub(w, s.ev5(s.l3_000[(x1, x2, x3)], x4, x5, x6, x7))
        w = vsub(w, s.ev5(x3, s.l3_000[(x1, x2, x4)], x5, x6, x7))
        w = vsub(w, s.ev5(x3, x4, s.l3_000[(x1, x2, x5)], x6, x7))
        w = vsub(w, s.ev5(x3, x4, x5, s.l3_000[(x1, x2, x6)], x7))
        w = vsub(w, s.ev5(x3, x4, x5, x6, s.l3_000[(x1, x2, x7)]))
        w = vadd(w, s.ev5(x1, x2, s.l3_000[(x3, x4, x5)], x6, x7))
        w = vadd(w, s.ev5(x1, x2, x5, s.l3_000[(x3, x4, x6)], x7))
        w = vadd(w, s.ev5(x1, x2, x5, x6, s.l3_000[(x3, x4, x7)]))
        w = vsub(w, s.ev5(x1, x2, x3, x4, s.l3_000[(x5, x6, x7)]))
        if not viszero(w):
            bad("L11", t, w)

    report = Report(not v, v)
    report.data["skeletal"] = s.is_skeletal()
    report.data["strict"] = s.is_strict()
    return report


# ---------------------------------------------------------------------------
# Nijenhuis structure conditions

def check_nijenhuis_2system(sys2, nstr):
    """Compatibility of (N0, N1, N2) with a Lie triple 2-system.

    Witnesses name the condition; the report's data records the skeletal
    and strict flags and two diagnostics: whether the second fiber
    condition read through the first-slot action agrees with the
    third-slot reading, and whether an expanded classical form of the
    five-argument condition agrees with the differential-based one.
    """
    if (sys2.n0, sys2.n1) != (nstr.n0, nstr.n1):
        raise ValueError("dimension mismatch between system and structure")
    n0, n1 = sys2.n0, sys2.n1
    s = sys2
    N0, N1, N2 = nstr.N0, nstr.N1, nstr.N2
    v = []

    def bad(cond, at, lhs, rhs=None):
        entry = {"condition": cond, "at": at, "lhs": lhs}
        if rhs is not None:
            entry["rhs"] = rhs
        v.append(entry)

    # (a) the operators commute with h
    comm = matsub(matmul(N0, s.h), matmul(s.h, N1))
    if any(any(x for x in row) for row in comm):
        bad("operator-h-commutation", None, comm)

    # (b), (c): N2 has cochain symmetry
    for i, j, k in itertools.product(range(n0), repeat=3):
        w = vadd(N2[(i, j, k)], N2[(j, i, k)])
        if not viszero(w):
            bad("N2-antisymmetry", (i, j, k), w)
        w = vadd(vadd(N2[(i, j, k)], N2[(j, k, i)]), N2[(k, i, j)])
        if not viszero(w):
            bad("N2-cyclic", (i, j, k), w)

    # (d): the base Nijenhuis defect is -h(N2)
    base = s.base_system()
    e0 = [base.basis_vector(i) for i in range(n0)]
    for t in itertools.product(range(n0), repeat=3):
        x, y, z = e0[t[0]], e0[t[1]], e0[t[2]]
        a2, a1, a0 = _deformed_parts(base, x, y, z, N0)
        p2 = vsub(a2, matvec(N0, vsub(a1, matvec(N0, a0))))
        lhs = vsub(base.bracket(matvec(N0, x), matvec(N0, y), matvec(N0, z)),
                   matvec(N0, p2))
        rhs = vscale(-1, matvec(s.h, N2[t]))
        if lhs != rhs:
            bad("base-defect", t, lhs, rhs)

    # (e): the fiber-action defect is N2(., ., h(.))
    Dm = s.third_slot_action()
    Th = s.slot1_action()

    def act_defect(action):
        defects = {}
        for i, j in itertools.product(range(n0), repeat=2):
            Nx = matvec(N0, e0[i])
            Ny = matvec(N0, e0[j])
            axy = _bilin(action, n0, e0[i], e0[j])
            aNy = _bilin(action, n0, Nx, e0[j])
            axN = _bilin(action, n0, e0[i], Ny)
            aNN = _bilin(action, n0, Nx, Ny)
            inner = matadd(aNN, matadd(matmul(axN, N1), matmul(aNy, N1)))
            inner = matsub(inner, matmul(N1, aNy))
            inner = matsub(inner, matmul(N1, axN))
            inner = matsub(inner, matmul(N1, matmul(axy, N1)))
            inner = matadd(inner, matmul(matmul(N1, N1), axy))
            defects[(i, j)] = matsub(matmul(N1, inner), matmul(aNN, N1))
        return defects

    dD = act_defect(Dm)
    dT = act_defect(Th)
    theta_agrees = True
    for i, j in itertools.product(range(n0), repeat=2):
        for a in range(n1):
            lhs = tuple(dD[(i, j)][r][a] for r in range(n1))
            ha = s.h_vec(a)
            rhs = vzero(n1)
            for k in range(n0):
                if ha[k]:
                    rhs = vadd(rhs, vscale(ha[k], N2[(i, j, k)]))
            if lhs != rhs:
                bad("fiber-defect", (i, j, a), lhs, rhs)
            lhs_t = tuple(dT[(i, j)][r][a] for r in range(n1))
            if lhs_t != rhs:
                theta_agrees = False

    # (f): the five-argument condition, as the degree-5 pair differential
    cx = associated_complex(sys2, nstr)
    f5 = normalize_cochain(s.l5, n0, n1, 5)
    g3 = normalize_cochain(N2, n0, n1, 3)
    _, second = cx.d(f5, g3, 5)
    for t in sorted(second):
        if not viszero(second[t]):
            bad("five-argument", t, second[t])

    expanded_agrees = _expanded_five_condition_agrees(
        sys2, nstr, cx, second)

    report = Report(not v, v)
    report.data["skeletal"] = s.is_skeletal()
    report.data["strict"] = s.is_strict() and nstr.is_strict_part()
    report.data["slot_readings_agree"] = theta_agrees
    report.data["expanded_form_agrees"] = expanded_agrees
    if not theta_agrees:
        report.warnings.append(
            "the first-slot reading of the fiber-action condition differs "
            "from the third-slot reading on this input")
    if not expanded_agrees:
        report.warnings.append(
            "the expanded classical form of the five-argument condition "
            "differs from the differential-based one on this input")
    return report


def _bilin(action, n0, x, y):
    """Bilinear combination of an action's basis matrices."""
    acc = None
    for i in range(n0):
        if not x[i]:
            continue
        for j in range(n0):
            c = x[i] * y[j]
            if not c:
                continue
            term = matscale(c, action[(i, j)])
            acc = term if acc is None else matadd(acc, term)
    if acc is None:
        m = len(next(iter(action.values())))
        return zeros(m)
    return acc


def _expanded_five_condition_agrees(sys2, nstr, cx, semantic_second):
    """Compare the expanded classical five-argument identity with the
    differential-based condition, pointwise over basis tuples."""
    s = sys2
    n0 = s.n0
    N0, N1, N2 = nstr.N0, nstr.N1, nstr.N2
    base = s.base_system()
    e0 = [base.basis_vector(i) for i in range(n0)]

    def p2(i, j, k):
        a2, a1, a0 = _deformed_parts(base, e0[i], e0[j], e0[k], N0)
        return vsub(a2, matvec(N0, vsub(a1, matvec(N0, a0))))

    def n2v(x, y, z):
        return s._ev(nstr.N2, (n0, n0, n0), (x, y, z))

    literal_holds = True
    for t in itertools.product(range(n0), repeat=5):
        x1, x2, x3, x4, x5 = t
        Nx = [matvec(N0, e0[i]) for i in (x1, x2, x3, x4, x5)]
        w = s.ev5(*Nx)
        w = vadd(w, s.ev100(N2[(x1, x2, x3)], Nx[3], Nx[4]))
        w = vadd(w, s.ev010(Nx[2], N2[(x1, x2, x4)], Nx[4]))
        w = vadd(w, s.ev001(Nx[2], Nx[3], N2[(x1, x2, x5)]))
        w = vadd(w, n2v(p2(x1, x2, x3), x4, x5))
        w = vadd(w, n2v(x3, p2(x1, x2, x4), x5))
        w = vadd(w, n2v(x3, x4, p2(x1, x2, x5)))
        w = vsub(w, s.ev001(Nx[0], Nx[1], N2[(x3, x4, x5)]))
        w = vsub(w, n2v(x1, x2, p2(x3, x4, x5)))
        w = vsub(w, matvec(N1, s.l5[t]))
        if not viszero(w):
            literal_holds = False
            break
    semantic_holds = all(viszero(v) for v in semantic_second.values())
    return literal_holds == semantic_holds


# ---------------------------------------------------------------------------
# skeletal <-> degree-5 cocycle pairs

def skeletal_to_cocycle(sys2, nstr):
    """Repackage a skeletal structure as a degree-5 pair over its complex.

    Returns (complex, f, g) with f = l5 and g = N2.  Requires h = 0.
    """
    if not sys2.is_skeletal():
        raise ValueError("the 2-system is not skeletal (h is nonzero)")
    cx = associated_complex(sys2, nstr)
    f = normalize_cochain(sys2.l5, sys2.n0, sys2.n1, 5)
    g = normalize_cochain(nstr.N2, sys2.n0, sys2.n1, 3)
    return cx, f, g


def cocycle_to_skeletal(complex_, f, g):
    """Repackage a degree-5 pair over a complex as a skeletal structure.

    The bracket tensors come from the complex's representation through
    the standard dictionary: first slot carries the action, the middle
    slot its negative, the third slot the derived family.
    """
    n, m = complex_.n, complex_.m
    base = complex_.system
    rep = complex_.rep
    h = zeros(n, m)
    l3_100 = {}
    l3_010 = {}
    l3_001 = {}
    for i in range(n):
        for j in range(n):
            th = rep.theta[(i, j)]
            Dm = rep.D(i, j)
            for a in range(m):
                l3_100[(a, i, j)] = tuple(th[r][a] for r in range(m))
                l3_010[(i, a, j)] = tuple(-th[r][a] for r in range(m))
                l3_001[(i, j, a)] = tuple(Dm[r][a] for r in range(m))
    f = normalize_cochain(f, n, m, 5)
    g = normalize_cochain(g, n, m, 3)
    sys2 = LieTriple2System(n, m, h, base.table, l3_100, l3_010, l3_001, f)
    nstr = Nijenhuis2Structure(n, m, complex_.N, complex_.Nv, g)
    return sys2, nstr


# ---------------------------------------------------------------------------
# crossed modules

class CrossedModule:
    """A base system with operator, a fiber system, h, and an action."""

    def __init__(self, base, N0, fiber_dim, fiber_table, h, action, N1):
        self.base = base
        self.n0 = base.dim
        self.n1 = int(fiber_dim)
        self.N0 = _check_operator(base, N0)
        self.fiber = LieTripleSystem(self.n1, fiber_table)
        if len(h) != self.n0 or any(len(row) != self.n1 for row in h):
            raise ValueError("h must be %d-by-%d" % (self.n0, self.n1))
        self.h = tuple(tuple(row) for row in h)
        self.action = Representation(base, self.n1, action)
        if len(N1) != self.n1 or any(len(row) != self.n1 for row in N1):
            raise ValueError("N1 must be %d-by-%d" % (self.n1, self.n1))
        self.N1 = tuple(tuple(row) for row in N1)


def check_crossed_module(xm):
    """All defining conditions of a crossed module of this kind."""
    from .lts import check_lts, check_representation
    from .operators import is_nijenhuis
    from .nrep import check_nijenhuis_rep

    v = []
    base_ok = check_lts(xm.base)
    for item in base_ok.violations:
        v.append(dict(item, condition="base-axioms"))
    nij = is_nijenhuis(xm.base, xm.N0)
    for item in nij.violations:
        v.append(dict(item, condition="base-operator"))
    fiber_ok = check_lts(xm.fiber)
    for item in fiber_ok.violations:
        v.append(dict(item, condition="fiber-axioms"))
    rep_ok = check_representation(xm.action)
    for item in rep_ok.violations:
        v.append(dict(item, condition="action-representation"))
    nrep_ok = check_nijenhuis_rep(xm.action, xm.N0, xm.N1)
    for item in nrep_ok.violations:
        v.append(dict(item, condition="action-operator"))

    n0, n1 = xm.n0, xm.n1
    h = xm.h
    comm = matsub(matmul(xm.N0, h), matmul(h, xm.N1))
    if any(any(x for x in row) for row in comm):
        v.append({"condition": "operator-h-commutation", "value": comm})

    # h is a homomorphism of triple systems
    e1 = [xm.fiber.basis_vector(a) for a in range(n1)]
    for t in itertools.product(range(n1), repeat=3):
        lhs = matvec(h, xm.fiber.coeff(*t))
        rhs = xm.base.bracket(matvec(h, e1[t[0]]), matvec(h, e1[t[1]]),
                              matvec(h, e1[t[2]]))
        if lhs != rhs:
            v.append({"condition": "h-homomorphism", "at": t,
                      "lhs": lhs, "rhs": rhs})

    # h carries the action to the base bracket
    e0 = [xm.base.basis_vector(i) for i in range(n0)]
    for i, j in itertools.product(range(n0), repeat=2):
        th = xm.action.theta[(i, j)]
        for a in range(n1):
            lhs = matvec(h, tuple(th[r][a] for r in range(n1)))
            rhs = xm.base.bracket(matvec(h, e1[a]), e0[i], e0[j])
            if lhs != rhs:
                v.append({"condition": "h-equivariance", "at": (i, j, a),
                          "lhs": lhs, "rhs": rhs})

    # the action on h-images recovers the fiber bracket
    for a, b in itertools.product(range(n1), repeat=2):
        act = xm.action.theta_vecs(matvec(h, e1[a]), matvec(h, e1[b]))
        for c in range(n1):
            lhs = tuple(act[r][c] for r in range(n1))
            rhs = xm.fiber.coeff(c, a, b)
            if lhs != rhs:
                v.append({"condition": "peiffer", "at": (a, b, c),
                          "lhs": lhs, "rhs": rhs})
    return Report(not v, v)


def strict_to_crossed_module(sys2, nstr):
    """Repackage a strict structure (l5 = 0, N2 = 0) as a crossed module.

    The fiber bracket is [a,b,c] = l3(h(a), h(b), c) and the action is
    the first-slot family of the 2-system.
    """
    if not (sys2.is_strict() and nstr.is_strict_part()):
        raise ValueError("the structure is not strict (l5 or N2 is nonzero)")
    n0, n1 = sys2.n0, sys2.n1
    fiber_table = {}
    for a, b, c in itertools.product(range(n1), repeat=3):
        fiber_table[(a, b, c)] = sys2.ev001(sys2.h_vec(a), sys2.h_vec(b), c)
    base = sys2.base_system()
    return CrossedModule(base, nstr.N0, n1, fiber_table, sys2.h,
                         sys2.slot1_action(), nstr.N1)


def crossed_module_to_strict(xm):
    """Repackage a crossed module as a strict structure.

    The graded bracket tensors come from the action through the standard
    dictionary, and l5 and N2 are zero.
    """
    n0, n1 = xm.n0, xm.n1
    l3_100 = {}
    l3_010 = {}
    l3_001 = {}
    for i in range(n0):
        for j in range(n0):
            th = xm.action.theta[(i, j)]
            Dm = xm.action.D(i, j)
            for a in range(n1):
                l3_100[(a, i, j)] = tuple(th[r][a] for r in range(n1))
                l3_010[(i, a, j)] = tuple(-th[r][a] for r in range(n1))
                l3_001[(i, j, a)] = tuple(Dm[r][a] for r in range(n1))
    sys2 = LieTriple2System(n0, n1, xm.h, xm.base.table, l3_100, l3_010,
                            l3_001, None)
    nstr = Nijenhuis2Structure(n0, n1, xm.N0, xm.N1, None)
    return sys2, nstr
