"""Nijenhuis, Rota-Baxter, and modified Rota-Baxter operators.

All operators are square matrices acting on a Lie triple system by
column convention: (N v)_r = sum_c N[r][c] v[c].  A Nijenhuis operator
satisfies, for all x, y, z,

  [Nx,Ny,Nz] = N( [Nx,Ny,z]+[x,Ny,Nz]+[Nx,y,Nz]
                  - N([Nx,y,z]+[x,Ny,z]+[x,y,Nz] - N[x,y,z]) ),

and the right-hand side (without the outer N) defines the deformed
bracket [x,y,z]_N, which is again a Lie triple system bracket and makes
N a morphism from it to the original one.
"""

import itertools
import os

from .linalg import (
    ident,
    matadd,
    mat_iszero,
    matscale,
    matsub,
    matvec,
    vadd,
    vscale,
    vsub,
)
from .lts import LieTripleSystem, Report, check_lts


class BudgetExceeded(ValueError):
    """Raised when an exhaustive search would exceed its configured budget."""


def _check_operator(system, N):
    n = system.dim
    if len(N) != n or any(len(row) != n for row in N):
        raise ValueError("operator must be a %d-by-%d matrix" % (n, n))
    return tuple(tuple(row) for row in N)


def _deformed_parts(system, x, y, z, N):
    """The three graded sums entering the Nijenhuis identity.

    Returns (a2, a1, a0): bracket terms with two, one, and no arguments
    transformed by N.
    """
    Nx, Ny, Nz = matvec(N, x), matvec(N, y), matvec(N, z)
    a2 = vadd(vadd(system.bracket(Nx, Ny, z), system.bracket(x, Ny, Nz)),
              system.bracket(Nx, y, Nz))
    a1 = vadd(vadd(system.bracket(Nx, y, z), system.bracket(x, Ny, z)),
              system.bracket(x, y, Nz))
    a0 = system.bracket(x, y, z)
    return a2, a1, a0


def nijenhuis_defect(system, N):
    """Nonzero witnesses of [Nx,Ny,Nz] - N([x,y,z]_N) over basis triples."""
    n = system.dim
    N = _check_operator(system, N)
    e = [system.basis_vector(i) for i in range(n)]
    out = []
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        lhs = system.bracket(matvec(N, x), matvec(N, y), matvec(N, z))
        a2, a1, a0 = _deformed_parts(system, x, y, z, N)
        rhs = matvec(N, vsub(a2, matvec(N, vsub(a1, matvec(N, a0)))))
        if lhs != rhs:
            out.append(((i, j, k), lhs, rhs))
    return out


def is_nijenhuis(system, N):
    """Report whether N satisfies the Nijenhuis identity; witnesses show both sides."""
    violations = [
        {"identity": "nijenhuis", "at": t, "lhs": lhs, "rhs": rhs}
        for t, lhs, rhs in nijenhuis_defect(system, N)
    ]
    return Report(not violations, violations)


def is_rota_baxter(system, R, weight=0):
    """Rota-Baxter identity of the given weight, checked on basis triples."""
    n = system.dim
    R = _check_operator(system, R)
    lam = weight
    e = [system.basis_vector(i) for i in range(n)]
    violations = []
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        lhs = system.bracket(matvec(R, x), matvec(R, y), matvec(R, z))
        a2, a1, a0 = _deformed_parts(system, x, y, z, R)
        s = vadd(vadd(a2, vscale(lam, a1)), vscale(lam * lam, a0))
        rhs = matvec(R, s)
        if lhs != rhs:
            violations.append({"identity": "rota-baxter", "weight": lam,
                               "at": (i, j, k), "lhs": lhs, "rhs": rhs})
    return Report(not violations, violations)


def is_modified_rb(system, R, weight=0):
    """Modified Rota-Baxter identity of the given weight on basis triples."""
    n = system.dim
    R = _check_operator(system, R)
    lam = weight
    e = [system.basis_vector(i) for i in range(n)]
    violations = []
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        lhs = system.bracket(matvec(R, x), matvec(R, y), matvec(R, z))
        a2, a1, a0 = _deformed_parts(system, x, y, z, R)
        rhs = vadd(matvec(R, vsub(a2, vscale(lam, a0))), vscale(lam, a1))
        if lhs != rhs:
            violations.append({"identity": "modified-rota-baxter", "weight": lam,
                               "at": (i, j, k), "lhs": lhs, "rhs": rhs})
    return Report(not violations, violations)


def rb_to_modified(R, weight):
    """Map a weight-w Rota-Baxter operator to a modified one.

    Returns (2R + w*I, -w^2); when R is Rota-Baxter of weight w on a
    system, the returned matrix is modified Rota-Baxter of the returned
    weight on the same system.
    """
    n = len(R)
    M = matadd(matscale(2, tuple(tuple(row) for row in R)),
               matscale(weight, ident(n)))
    return M, -(weight * weight)


def induced_bracket(system, N):
    """The deformed system ([.,.,.]_N) together with a validity report.

    The construction is always carried out.  The report records whether N
    is Nijenhuis (a warning is attached when it is not) and whether the
    deformed structure constants satisfy the triple-system axioms; its
    verdict is the conjunction of the two.
    """
    n = system.dim
    N = _check_operator(system, N)
    e = [system.basis_vector(i) for i in range(n)]
    table = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        a2, a1, a0 = _deformed_parts(system, e[i], e[j], e[k], N)
        table[(i, j, k)] = vsub(a2, matvec(N, vsub(a1, matvec(N, a0))))
    deformed = LieTripleSystem(n, table)
    nij = is_nijenhuis(system, N)
    axioms = check_lts(deformed)
    warnings = []
    if not nij:
        warnings.append("operator is not Nijenhuis; deformed bracket may "
                        "fail the triple-system axioms")
    report = Report(nij.ok and axioms.ok,
                    nij.violations + axioms.violations,
                    warnings,
                    {"nijenhuis_ok": nij.ok, "deformed_lts_ok": axioms.ok})
    return deformed, report


def is_morphism(source, target, N):
    """Whether N maps source brackets to target brackets: N[x,y,z]_s = [Nx,Ny,Nz]_t."""
    n = source.dim
    N = _check_operator(source, N)
    e = [source.basis_vector(i) for i in range(n)]
    violations = []
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = matvec(N, source.coeff(i, j, k))
        rhs = target.bracket(matvec(N, e[i]), matvec(N, e[j]), matvec(N, e[k]))
        if lhs != rhs:
            violations.append({"identity": "morphism", "at": (i, j, k),
                               "lhs": lhs, "rhs": rhs})
    return Report(not violations, violations)


def classify_by_square(system, N):
    """Detect special shapes of N^2 and check the matching operator relations.

    Shapes: "zero" (N = 0), "square-zero" (N^2 = 0), "idempotent"
    (N^2 = N), "involution" (N^2 = I), "anti-involution" (N^2 = -I), or
    "generic".  For the special shapes the report's data records whether
    the expected equivalence holds on this system:

      * N^2 = 0:   Nijenhuis  <=>  Rota-Baxter of weight 0,
      * N^2 = N:   Nijenhuis  <=>  Rota-Baxter of weight -1,
      * N^2 = +I:  Nijenhuis  <=>  modified Rota-Baxter of weight -1,
      * N^2 = -I:  Nijenhuis  <=>  modified Rota-Baxter of weight +1.
    """
    N = _check_operator(system, N)
    n = system.dim
    N2 = tuple(tuple(sum(N[r][t] * N[t][c] for t in range(n)) for c in range(n))
               for r in range(n))
    if mat_iszero(N):
        shape = "zero"
    elif mat_iszero(N2):
        shape = "square-zero"
    elif N2 == N:
        shape = "idempotent"
    elif N2 == ident(n):
        shape = "involution"
    elif N2 == matscale(-1, ident(n)):
        shape = "anti-involution"
    else:
        shape = "generic"
    nij = is_nijenhuis(system, N)
    data = {"shape": shape, "nijenhuis_ok": nij.ok}
    if shape in ("zero", "square-zero"):
        other = is_rota_baxter(system, N, 0)
        data["related"] = {"identity": "rota-baxter", "weight": 0, "ok": other.ok}
        data["equivalence_holds"] = nij.ok == other.ok
    elif shape == "idempotent":
        other = is_rota_baxter(system, N, -1)
        data["related"] = {"identity": "rota-baxter", "weight": -1, "ok": other.ok}
        data["equivalence_holds"] = nij.ok == other.ok
    elif shape == "involution":
        other = is_modified_rb(system, N, -1)
        data["related"] = {"identity": "modified-rota-baxter", "weight": -1,
                           "ok": other.ok}
        data["equivalence_holds"] = nij.ok == other.ok
    elif shape == "anti-involution":
        other = is_modified_rb(system, N, 1)
        data["related"] = {"identity": "modified-rota-baxter", "weight": 1,
                           "ok": other.ok}
        data["equivalence_holds"] = nij.ok == other.ok
    return Report(nij.ok, nij.violations, [], data)


def _worker_count():
    raw = os.environ.get("NLTS_THREADS", "")
    try:
        count = int(raw)
    except ValueError:
        return 1
    return max(count, 1)


def _scan_chunk(system, n, values, first_entries):
    found = []
    for head in first_entries:
        for rest in itertools.product(values, repeat=n * n - 1):
            entries = (head,) + rest
            N = tuple(tuple(entries[r * n + c] for c in range(n))
                      for r in range(n))
            if not nijenhuis_defect(system, N):
                found.append(N)
    return found


def grid_search_nijenhuis(system, values, budget=1_000_000):
    """All Nijenhuis matrices with entries drawn from ``values``.

    Entries are enumerated row-major in ascending value order, so the
    result list is deterministic and lexicographically sorted.  Raises
    BudgetExceeded when the grid holds more than ``budget`` candidate
    matrices.  The environment variable NLTS_THREADS caps the number of
    worker threads used to partition the scan (default 1).
    """
    n = system.dim
    values = sorted(set(values))
    if not values:
        return []
    total = len(values) ** (n * n)
    if budget is not None and total > budget:
        raise BudgetExceeded(
            "grid of %d candidate matrices exceeds budget %d" % (total, budget))
    if n == 0:
        return [()]
    workers = _worker_count()
    if workers <= 1 or len(values) < 2:
        return _scan_chunk(system, n, values, values)
    from concurrent.futures import ThreadPoolExecutor
    chunks = [values[i::workers] for i in range(workers)]
    chunks = [c for c in chunks if c]
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        results = list(pool.map(
            lambda c: _scan_chunk(system, n, values, c), chunks))
    merged = [N for part in results for N in part]
    merged.sort(key=lambda N: tuple(x for row in N for x in row))
    return merged
