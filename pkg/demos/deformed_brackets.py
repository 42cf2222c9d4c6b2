"""Walk-through: operators on triple systems and the brackets they deform.

Builds the standard two-dimensional system and a three-dimensional
solvable one, checks operators against the exact Nijenhuis condition,
deforms the bracket, and classifies operators by the shape of their
square.  All arithmetic is exact; nothing here is approximate.
"""

from nlts import l2, lts_from_lie_algebra, solv3_lie, ident, zeros
from nlts.lts import check_lts
from nlts.operators import (
    classify_by_square,
    grid_search_nijenhuis,
    induced_bracket,
    is_morphism,
    is_nijenhuis,
    nijenhuis_defect,
)


def show_system(name, system):
    print("%s: dimension %d, %d nonzero structure entries"
          % (name, system.dim, sum(1 for v in system.table.values()
                                   if any(v))))
    report = check_lts(system)
    print("  axioms hold:", report.ok)


def deform(name, system, N):
    print("operator %r on %s" % (N, name))
    print("  nijenhuis:", is_nijenhuis(system, N).ok)
    print("  defect witnesses (empty iff Nijenhuis):",
          len(nijenhuis_defect(system, N)))
    deformed, report = induced_bracket(system, N)
    print("  deformed bracket satisfies the axioms:",
          report.data["deformed_lts_ok"])
    print("  N is a morphism from the deformed system to the original:",
          is_morphism(deformed, system, N).ok)
    shape = classify_by_square(system, N).data
    print("  square shape: %s" % shape["shape"])
    if "related" in shape:
        rel = shape["related"]
        print("  related averaging identity: %s (weight %r) holds: %s"
              % (rel["identity"], rel["weight"], rel["ok"]))
        print("  equivalence with the Nijenhuis property holds:",
              shape["equivalence_holds"])
    print()


def main():
    two = l2()
    solv = lts_from_lie_algebra(solv3_lie())
    show_system("two-dimensional system", two)
    show_system("three-dimensional solvable system", solv)
    print()

    deform("the two-dimensional system", two, ((0, 1), (0, 1)))
    deform("the two-dimensional system", two, ((1, 0), (0, -1)))
    deform("the solvable system", solv, ((0, 0, 0), (0, 0, 0), (0, 1, 0)))
    deform("the solvable system", solv, ident(3))
    deform("the solvable system", solv, zeros(3))

    found = grid_search_nijenhuis(two, (-1, 0, 1))
    print("grid search over entries {-1, 0, 1} on the two-dimensional "
          "system: %d Nijenhuis operators out of %d candidates"
          % (len(found), 3 ** 4))
    print("first few, in lexicographic order:")
    for N in found[:5]:
        print("  %r" % (N,))


if __name__ == "__main__":
    main()
