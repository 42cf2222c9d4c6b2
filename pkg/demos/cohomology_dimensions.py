"""Walk-through: the deformation bicomplex and its cohomology dimensions.

Sets up the bicomplex attached to a system, a representation, and a
compatible operator pair, then reports cochain-space dimensions, ranks,
and cohomology dimensions in low degrees.  Ends with a spot check of the
two structural identities every run of the test suite also verifies:
the differentials square to zero and the projection chain rule holds.
"""

from fractions import Fraction

from nlts import Complex, adjoint_rep, l2
from nlts.cohomology import cochain_add, cochain_iszero, cochain_scale

N01 = ((0, 1), (0, 1))


def main():
    system = l2()
    cx = Complex(system, adjoint_rep(system), N01, N01)
    print("context: two-dimensional system, adjoint representation,")
    print("         operator %r on both the system and the fiber" % (N01,))
    print()

    for degree in (1, 3, 5):
        info = cx.cohomology_dim(degree)
        print("degree %d: cochains %d, cocycles %d, coboundaries %d, "
              "cohomology %d"
              % (degree, info["dim_cochains"], info["dim_cocycles"],
                 info["dim_coboundaries"], info["dim_H"]))
    print()

    print("kernel pairs in degree 3 (cocycles of the paired complex):",
          len(cx.kernel_pairs(3)))
    print("kernel pairs in degree 5:", len(cx.kernel_pairs(5)))
    print()

    f = cx.cochain_basis(1)[0]
    f = cochain_add(f, cochain_scale(Fraction(1, 2), cx.cochain_basis(1)[-1]))
    df = cx.delta(f, 1)
    print("sample degree-1 cochain f with a fractional coefficient")
    print("  delta(delta(f)) vanishes:",
          cochain_iszero(cx.delta(df, 3)))
    print("  partial(partial(f)) vanishes:",
          cochain_iszero(cx.partial(cx.partial(f, 1), 3)))
    a, b = cx.d(f, None, 1)
    c, d = cx.d(a, b, 3)
    print("  paired differential squares to zero:",
          cochain_iszero(c) and cochain_iszero(d))
    print("  chain rule partial(phi(f)) == phi(delta(f)):",
          cx.partial(cx.phi(f, 1), 1) == cx.phi(df, 3))


if __name__ == "__main__":
    main()
