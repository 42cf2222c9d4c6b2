"""Shared fixtures: the standard exact contexts used across the suite."""

import pytest

from nlts import (
    Complex,
    abelian,
    adjoint_rep,
    ident,
    l2,
    lts_from_lie_algebra,
    solv3_lie,
    trivial_rep,
    zeros,
)

N01 = ((0, 1), (0, 1))
SOLV3_N = ((0, 0, 0), (0, 0, 0), (0, 1, 0))


@pytest.fixture(scope="session")
def cx_l2_adj():
    system = l2()
    return Complex(system, adjoint_rep(system), N01, N01)


@pytest.fixture(scope="session")
def cx_l2_triv():
    system = l2()
    return Complex(system, trivial_rep(system, 1), N01, ((5,),))


@pytest.fixture(scope="session")
def cx_dim1():
    system = abelian(1)
    return Complex(system, trivial_rep(system, 1), ((2,),), ((3,),))


@pytest.fixture(scope="session")
def cx_solv3_adj():
    system = lts_from_lie_algebra(solv3_lie())
    return Complex(system, adjoint_rep(system), SOLV3_N, SOLV3_N)


@pytest.fixture(scope="session")
def cx_ab2_triv():
    system = abelian(2)
    return Complex(system, trivial_rep(system, 1), zeros(2), zeros(1))
