from itertools import product

import pytest

from app.core.exceptions import UsageError
from app.tautring.correspondence import Correspondence, act, compose, identity
from app.tautring.monomial import Flavor
from app.tautring.projectors import kunneth_projector, pointed_projector, projector, projector_for
from app.tautring.taut_class import TautClass

FLAVORS = [Flavor.RELATIVE, Flavor.POINTED]


def test_relative_middle_projector(rel):
    expected = rel("D(1,2) - psi(1)/(2*g-2) - psi(2)/(2*g-2) + kappa(1)/(2*g-2)^2", 2)
    assert projector(1).cls == expected


def test_pointed_middle_projector(pt):
    assert pointed_projector(1).cls == pt("D(1,2) - o(1) - o(2)", 2)


@pytest.mark.parametrize("flavor", FLAVORS)
def test_projectors_sum_to_identity(flavor):
    total = projector_for(0, flavor).cls + projector_for(1, flavor).cls + projector_for(2, flavor).cls
    assert total == identity(1, flavor).cls


@pytest.mark.parametrize("flavor", FLAVORS)
@pytest.mark.parametrize("a", [0, 1, 2])
@pytest.mark.parametrize("b", [0, 1, 2])
def test_single_factor_projector_algebra(flavor, a, b):
    result = compose(projector_for(a, flavor), projector_for(b, flavor))
    if a == b:
        assert result == projector_for(a, flavor)
    else:
        assert result.is_zero()


@pytest.mark.parametrize("flavor", FLAVORS)
def test_kunneth_projectors_on_two_factors(flavor):
    vectors = list(product((0, 1, 2), repeat=2))
    total = TautClass.zero(4, flavor)
    for a in vectors:
        total = total + kunneth_projector(a, flavor).cls
        for b in vectors:
            result = compose(kunneth_projector(a, flavor), kunneth_projector(b, flavor))
            if a == b:
                assert result == kunneth_projector(a, flavor)
            else:
                assert result.is_zero(), f"{a} o {b}"
    assert total == identity(2, flavor).cls


def test_top_projector_measures_fiber_degree(rel):
    assert act(projector(2), rel("psi(1)", 1)) == rel("psi(1)", 1)
    assert act(projector(2), TautClass.one(1, Flavor.RELATIVE)).is_zero()
    assert act(projector(2), rel("psi(1)^2", 1)) == rel("kappa(1)*psi(1)/(2*g-2)", 1)


def test_pointed_projectors_on_base_point(pt):
    point = pt("o(1)", 1)
    assert act(pointed_projector(1), point).is_zero()
    assert act(pointed_projector(2), point) == point
    assert act(pointed_projector(0), point).is_zero()


@pytest.mark.parametrize("text", ["psi(1)", "psi(1)^2 - kappa(1)", "3*kappa(2)*psi(1)^3"])
def test_functoriality(rel, text):
    alpha = rel(text, 1)
    swap = Correspondence(1, 1, rel("D(1,2) + psi(1)*psi(2)", 2))
    for first in (projector(0), projector(1), swap):
        for second in (projector(2), projector(1), swap):
            assert act(compose(second, first), alpha) == act(second, act(first, alpha))


def test_identity_acts_trivially(rel):
    alpha = rel("D(1,2)*psi(1) + kappa(1)*psi(2)", 2)
    assert act(identity(2), alpha) == alpha


def test_identity_composes_trivially():
    gamma = projector(0)
    assert compose(identity(1), gamma) == gamma
    assert compose(gamma, identity(1)) == gamma


def test_projector_degree_range():
    with pytest.raises(UsageError):
        projector(3)
    with pytest.raises(UsageError):
        kunneth_projector((1, 4))


@pytest.mark.slow
@pytest.mark.parametrize("flavor", FLAVORS)
def test_kunneth_projectors_on_three_factors(flavor):
    vectors = list(product((0, 1, 2), repeat=3))
    total = TautClass.zero(6, flavor)
    for a in vectors:
        total = total + kunneth_projector(a, flavor).cls
        for b in vectors:
            result = compose(kunneth_projector(a, flavor), kunneth_projector(b, flavor))
            if a == b:
                assert result == kunneth_projector(a, flavor)
            else:
                assert result.is_zero(), f"{a} o {b}"
    assert total == identity(3, flavor).cls


def test_pointed_transpose_swaps_outer_projectors():
    assert projector_for(2, Flavor.POINTED).transpose() == projector_for(0, Flavor.POINTED)
    assert projector_for(0, Flavor.POINTED).transpose() == projector_for(2, Flavor.POINTED)
    assert projector_for(1, Flavor.POINTED).transpose() == projector_for(1, Flavor.POINTED)


@pytest.mark.parametrize("flavor", FLAVORS)
def test_transpose_reverses_composition(flavor):
    first = kunneth_projector((1, 2), flavor)
    second = Correspondence(2, 2, identity(2, flavor).cls.permute({1: 2, 2: 1, 3: 3, 4: 4}))
    assert compose(second, first).transpose() == compose(first.transpose(), second.transpose())
    assert first.transpose().transpose() == first
