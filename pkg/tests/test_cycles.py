import pytest

from app.core.exceptions import UsageError
from app.tautring.correspondence import act
from app.tautring.cycles import (
    compare_printed_fp1,
    diagonal_power_relation,
    fp,
    fpnm,
    gross_schoen_y,
    gs,
    gs_y_difference,
    pointed_gs,
    zk,
)
from app.tautring.monomial import Flavor
from app.tautring.printing import monomial_text
from app.tautring.projectors import kunneth_projector

FP1 = (
    "D(1,2)*psi(1) - psi(1)*psi(2)/(2*g-2) - (psi(1)^2 + psi(2)^2)/(2*g-2)"
    " + kappa(1)*(psi(1) + psi(2))/(2*g-2)^2 + kappa(2)/(2*g-2)^2 - kappa(1)^2/(2*g-2)^3"
)


def test_fp1_expansion(rel):
    assert fp(1) == rel(FP1, 2)


def test_fp_is_swap_symmetric():
    assert fp(1).is_symmetric()
    assert fp(2).is_symmetric()


def test_fp_is_projector_fixed():
    assert act(kunneth_projector((1, 1)), fp(1)) == fp(1)


def test_fp_needs_positive_power():
    with pytest.raises(UsageError):
        fp(0)


def test_restricted_fp1(pt):
    assert fp(1).restrict() == pt("D(1,2)*K(1) - K(1)*K(2)/(2*g-2)", 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_restricted_fp_has_degree_zero(n):
    assert fp(n).restrict().degree(2).is_zero()


def test_restricted_fp1_has_degree_zero():
    assert fp(1).restrict().degree(2).is_zero()


def test_zk(pt, c):
    assert zk() == pt("K(1)*K(2) - (2*g-2)*D(1,2)*K(1)", 2)
    assert fp(1).restrict() * (-c) == zk()


def test_small_diagonal_cycle():
    assert fpnm(3, 0) == gs()
    assert gs().is_symmetric()
    assert gs().codimensions() == [2]


def test_pointed_small_diagonal_is_y():
    assert pointed_gs() == gross_schoen_y()


def test_printed_fp1_comparison(fixture_data):
    expected = fixture_data("fp1_printed_comparison.json")
    statuses = {monomial_text(row['monomial']): row['status'] for row in compare_printed_fp1()}
    assert statuses == expected


@pytest.mark.parametrize("flavor", [Flavor.RELATIVE, Flavor.POINTED])
def test_diagonal_power_relation(fixture_data, flavor):
    expected = fixture_data("diagonal_power_relation.json")
    assert diagonal_power_relation(flavor)['relation'] == expected[flavor.value]


def test_diagonal_power_normal_forms(rel):
    relation = diagonal_power_relation(Flavor.RELATIVE)
    assert relation['first'] == -rel("D(1,2)*psi(1)^5", 2)
    assert relation['second'] == rel("D(1,2)*psi(1)^5", 2)


def test_gs_minus_y_is_fp1_type(fixture_data, pt):
    expected = fixture_data("gs_minus_y_difference.json")
    allowed = set(expected["allowed"])
    report = gs_y_difference()
    assert report["difference"] == pt(expected["difference"], 3)
    assert len(report["terms"]) == 15
    assert report['fp1_type']
    assert {row['shape'] for row in report['terms']} <= allowed
