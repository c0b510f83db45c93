from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from app.core.exceptions import ShapeMismatchError, UsageError
from app.symprod.zero_cycle import (
    ZeroCycle,
    alphabet,
    cycle_text,
    decompose,
    lewis_level,
    parse_cycle,
    push_o,
    reconstruct,
    s_pull,
    verify_identity,
)


def test_parse_and_print():
    z = parse_cycle("{x,o,o} - 2*{x,y,z} + 1/2*{o,x,x}")
    assert z.n == 3
    assert cycle_text(z) == "{o,o,x} + 1/2*{o,x,x} - 2*{x,y,z}"
    assert z.degree() == Fraction(-1, 2)


def test_parse_rejects_mixed_sizes():
    with pytest.raises(ShapeMismatchError):
        parse_cycle("{o} + {o,o}")
    with pytest.raises(UsageError):
        parse_cycle("{o} {o}")


def test_push_o():
    assert push_o(parse_cycle("{x}"), 2) == parse_cycle("{o,o,x}")
    z = parse_cycle("{a} - {b}")
    assert push_o(z, 0) == z
    assert push_o(z, 1) == parse_cycle("{o,a} - {o,b}")


def test_s_pull_counts_each_copy():
    assert s_pull(parse_cycle("{a,a,b}")) == parse_cycle("2*{a,b} + {a,a}")
    assert s_pull(parse_cycle("{a,b,c}")) == parse_cycle("{a,b} + {a,c} + {b,c}")
    assert s_pull(parse_cycle("{x}")) == ZeroCycle(0, {(): 1})


def test_s_pull_distinct_removal():
    assert s_pull(parse_cycle("{a,a,b}"), "distinct") == parse_cycle("{a,b} + {a,a}")


@pytest.mark.parametrize("n,size", [(2, 3), (3, 3), (4, 4), (5, 4), (5, 1)])
def test_identity_holds(n, size):
    report = verify_identity(n, size)
    assert report.holds
    assert report.checked > 0


def test_removal_convention(fixture_data):
    expected = fixture_data("symprod_removal.json")
    for removal, holds in expected.items():
        assert verify_identity(3, 2, removal).holds is holds


def test_distinct_removal_counterexample():
    report = verify_identity(3, 2, "distinct")
    assert report.counterexample == ("o", "o")


def test_base_point_only_alphabet():
    for n in range(2, 6):
        y = ZeroCycle(n - 1, {("o",) * (n - 1): 1})
        assert s_pull(push_o(y)) == y.scale(n)


def test_kernel_cycle():
    z = parse_cycle("{x,y} - {x,o} - {y,o} + {o,o}")
    assert s_pull(z).is_zero()
    components = decompose(z)
    assert components[0] == z
    assert all(component.is_zero() for component in components[1:])
    assert lewis_level(z) == 2


def test_base_point_power():
    components = decompose(parse_cycle("{o,o}"))
    assert components[0].is_zero()
    assert components[1].is_zero()
    assert components[2] == ZeroCycle(0, {(): 1})
    assert lewis_level(parse_cycle("{o,o}")) == 0


def test_pushed_kernel_element():
    kernel = parse_cycle("{x,y} - {x,o} - {y,o} + {o,o}")
    assert lewis_level(push_o(kernel, 1)) == 2


def test_generic_point():
    assert lewis_level(parse_cycle("{x,y}")) == 0


def test_zero_cycle_level():
    assert lewis_level(ZeroCycle(3)) == 3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_decomposition_on_basis(n):
    points = alphabet(3)
    for multiset in combinations_with_replacement(points, n):
        z = ZeroCycle(n, {multiset: 1})
        components = decompose(z)
        assert reconstruct(components) == z
        assert sum((c.degree() for c in components), Fraction(0)) == z.degree()
        for i, component in enumerate(components[:-1]):
            assert component.n == n - i
            assert s_pull(component).is_zero()


def test_decomposition_of_combination():
    z = parse_cycle("3*{o,p1,p2} - 1/3*{p1,p1,p2} + {p2,p2,p2} - 5*{o,o,p1}")
    assert reconstruct(decompose(z)) == z
