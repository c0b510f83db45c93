"""
Chow-Kunneth projectors of the relative curve and of a pointed curve.

Relative flavor, with c = 2g - 2 and z = psi / c on the target factor:

    pi_2 = psi_2 / c
    pi_0 = psi_1 / c - kappa_1 / c^2
    pi_1 = D(1,2) - pi_0 - pi_2

Pointed flavor: pi_2 = o_2, pi_0 = o_1, pi_1 = D(1,2) - o_1 - o_2. In both
flavors pi_2 acts as alpha -> (fiber degree of alpha) * z.
"""
from functools import lru_cache
from typing import Sequence, Tuple
import logging

from app.core.exceptions import UsageError
from app.exactnum.ratfunc import CANONICAL_DEGREE
from app.tautring.correspondence import Correspondence, identity
from app.tautring.monomial import Flavor
from app.tautring.taut_class import TautClass

logger = logging.getLogger(__name__)

KUNNETH_DEGREES = (0, 1, 2)


def _check_degree(k: int) -> None:
    if k not in KUNNETH_DEGREES:
        raise UsageError(f"projector degree must be 0, 1 or 2, got {k}")


@lru_cache(maxsize=None)
def projector(k: int) -> Correspondence:
    _check_degree(k)
    flavor = Flavor.RELATIVE
    inverse_c = CANONICAL_DEGREE.inverse()
    z_target = TautClass.from_factors(2, flavor, [("psi", 2, 1)], inverse_c)
    z_source = TautClass.from_factors(2, flavor, [("psi", 1, 1)], inverse_c)
    kappa_1 = TautClass.from_factors(2, flavor, [("kappa", 1, 1)], inverse_c ** 2)
    if k == 2:
        cls = z_target
    elif k == 0:
        cls = z_source - kappa_1
    else:
        cls = identity(1, flavor).cls - (z_source - kappa_1) - z_target
    return Correspondence(1, 1, cls)


@lru_cache(maxsize=None)
def pointed_projector(k: int) -> Correspondence:
    _check_degree(k)
    flavor = Flavor.POINTED
    o_source = TautClass.from_factors(2, flavor, [("o", 1)])
    o_target = TautClass.from_factors(2, flavor, [("o", 2)])
    if k == 2:
        cls = o_target
    elif k == 0:
        cls = o_source
    else:
        cls = identity(1, flavor).cls - o_source - o_target
    return Correspondence(1, 1, cls)


def projector_for(k: int, flavor: Flavor) -> Correspondence:
    return projector(k) if Flavor(flavor) is Flavor.RELATIVE else pointed_projector(k)


@lru_cache(maxsize=None)
def _kunneth(vector: Tuple[int, ...], flavor: Flavor) -> Correspondence:
    n = len(vector)
    cls = TautClass.one(2 * n, flavor)
    for i, k in enumerate(vector, start=1):
        factor = projector_for(k, flavor).cls
        cls = cls * factor.pullback({1: i, 2: i + n}, 2 * n)
    return Correspondence(n, n, cls)


def kunneth_projector(vector: Sequence[int], flavor: Flavor = Flavor.RELATIVE) -> Correspondence:
    """Product of per-factor projectors pi_{a_1} x ... x pi_{a_n}"""
    vector = tuple(int(k) for k in vector)
    for k in vector:
        _check_degree(k)
    return _kunneth(vector, Flavor(flavor))
