"""
Borel-Weil-Bott degrees and Kostant's description of nilradical cohomology.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional
import logging

from app.core.exceptions import UsageError
from app.weights.weight import (
    SignedPermutation,
    Weight,
    is_regular,
    rho,
    simple_roots,
    weyl_group,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BBWResult:
    degree: int
    weight: Weight
    element: SignedPermutation


def chamber_element(v: Weight) -> SignedPermutation:
    """
    The signed permutation sorting |v| decreasingly with positive signs
    """
    order = sorted(range(v.g), key=lambda i: (-abs(v.entries[i]), i))
    signs = tuple(-1 if v.entries[i] < 0 else 1 for i in order)
    return SignedPermutation(tuple(order), signs)


def bbw(weight: Weight) -> Optional[BBWResult]:
    """
    None when weight + rho is singular, otherwise the length of the Weyl element
    carrying it into the dominant chamber and the resulting dominant weight
    """
    shifted = weight + rho(weight.g)
    if not is_regular(shifted):
        logger.debug(f"{weight} + rho = {shifted} is singular")
        return None
    w = chamber_element(shifted)
    return BBWResult(w.length(), w(shifted) - rho(weight.g), w)


def siegel_levi(g: int) -> FrozenSet[int]:
    return frozenset(range(1, g))


def coset_representatives(g: int, levi: Optional[Iterable[int]] = None) -> List[SignedPermutation]:
    """
    W' = {w : <w rho, alpha> > 0 for the simple roots alpha of the Levi}
    """
    levi = siegel_levi(g) if levi is None else frozenset(levi)
    if any(not 1 <= i <= g for i in levi):
        raise UsageError(f"Levi simple roots must be indices in 1..{g}, got {sorted(levi)}")
    roots = simple_roots(g)
    shift = rho(g)
    result = []
    for w in weyl_group(g):
        moved = w(shift)
        if all(moved.pairing(roots[i - 1]) > 0 for i in levi):
            result.append(w)
    return result


def kostant(weight: Weight, degree: int, levi: Optional[Iterable[int]] = None) -> List[Weight]:
    """Weights w . lambda over coset representatives of length `degree`"""
    if not weight.is_dominant():
        raise UsageError(f"kostant needs a dominant weight, got {weight}")
    found = {w.dot(weight) for w in coset_representatives(weight.g, levi) if w.length() == degree}
    return sorted(found, reverse=True)


def kostant_table(weight: Weight, levi: Optional[Iterable[int]] = None) -> Dict[int, List[Weight]]:
    """Every degree with its weights"""
    if not weight.is_dominant():
        raise UsageError(f"kostant needs a dominant weight, got {weight}")
    table: Dict[int, List[Weight]] = {}
    for w in coset_representatives(weight.g, levi):
        table.setdefault(w.length(), []).append(w.dot(weight))
    return {degree: sorted(weights, reverse=True) for degree, weights in sorted(table.items())}
