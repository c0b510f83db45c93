"""
Dimensions and tensor powers of the standard representation of Sp(2g).
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List
import logging

import pandas as pd

from app.core.exceptions import RefusalError, UsageError
from app.weights.weight import Weight, positive_roots, rho, unit_weight, zero_weight

logger = logging.getLogger(__name__)


def weyl_dim(weight: Weight) -> int:
    if not weight.is_dominant():
        raise UsageError(f"dimension needs a dominant weight, got {weight}")
    shift = rho(weight.g)
    shifted = weight + shift
    value = Fraction(1)
    for root in positive_roots(weight.g):
        value *= Fraction(shifted.pairing(root), shift.pairing(root))
    return int(value)


def tensor_standard(weight: Weight) -> List[Weight]:
    """Dominant weights lambda +- e_i, each once"""
    if not weight.is_dominant():
        raise UsageError(f"tensor product needs a dominant weight, got {weight}")
    result = set()
    for i in range(weight.g):
        for sign in (1, -1):
            candidate = weight + unit_weight(weight.g, i, sign)
            if candidate.is_dominant():
                result.add(candidate)
    return sorted(result, reverse=True)


@dataclass
class DecompositionTable:
    n: int
    g: int
    multiplicities: Dict[Weight, int]

    def twist(self, weight: Weight) -> int:
        """n_lambda = (n - |lambda|) / 2"""
        return (self.n - weight.size) // 2

    def total_dimension(self) -> int:
        return sum(m * weyl_dim(w) for w, m in self.multiplicities.items())

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                'weight': str(weight),
                'partition': weight.partition,
                'multiplicity': multiplicity,
                'twist': self.twist(weight),
                'dimension': weyl_dim(weight)
            }
            for weight, multiplicity in sorted(self.multiplicities.items(), reverse=True)
        ]
        return pd.DataFrame(rows, columns=['weight', 'partition', 'multiplicity', 'twist', 'dimension'])


def decompose_power(n: int, g: int) -> DecompositionTable:
    """
    Multiplicities of V_lambda in the n-th tensor power of the standard
    representation, stable range n <= g only
    """
    if n < 0 or g < 1:
        raise UsageError(f"need n >= 0 and g >= 1, got n={n}, g={g}")
    if n > g:
        raise RefusalError(f"tensor power {n} lies outside the stable range n <= g = {g}", n)
    current: Counter = Counter({zero_weight(g): 1})
    for _ in range(n):
        following: Counter = Counter()
        for weight, multiplicity in current.items():
            for piece in tensor_standard(weight):
                following[piece] += multiplicity
        current = following
    logger.debug(f"V^{n} for Sp({2 * g}): {len(current)} irreducible pieces")
    return DecompositionTable(n, g, dict(current))
