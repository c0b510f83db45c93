"""
Decorated-partition monomials and the rewrite system that normalizes them.

A raw product is a list of factors

    ("D", (i, j, ...))   small diagonal on the listed factors
    ("psi", i, e)        psi_i^e
    ("kappa", a, m)      kappa_a^m, pulled back from the base
    ("K", i), ("o", i)   canonical class / base point on factor i (pointed flavor)

and ``normalize_factors`` reduces it with a union-find over factor indices.
Merging two blocks is the diagonal relation; re-joining indices that already
share a block is an excess intersection and contributes -psi on the block
(-K in pointed flavor). The result does not depend on factor order.
"""
from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from app.core.exceptions import ShapeMismatchError

logger = logging.getLogger(__name__)


class Flavor(str, Enum):
    RELATIVE = "relative"
    POINTED = "pointed"


class Decoration(IntEnum):
    NONE = 0
    K = 1
    O = 2


Factor = tuple
# (sign, power of 2g-2, monomial); None stands for zero
Reduced = Optional[Tuple[int, int, "Monomial"]]


@dataclass(frozen=True)
class Monomial:
    n: int
    blocks: Tuple[Tuple[int, ...], ...]
    psi: Tuple[int, ...]
    kappa: Tuple[int, ...] = ()
    decor: Optional[Tuple[Decoration, ...]] = None

    @property
    def flavor(self) -> Flavor:
        return Flavor.RELATIVE if self.decor is None else Flavor.POINTED

    @cached_property
    def sort_key(self) -> tuple:
        return (self.blocks, self.psi, self.kappa, tuple(int(d) for d in self.decor or ()))

    @cached_property
    def factors(self) -> Tuple[Factor, ...]:
        result = []
        for block, exponent in zip(self.blocks, self.psi):
            if len(block) > 1:
                result.append(("D", block))
            if exponent:
                result.append(("psi", block[0], exponent))
        for a in self.kappa:
            result.append(("kappa", a, 1))
        for block, decoration in zip(self.blocks, self.decor or ()):
            if decoration is Decoration.K:
                result.append(("K", block[0]))
            elif decoration is Decoration.O:
                result.append(("o", block[0]))
        return tuple(result)

    @cached_property
    def codimension(self) -> int:
        diagonal = sum(len(block) - 1 for block in self.blocks)
        decorated = sum(1 for d in self.decor or () if d is not Decoration.NONE)
        return diagonal + sum(self.psi) + sum(self.kappa) + decorated

    def is_unit(self) -> bool:
        return not self.factors

    def block_of(self, index: int) -> int:
        for position, block in enumerate(self.blocks):
            if index in block:
                return position
        raise ShapeMismatchError(f"factor {index} outside 1..{self.n}")


def unit_monomial(n: int, flavor: Flavor) -> Monomial:
    blocks = tuple((i,) for i in range(1, n + 1))
    decor = None if flavor is Flavor.RELATIVE else tuple(Decoration.NONE for _ in blocks)
    return Monomial(n, blocks, tuple(0 for _ in blocks), (), decor)


def normalize_factors(n: int, flavor: Flavor, factors: Sequence[Factor]) -> Reduced:
    """
    Reduce a raw product of generators to (sign, power of 2g-2, Monomial) or None
    """
    pointed = flavor is Flavor.POINTED
    parent = list(range(n + 1))
    psi = [0] * (n + 1)
    decor = [Decoration.NONE] * (n + 1)
    kappa: List[int] = []
    sign = 1
    c_power = 0

    def find(i: int) -> int:
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    def check(i: int) -> int:
        if not 1 <= i <= n:
            raise ShapeMismatchError(f"factor index {i} outside 1..{n}")
        return i

    def decorate(root: int, decoration: Decoration) -> bool:
        if decor[root] is not Decoration.NONE:
            return False
        decor[root] = decoration
        return True

    for factor in factors:
        head = factor[0]
        if head == "D":
            members = [check(i) for i in factor[1]]
            for left, right in zip(members, members[1:]):
                a, b = find(left), find(right)
                if a == b:
                    sign = -sign
                    if pointed:
                        if not decorate(a, Decoration.K):
                            return None
                    else:
                        psi[a] += 1
                    continue
                if b < a:
                    a, b = b, a
                parent[b] = a
                psi[a] += psi[b]
                psi[b] = 0
                if decor[b] is not Decoration.NONE:
                    if not decorate(a, decor[b]):
                        return None
                    decor[b] = Decoration.NONE
        elif head == "psi":
            root, exponent = find(check(factor[1])), factor[2]
            if not pointed:
                psi[root] += exponent
            elif exponent == 1:
                if not decorate(root, Decoration.K):
                    return None
            elif exponent > 1:
                return None
        elif head == "kappa":
            a, multiplicity = factor[1], factor[2]
            if a == 0:
                c_power += multiplicity
            elif pointed:
                return None
            else:
                kappa.extend([a] * multiplicity)
        elif head in ("K", "o"):
            if not pointed:
                raise ShapeMismatchError(f"{head}({factor[1]}) exists only in the pointed flavor")
            decoration = Decoration.K if head == "K" else Decoration.O
            if not decorate(find(check(factor[1])), decoration):
                return None
        else:
            raise ShapeMismatchError(f"unknown generator {head!r}")

    grouped: Dict[int, List[int]] = {}
    for i in range(1, n + 1):
        grouped.setdefault(find(i), []).append(i)

    blocks, exponents, decorations = [], [], []
    for root in sorted(grouped):
        members = tuple(grouped[root])
        if pointed and decor[root] is Decoration.O and len(members) > 1:
            # the point class on a diagonal is the point class on every member
            for member in members:
                blocks.append((member,))
                exponents.append(0)
                decorations.append(Decoration.O)
            continue
        blocks.append(members)
        exponents.append(psi[root])
        decorations.append(decor[root])

    order = sorted(range(len(blocks)), key=lambda position: blocks[position])
    monomial = Monomial(
        n,
        tuple(blocks[p] for p in order),
        tuple(exponents[p] for p in order),
        tuple(sorted(kappa)),
        tuple(decorations[p] for p in order) if pointed else None
    )
    return sign, c_power, monomial


@lru_cache(maxsize=500000)
def multiply_monomials(left: Monomial, right: Monomial) -> Reduced:
    if left.n != right.n or left.flavor is not right.flavor:
        raise ShapeMismatchError(
            f"cannot multiply monomials on {left.n} ({left.flavor.value}) "
            f"and {right.n} ({right.flavor.value}) factors"
        )
    return normalize_factors(left.n, left.flavor, left.factors + right.factors)


def relabel_factors(factors: Sequence[Factor], mapping: Dict[int, int]) -> List[Factor]:
    result = []
    for factor in factors:
        head = factor[0]
        if head == "D":
            result.append(("D", tuple(mapping[i] for i in factor[1])))
        elif head == "psi":
            result.append(("psi", mapping[factor[1]], factor[2]))
        elif head in ("K", "o"):
            result.append((head, mapping[factor[1]]))
        else:
            result.append(factor)
    return result


def relabel(monomial: Monomial, mapping: Dict[int, int], new_n: int) -> Monomial:
    reduced = normalize_factors(new_n, monomial.flavor, relabel_factors(monomial.factors, mapping))
    return reduced[2]


@lru_cache(maxsize=200000)
def push_monomial(monomial: Monomial, j: int) -> Optional[Tuple[int, Monomial]]:
    """
    Integrate out factor j. Returns (power of 2g-2, monomial on n-1 factors) or None.
    """
    position = monomial.block_of(j)
    block = monomial.blocks[position]
    exponent = monomial.psi[position]
    decoration = monomial.decor[position] if monomial.decor is not None else Decoration.NONE
    c_power = 0
    extra: List[Factor] = []
    if len(block) == 1:
        if monomial.decor is None:
            if exponent == 0:
                return None
            if exponent == 1:
                c_power = 1
            else:
                extra.append(("kappa", exponent - 1, 1))
        elif decoration is Decoration.NONE:
            return None
        elif decoration is Decoration.K:
            c_power = 1

    mapping = {i: (i if i < j else i - 1) for i in range(1, monomial.n + 1) if i != j}
    factors: List[Factor] = []
    for index, (members, power) in enumerate(zip(monomial.blocks, monomial.psi)):
        kept = tuple(i for i in members if i != j)
        if not kept:
            continue
        if len(kept) > 1:
            factors.append(("D", kept))
        if power:
            factors.append(("psi", kept[0], power))
        if monomial.decor is not None and monomial.decor[index] is not Decoration.NONE:
            factors.append(("K" if monomial.decor[index] is Decoration.K else "o", kept[0]))
    factors.extend(("kappa", a, 1) for a in monomial.kappa)
    factors.extend(extra)
    reduced = normalize_factors(monomial.n - 1, monomial.flavor, relabel_factors(factors, mapping))
    return c_power, reduced[2]


def restrict_monomial(monomial: Monomial) -> Reduced:
    """Relative monomial to the pointed flavor: kappa_a dies, psi becomes K"""
    return normalize_factors(monomial.n, Flavor.POINTED, monomial.factors)


def point_degree(monomial: Monomial) -> Optional[int]:
    """
    Power of 2g-2 in the degree of a top-codimension pointed monomial, None when
    some block is undecorated.
    """
    if monomial.decor is None or monomial.kappa:
        return None
    if any(d is Decoration.NONE for d in monomial.decor):
        return None
    return sum(1 for d in monomial.decor if d is Decoration.K)
