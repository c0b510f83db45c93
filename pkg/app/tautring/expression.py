"""
Class expressions: D(i,j,...), psi(i), kappa(a), K(i), o(i) combined with
scalars in the exactnum grammar.
"""
from typing import List
import logging
import re

from app.core.exceptions import ExpressionSyntaxError, IndexRangeError, UsageError
from app.exactnum.parser import ExpressionParser
from app.exactnum.ratfunc import RatFunc
from app.tautring.monomial import Flavor
from app.tautring.taut_class import TautClass

logger = logging.getLogger(__name__)

GENERATORS = ("D", "psi", "kappa", "K", "o")
POINTED_ONLY = ("K", "o")

FACTOR_CALL = re.compile(r"\b(?:D|psi|K|o)\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)")


class ClassResolver:
    """Turns generator calls into classes on n factors"""

    def __init__(self, n: int, flavor: Flavor):
        self.n = n
        self.flavor = Flavor(flavor)

    def _check_index(self, index: int, position: int) -> None:
        if not 1 <= index <= self.n:
            raise IndexRangeError(f"factor index {index} outside 1..{self.n}", position)

    def __call__(self, name: str, args: List[int], name_position: int, positions: List[int]):
        if name not in GENERATORS:
            return None
        if name in POINTED_ONLY and self.flavor is not Flavor.POINTED:
            raise UsageError(f"{name}(...) at position {name_position} needs the pointed flavor")

        if name == "D":
            if len(args) < 2:
                raise ExpressionSyntaxError("D needs at least two indices", positions[-1], (",",))
            for index, position in zip(args, positions):
                self._check_index(index, position)
            seen = set()
            for index, position in zip(args, positions):
                if index in seen:
                    raise IndexRangeError(f"repeated index {index} in D", position)
                seen.add(index)
            return TautClass.from_factors(self.n, self.flavor, [("D", tuple(args))])

        if len(args) != 1:
            raise ExpressionSyntaxError(f"{name} takes one argument", positions[1], (")",))
        value, position = args[0], positions[0]
        if name == "kappa":
            return TautClass.from_factors(self.n, self.flavor, [("kappa", value, 1)])
        self._check_index(value, position)
        if name == "psi":
            return TautClass.from_factors(self.n, self.flavor, [("psi", value, 1)])
        return TautClass.from_factors(self.n, self.flavor, [(name, value)])


def parse_expr(text: str, n: int, flavor: Flavor = Flavor.RELATIVE) -> TautClass:
    """
    Parse and normalize a class expression on n factors
    """
    if n < 0:
        raise UsageError(f"number of factors must be nonnegative, got {n}")
    value = ExpressionParser(text, ClassResolver(n, flavor)).parse()
    if isinstance(value, RatFunc):
        return TautClass.scalar(n, Flavor(flavor), value)
    return value


def infer_factor_count(text: str) -> int:
    """Largest factor index named in text, 0 for a pure scalar"""
    indices = [int(part) for match in FACTOR_CALL.finditer(text) for part in match.group(1).split(",")]
    return max(indices, default=0)


def round_trip(text: str, n: int, flavor: Flavor = Flavor.RELATIVE) -> bool:
    """parse(print(parse(text))) == parse(text)"""
    from app.tautring.printing import class_text

    parsed = parse_expr(text, n, flavor)
    reparsed = parse_expr(class_text(parsed), n, flavor)
    if reparsed != parsed:
        logger.warning(f"round trip changed {text!r}")
    return reparsed == parsed
