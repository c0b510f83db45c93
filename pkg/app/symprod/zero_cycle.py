"""
Formal zero-cycles on symmetric powers of a pointed curve.

A cycle on S^n is a rational combination of size-n multisets of point names;
the name "o" is the base point. Two operators act on them:

    push_o(z, i)  adds i copies of o (S^{n-i} -> S^n)
    s_pull(z)     sum over removals of one element (S^n -> S^{n-1})

and satisfy s_pull o push_o = 1 + push_o o s_pull on S^{n-1}.
"""
from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union
from dataclasses import dataclass
import logging
import re

from app.core.config import settings
from app.core.exceptions import InvariantViolation, RefusalError, ShapeMismatchError, UsageError

logger = logging.getLogger(__name__)

BASE_POINT = "o"
REMOVALS = ("per_copy", "distinct")

Multiset = Tuple[str, ...]

TERM_PATTERN = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+(?:/\d+)?)\s*\*\s*)?\{(?P<body>[^{}]*)\}\s*"
)


def point_key(point: str) -> tuple:
    return (point != BASE_POINT, point)


def canonical(points: Iterable[str]) -> Multiset:
    return tuple(sorted(points, key=point_key))


class ZeroCycle:
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Optional[Mapping[Multiset, Union[int, Fraction]]] = None):
        if n < 0:
            raise UsageError(f"symmetric power must be nonnegative, got {n}")
        self.n = n
        cleaned: Dict[Multiset, Fraction] = {}
        for multiset, coeff in (terms or {}).items():
            multiset = canonical(multiset)
            if len(multiset) != n:
                raise ShapeMismatchError(f"multiset {set_text(multiset)} does not have {n} points")
            total = cleaned.get(multiset, Fraction(0)) + Fraction(coeff)
            if total:
                cleaned[multiset] = total
            else:
                cleaned.pop(multiset, None)
        self._terms = cleaned

    @classmethod
    def point(cls, *points: str) -> "ZeroCycle":
        return cls(len(points), {canonical(points): 1})

    @property
    def terms(self) -> Dict[Multiset, Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> List[Tuple[Multiset, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: [point_key(p) for p in item[0]])

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def _check(self, other: "ZeroCycle") -> None:
        if self.n != other.n:
            raise ShapeMismatchError(f"cycles on S^{self.n} and S^{other.n} do not combine")

    def __add__(self, other: "ZeroCycle") -> "ZeroCycle":
        self._check(other)
        terms = dict(self._terms)
        for multiset, coeff in other._terms.items():
            terms[multiset] = terms.get(multiset, Fraction(0)) + coeff
        return ZeroCycle(self.n, terms)

    def __neg__(self) -> "ZeroCycle":
        return ZeroCycle(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "ZeroCycle") -> "ZeroCycle":
        return self + (-other)

    def scale(self, factor: Union[int, Fraction]) -> "ZeroCycle":
        return ZeroCycle(self.n, {m: c * Fraction(factor) for m, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, ZeroCycle):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __str__(self):
        return cycle_text(self)

    def __repr__(self):
        return f"ZeroCycle(S^{self.n}: {cycle_text(self)})"


def set_text(multiset: Multiset) -> str:
    return "{" + ",".join(multiset) + "}"


def cycle_text(z: ZeroCycle) -> str:
    terms = z.sorted_terms()
    if not terms:
        return "0"
    pieces = []
    for index, (multiset, coeff) in enumerate(terms):
        magnitude = abs(coeff)
        body = set_text(multiset) if magnitude == 1 else f"{magnitude}*{set_text(multiset)}"
        if index == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(pieces)


def parse_cycle(text: str, n: Optional[int] = None) -> ZeroCycle:
    """Read sums like `{o,o,x} - 2*{x,y,z} + 1/2*{o,x,x}`"""
    stripped = text.strip()
    if stripped == "0":
        if n is None:
            raise UsageError("the zero cycle needs an explicit symmetric power")
        return ZeroCycle(n)
    position = 0
    terms: List[Tuple[Multiset, Fraction]] = []
    while position < len(stripped):
        match = TERM_PATTERN.match(stripped, position)
        if match is None or (terms and match.group("sign") is None):
            raise UsageError(f"cannot read a cycle term at position {position} of {text!r}")
        coeff = Fraction(match.group("coeff") or 1)
        if match.group("sign") == "-":
            coeff = -coeff
        body = match.group("body").strip()
        points = [p.strip() for p in body.split(",")] if body else []
        if any(not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", p) for p in points):
            raise UsageError(f"point names must be identifiers, got {body!r}")
        terms.append((canonical(points), coeff))
        position = match.end()
    if not terms:
        raise UsageError(f"empty cycle {text!r}")
    sizes = {len(multiset) for multiset, _ in terms}
    if n is not None:
        sizes.add(n)
    if len(sizes) != 1:
        raise ShapeMismatchError(f"terms of {text!r} live on different symmetric powers {sorted(sizes)}")
    result = ZeroCycle(sizes.pop())
    for multiset, coeff in terms:
        result = result + ZeroCycle(len(multiset), {multiset: coeff})
    return result


def push_o(z: ZeroCycle, i: int = 1) -> ZeroCycle:
    if i < 0:
        raise UsageError(f"cannot add {i} copies of o")
    added = (BASE_POINT,) * i
    return ZeroCycle(z.n + i, {multiset + added: coeff for multiset, coeff in z.terms.items()})


def s_pull(z: ZeroCycle, removal: str = "per_copy") -> ZeroCycle:
    """
    Sum over the sub-multisets with one point removed. `per_copy` counts a
    repeated point once per copy, `distinct` once.
    """
    if removal not in REMOVALS:
        raise UsageError(f"removal must be one of {', '.join(REMOVALS)}, got {removal!r}")
    if z.n < 1:
        raise ShapeMismatchError("nothing to remove from S^0")
    terms: Dict[Multiset, Fraction] = {}
    for multiset, coeff in z.terms.items():
        for point, multiplicity in Counter(multiset).items():
            smaller = list(multiset)
            smaller.remove(point)
            weight = multiplicity if removal == "per_copy" else 1
            key = tuple(smaller)
            terms[key] = terms.get(key, Fraction(0)) + weight * coeff
    return ZeroCycle(z.n - 1, terms)


def alphabet(size: int) -> List[str]:
    if size < 1:
        raise UsageError(f"alphabet needs the base point, got size {size}")
    return [BASE_POINT] + [f"p{k}" for k in range(1, size)]


def basis(n: int, points: List[str], max_basis: Optional[int] = None) -> List[Multiset]:
    max_basis = settings.SYMPROD_MAX_BASIS if max_basis is None else max_basis
    count = comb(len(points) + n - 1, n)
    if count > max_basis:
        raise RefusalError(f"{count} multisets of size {n} exceed the bound {max_basis}", count)
    return [canonical(m) for m in combinations_with_replacement(points, n)]


@dataclass
class IdentityCheck:
    n: int
    alphabet_size: int
    removal: str
    checked: int
    counterexample: Optional[Multiset] = None

    @property
    def holds(self) -> bool:
        return self.counterexample is None


def verify_identity(n: int, alphabet_size: int, removal: str = "per_copy",
                    max_basis: Optional[int] = None) -> IdentityCheck:
    """
    s_pull(push_o(y)) == y + push_o(s_pull(y)) for every multiset y of size n - 1
    """
    if n < 2:
        raise UsageError(f"the identity needs n >= 2, got {n}")
    report = IdentityCheck(n, alphabet_size, removal, 0)
    for multiset in basis(n - 1, alphabet(alphabet_size), max_basis):
        y = ZeroCycle(n - 1, {multiset: 1})
        left = s_pull(push_o(y, 1), removal)
        right = y + push_o(s_pull(y, removal), 1)
        report.checked += 1
        if left != right:
            report.counterexample = multiset
            logger.info(f"identity fails on {set_text(multiset)} with {removal} removal")
            break
    return report


def _solve_one_plus_t(w: ZeroCycle) -> ZeroCycle:
    """
    y with y + push_o(s_pull(y)) = w. On a multiset with j copies of o the
    operator is 1 + j plus terms with j + 1 copies, so levels solve upward.
    """
    residual = dict(w.terms)
    solution: Dict[Multiset, Fraction] = {}
    for level in range(w.n + 1):
        current = [(m, c) for m, c in residual.items() if m.count(BASE_POINT) == level and c]
        for multiset, coeff in current:
            value = coeff / (1 + level)
            solution[multiset] = value
            residual.pop(multiset)
            for point, multiplicity in Counter(multiset).items():
                if point == BASE_POINT:
                    continue
                smaller = list(multiset)
                smaller.remove(point)
                key = canonical(smaller + [BASE_POINT])
                residual[key] = residual.get(key, Fraction(0)) - multiplicity * value
    if any(residual.values()):
        raise InvariantViolation("back substitution left a residual")
    return ZeroCycle(w.n, solution)


def decompose(z: ZeroCycle) -> List[ZeroCycle]:
    """
    [z_0, ..., z_n] with z = sum_i push_o(z_i, i) and s_pull(z_i) = 0 for
    z_i on S^{n-i}, i < n
    """
    if z.n == 0:
        return [z]
    y = _solve_one_plus_t(s_pull(z))
    kernel_part = z - push_o(y, 1)
    components = [kernel_part] + decompose(y)
    if reconstruct(components) != z:
        raise InvariantViolation(f"decomposition of {z} does not reconstruct it")
    return components


def reconstruct(components: List[ZeroCycle]) -> ZeroCycle:
    if not components:
        raise UsageError("nothing to reconstruct")
    total = components[0]
    for i, component in enumerate(components[1:], start=1):
        total = total + push_o(component, i)
    return total


def lewis_level(z: ZeroCycle) -> int:
    """n minus the largest i with a nonzero component push_o(z_i, i)"""
    components = decompose(z)
    nonzero = [i for i, component in enumerate(components) if not component.is_zero()]
    if not nonzero:
        return z.n
    return z.n - max(nonzero)
