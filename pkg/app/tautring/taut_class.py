from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union
import logging

from app.core.exceptions import NotTopDegreeError, ShapeMismatchError
from app.exactnum.ratfunc import CANONICAL_DEGREE, ONE, ZERO, RatFunc
from app.tautring.monomial import (
    Factor,
    Flavor,
    Monomial,
    multiply_monomials,
    normalize_factors,
    point_degree,
    push_monomial,
    relabel,
    restrict_monomial,
    unit_monomial,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def canonical_power(k: int) -> RatFunc:
    return CANONICAL_DEGREE ** k


def _accumulate(terms: Dict[Monomial, RatFunc], monomial: Monomial, coeff: RatFunc) -> None:
    total = terms.get(monomial)
    total = coeff if total is None else total + coeff
    if total.is_zero():
        terms.pop(monomial, None)
    else:
        terms[monomial] = total


def _reduced_coefficient(coeff: RatFunc, sign: int, c_power: int) -> RatFunc:
    if c_power:
        coeff = coeff * canonical_power(c_power)
    return -coeff if sign < 0 else coeff


class TautClass:
    """
    Finite Q(g)-combination of normalized monomials on n factors.

    Instances are immutable; every operation returns a new normalized class.
    """
    __slots__ = ("n", "flavor", "_terms", "_hash")

    def __init__(self, n: int, flavor: Flavor, terms: Optional[Mapping[Monomial, RatFunc]] = None):
        self.n = n
        self.flavor = Flavor(flavor)
        cleaned = {}
        for monomial, coeff in (terms or {}).items():
            if monomial.n != n or monomial.flavor is not self.flavor:
                raise ShapeMismatchError(
                    f"monomial on {monomial.n} ({monomial.flavor.value}) factors in a class "
                    f"on {n} ({self.flavor.value}) factors"
                )
            if not coeff.is_zero():
                cleaned[monomial] = coeff
        self._terms = cleaned
        self._hash = None

    # construction

    @classmethod
    def zero(cls, n: int, flavor: Flavor) -> "TautClass":
        return cls(n, flavor)

    @classmethod
    def one(cls, n: int, flavor: Flavor) -> "TautClass":
        return cls(n, flavor, {unit_monomial(n, Flavor(flavor)): ONE})

    @classmethod
    def scalar(cls, n: int, flavor: Flavor, value: RatFunc) -> "TautClass":
        return cls(n, flavor, {unit_monomial(n, Flavor(flavor)): value})

    @classmethod
    def from_factors(cls, n: int, flavor: Flavor, factors: Sequence[Factor],
                     coeff: RatFunc = ONE) -> "TautClass":
        flavor = Flavor(flavor)
        reduced = normalize_factors(n, flavor, factors)
        if reduced is None:
            return cls(n, flavor)
        sign, c_power, monomial = reduced
        return cls(n, flavor, {monomial: _reduced_coefficient(coeff, sign, c_power)})

    # views

    @property
    def terms(self) -> Mapping[Monomial, RatFunc]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> List[Tuple[Monomial, RatFunc]]:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def coefficient(self, monomial: Monomial) -> RatFunc:
        return self._terms.get(monomial, ZERO)

    # ring structure

    def _check_compatible(self, other: "TautClass") -> None:
        if self.n != other.n or self.flavor is not other.flavor:
            raise ShapeMismatchError(
                f"classes on {self.n} ({self.flavor.value}) and {other.n} "
                f"({other.flavor.value}) factors are incompatible"
            )

    def _promote(self, other) -> Optional["TautClass"]:
        if isinstance(other, TautClass):
            return other
        scalar = RatFunc.coerce(other)
        if scalar is None:
            return None
        return TautClass.scalar(self.n, self.flavor, scalar)

    def __add__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self._terms)
        for monomial, coeff in other._terms.items():
            _accumulate(terms, monomial, coeff)
        return TautClass(self.n, self.flavor, terms)

    __radd__ = __add__

    def __neg__(self):
        return TautClass(self.n, self.flavor, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor: Union[RatFunc, int, Fraction]) -> "TautClass":
        factor = RatFunc.coerce(factor)
        if factor.is_zero():
            return TautClass(self.n, self.flavor)
        if factor.is_one():
            return self
        return TautClass(self.n, self.flavor, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TautClass):
            scalar = RatFunc.coerce(other)
            if scalar is None:
                return NotImplemented
            return self.scale(scalar)
        self._check_compatible(other)
        terms: Dict[Monomial, RatFunc] = {}
        for left, left_coeff in self._terms.items():
            for right, right_coeff in other._terms.items():
                reduced = multiply_monomials(left, right)
                if reduced is None:
                    continue
                sign, c_power, monomial = reduced
                coeff = _reduced_coefficient(left_coeff * right_coeff, sign, c_power)
                _accumulate(terms, monomial, coeff)
        return TautClass(self.n, self.flavor, terms)

    def __rmul__(self, other):
        scalar = RatFunc.coerce(other)
        if scalar is None:
            return NotImplemented
        return self.scale(scalar)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ShapeMismatchError("classes only take nonnegative integer powers")
        result = TautClass.one(self.n, self.flavor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, TautClass):
            return NotImplemented
        return self.n == other.n and self.flavor is other.flavor and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.flavor, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from app.tautring.printing import class_text

        return f"TautClass(n={self.n}, {self.flavor.value}: {class_text(self)})"

    # geometry

    def pullback(self, mapping: Mapping[int, int], new_n: int) -> "TautClass":
        """
        Pull back along the projection C^new_n -> C^n that reads factor i
        from factor mapping[i]
        """
        targets = [mapping.get(i) for i in range(1, self.n + 1)]
        if None in targets:
            raise ShapeMismatchError(f"pullback map must cover 1..{self.n}")
        if len(set(targets)) != len(targets):
            raise ShapeMismatchError(f"pullback map {dict(mapping)} is not injective")
        if any(not 1 <= t <= new_n for t in targets):
            raise ShapeMismatchError(f"pullback map {dict(mapping)} leaves 1..{new_n}")
        terms: Dict[Monomial, RatFunc] = {}
        for monomial, coeff in self._terms.items():
            _accumulate(terms, relabel(monomial, dict(mapping), new_n), coeff)
        return TautClass(new_n, self.flavor, terms)

    def permute(self, mapping: Mapping[int, int]) -> "TautClass":
        return self.pullback(mapping, self.n)

    def outer(self, other: "TautClass") -> "TautClass":
        """External product on self.n + other.n factors"""
        if self.flavor is not other.flavor:
            raise ShapeMismatchError("external product needs a common flavor")
        total = self.n + other.n
        left = self.pullback({i: i for i in range(1, self.n + 1)}, total)
        right = other.pullback({i: self.n + i for i in range(1, other.n + 1)}, total)
        return left * right

    def pushforward(self, j: int) -> "TautClass":
        if not 1 <= j <= self.n:
            raise ShapeMismatchError(f"cannot push out factor {j} of {self.n}")
        terms: Dict[Monomial, RatFunc] = {}
        for monomial, coeff in self._terms.items():
            pushed = push_monomial(monomial, j)
            if pushed is None:
                continue
            c_power, image = pushed
            _accumulate(terms, image, _reduced_coefficient(coeff, 1, c_power))
        return TautClass(self.n - 1, self.flavor, terms)

    def restrict(self) -> "TautClass":
        if self.flavor is not Flavor.RELATIVE:
            raise ShapeMismatchError("restriction starts from the relative flavor")
        terms: Dict[Monomial, RatFunc] = {}
        for monomial, coeff in self._terms.items():
            reduced = restrict_monomial(monomial)
            if reduced is None:
                continue
            sign, c_power, image = reduced
            _accumulate(terms, image, _reduced_coefficient(coeff, sign, c_power))
        return TautClass(self.n, Flavor.POINTED, terms)

    def degree(self, n: Optional[int] = None) -> RatFunc:
        """
        Degree of a top-codimension pointed class: K counts 2g - 2, o counts 1
        """
        if n is not None and n != self.n:
            raise ShapeMismatchError(f"class lives on {self.n} factors, not {n}")
        if self.flavor is not Flavor.POINTED:
            raise ShapeMismatchError("degree is defined on the pointed flavor")
        total = ZERO
        for monomial, coeff in self._terms.items():
            c_power = point_degree(monomial)
            if c_power is None:
                raise NotTopDegreeError(
                    f"term of codimension {monomial.codimension} is not a point class on {self.n} factors"
                )
            total = total + _reduced_coefficient(coeff, 1, c_power)
        return total

    def codimensions(self) -> List[int]:
        return sorted({monomial.codimension for monomial in self._terms})

    def homogeneous_parts(self) -> Dict[int, "TautClass"]:
        parts: Dict[int, Dict[Monomial, RatFunc]] = {}
        for monomial, coeff in self._terms.items():
            parts.setdefault(monomial.codimension, {})[monomial] = coeff
        return {p: TautClass(self.n, self.flavor, terms) for p, terms in sorted(parts.items())}

    def specialize(self, g0: Union[Fraction, int, str]) -> "TautClass":
        terms: Dict[Monomial, RatFunc] = {}
        for monomial, coeff in self._terms.items():
            _accumulate(terms, monomial, coeff.specialize(g0))
        return TautClass(self.n, self.flavor, terms)

    def is_symmetric(self) -> bool:
        """Invariance under every permutation of the factors"""
        # adjacent transpositions generate the symmetric group
        for i in range(1, self.n):
            swap = {k: k for k in range(1, self.n + 1)}
            swap[i], swap[i + 1] = i + 1, i
            if self.permute(swap) != self:
                return False
        return True
