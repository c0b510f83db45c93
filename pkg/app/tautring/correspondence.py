from dataclasses import dataclass
import logging

from app.core.exceptions import ShapeMismatchError
from app.tautring.monomial import Flavor
from app.tautring.taut_class import TautClass

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Correspondence:
    """
    A class on source + target factors read as a map from classes on the
    source factors (indices 1..source) to classes on the target factors.
    """
    source: int
    target: int
    cls: TautClass

    def __post_init__(self):
        if self.cls.n != self.source + self.target:
            raise ShapeMismatchError(
                f"correspondence {self.source} -> {self.target} needs a class on "
                f"{self.source + self.target} factors, got {self.cls.n}"
            )

    @property
    def flavor(self) -> Flavor:
        return self.cls.flavor

    def transpose(self) -> "Correspondence":
        a, b = self.source, self.target
        mapping = {i: b + i for i in range(1, a + 1)}
        mapping.update({a + j: j for j in range(1, b + 1)})
        return Correspondence(b, a, self.cls.permute(mapping))

    def __add__(self, other: "Correspondence") -> "Correspondence":
        self._check_same_shape(other)
        return Correspondence(self.source, self.target, self.cls + other.cls)

    def __sub__(self, other: "Correspondence") -> "Correspondence":
        self._check_same_shape(other)
        return Correspondence(self.source, self.target, self.cls - other.cls)

    def scale(self, factor) -> "Correspondence":
        return Correspondence(self.source, self.target, self.cls.scale(factor))

    def is_zero(self) -> bool:
        return self.cls.is_zero()

    def _check_same_shape(self, other: "Correspondence") -> None:
        if (self.source, self.target) != (other.source, other.target):
            raise ShapeMismatchError(
                f"correspondences {self.source} -> {self.target} and "
                f"{other.source} -> {other.target} cannot be added"
            )


def identity(n: int, flavor: Flavor = Flavor.RELATIVE) -> Correspondence:
    factors = [("D", (i, i + n)) for i in range(1, n + 1)]
    return Correspondence(n, n, TautClass.from_factors(2 * n, flavor, factors))


def compose(second: Correspondence, first: Correspondence) -> Correspondence:
    """
    second o first: apply ``first``, then ``second``
    """
    if first.target != second.source:
        raise ShapeMismatchError(
            f"cannot compose {first.source} -> {first.target} with "
            f"{second.source} -> {second.target}"
        )
    a, b, c = first.source, first.target, second.target
    total = a + b + c
    lifted_first = first.cls.pullback({i: i for i in range(1, a + b + 1)}, total)
    lifted_second = second.cls.pullback({j: a + j for j in range(1, b + c + 1)}, total)
    product = lifted_first * lifted_second
    for _ in range(b):
        product = product.pushforward(a + 1)
    return Correspondence(a, c, product)


def act(correspondence: Correspondence, alpha: TautClass) -> TautClass:
    """
    Pull alpha back to the source factors, multiply, push the source factors out
    """
    if alpha.n != correspondence.source:
        raise ShapeMismatchError(
            f"correspondence expects a class on {correspondence.source} factors, got {alpha.n}"
        )
    a, b = correspondence.source, correspondence.target
    product = alpha.pullback({i: i for i in range(1, a + 1)}, a + b) * correspondence.cls
    for _ in range(a):
        product = product.pushforward(1)
    return product
