"""
Weights and Weyl group of Sp(2g), written in the basis e_1, ..., e_g.

Positive roots are e_i - e_j, e_i + e_j (i < j) and 2e_i; simple roots are
e_i - e_{i+1} (i < g) and 2e_g.
"""
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, List, Optional, Sequence, Tuple
import logging

from app.core.config import settings
from app.core.exceptions import RefusalError, ShapeMismatchError, UsageError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Weight:
    entries: Tuple[int, ...]

    @property
    def g(self) -> int:
        return len(self.entries)

    @property
    def size(self) -> int:
        """|lambda|, the sum of the entries"""
        return sum(self.entries)

    def is_dominant(self) -> bool:
        if not self.entries:
            return True
        ordered = all(a >= b for a, b in zip(self.entries, self.entries[1:]))
        return ordered and self.entries[-1] >= 0

    @property
    def partition(self) -> Tuple[int, ...]:
        entries = list(self.entries)
        while entries and entries[-1] == 0:
            entries.pop()
        return tuple(entries)

    def _check(self, other: "Weight") -> None:
        if self.g != other.g:
            raise ShapeMismatchError(f"weights of rank {self.g} and {other.g} do not combine")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def pairing(self, root: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.entries, root))

    def __str__(self):
        return ",".join(str(a) for a in self.entries)


def parse_weight(text: str, g: Optional[int] = None) -> Weight:
    """Read `2,1,0`; a shorter list is padded with zeros up to rank g"""
    text = text.strip().strip("()")
    try:
        entries = [int(part) for part in text.split(",") if part.strip()] if text else []
    except ValueError:
        raise UsageError(f"weight must be comma-separated integers, got {text!r}")
    if g is not None:
        if len(entries) > g:
            raise UsageError(f"weight {text!r} has more than {g} entries")
        entries.extend([0] * (g - len(entries)))
    return Weight(tuple(entries))


def zero_weight(g: int) -> Weight:
    return Weight((0,) * g)


def unit_weight(g: int, i: int, sign: int = 1) -> Weight:
    entries = [0] * g
    entries[i] = sign
    return Weight(tuple(entries))


def rho(g: int) -> Weight:
    if g < 1:
        raise UsageError(f"rank must be positive, got {g}")
    return Weight(tuple(range(g, 0, -1)))


def is_regular(v: Weight) -> bool:
    """No root is orthogonal to v: entries nonzero with distinct absolute values"""
    magnitudes = [abs(a) for a in v.entries]
    return all(magnitudes) and len(set(magnitudes)) == len(magnitudes)


@lru_cache(maxsize=None)
def positive_roots(g: int) -> Tuple[Tuple[int, ...], ...]:
    roots = []
    for i in range(g):
        for j in range(i + 1, g):
            for sign in (-1, 1):
                root = [0] * g
                root[i], root[j] = 1, sign
                roots.append(tuple(root))
        root = [0] * g
        root[i] = 2
        roots.append(tuple(root))
    return tuple(roots)


def simple_roots(g: int) -> List[Tuple[int, ...]]:
    roots = []
    for i in range(g - 1):
        root = [0] * g
        root[i], root[i + 1] = 1, -1
        roots.append(tuple(root))
    root = [0] * g
    root[g - 1] = 2
    roots.append(tuple(root))
    return roots


def _is_positive(vector: Sequence[int]) -> bool:
    for a in vector:
        if a:
            return a > 0
    return False


@dataclass(frozen=True)
class SignedPermutation:
    """
    w(v)_i = signs[i] * v[perm[i]]
    """
    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ShapeMismatchError(f"{self.perm} is not a permutation")
        if len(self.signs) != len(self.perm) or any(s not in (-1, 1) for s in self.signs):
            raise ShapeMismatchError(f"signs {self.signs} must be +-1, one per position")

    @property
    def g(self) -> int:
        return len(self.perm)

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        return tuple(s * vector[p] for s, p in zip(self.signs, self.perm))

    def __call__(self, weight: Weight) -> Weight:
        return Weight(self.apply(weight.entries))

    def then(self, other: "SignedPermutation") -> "SignedPermutation":
        """Apply self first, then other"""
        perm = tuple(self.perm[q] for q in other.perm)
        signs = tuple(t * self.signs[q] for t, q in zip(other.signs, other.perm))
        return SignedPermutation(perm, signs)

    def dot(self, weight: Weight) -> Weight:
        """w . lambda = w(lambda + rho) - rho"""
        shift = rho(weight.g)
        return self(weight + shift) - shift

    def length(self) -> int:
        """Number of positive roots sent to negative roots"""
        return sum(1 for root in positive_roots(self.g) if not _is_positive(self.apply(root)))

    def matrix_text(self) -> str:
        rows = []
        for i in range(self.g):
            rows.append(" ".join(str(self.signs[i]) if self.perm[i] == j else "0" for j in range(self.g)))
        return "; ".join(rows)


def identity_element(g: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(g)), (1,) * g)


def simple_reflection(g: int, i: int) -> SignedPermutation:
    """s_i for i in 1..g: swap i and i+1, or flip the sign of the last entry"""
    if not 1 <= i <= g:
        raise UsageError(f"simple reflection index must lie in 1..{g}, got {i}")
    if i == g:
        return SignedPermutation(tuple(range(g)), (1,) * (g - 1) + (-1,))
    perm = list(range(g))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return SignedPermutation(tuple(perm), (1,) * g)


def weyl_group(g: int, max_rank: Optional[int] = None) -> Iterator[SignedPermutation]:
    max_rank = settings.MAX_WEIGHT_RANK if max_rank is None else max_rank
    if g > max_rank:
        size = 2 ** g
        for k in range(2, g + 1):
            size *= k
        raise RefusalError(f"W(C_{g}) has {size} elements, above the rank bound {max_rank}", size)
    for perm in permutations(range(g)):
        for signs in product((1, -1), repeat=g):
            yield SignedPermutation(perm, signs)


def word_length(w: SignedPermutation) -> int:
    """Shortest word in simple reflections, by breadth-first search from the identity"""
    g = w.g
    start = identity_element(g)
    generators = [simple_reflection(g, i) for i in range(1, g + 1)]
    seen = {start: 0}
    queue = deque([start])
    while queue:
        element = queue.popleft()
        if element == w:
            return seen[element]
        for s in generators:
            neighbour = element.then(s)
            if neighbour not in seen:
                seen[neighbour] = seen[element] + 1
                queue.append(neighbour)
    raise ShapeMismatchError(f"{w} is not reachable by simple reflections")
