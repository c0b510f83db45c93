"""
Brauer diagrams from `source` points to `target` points.

Points are numbered 1..source for the source row and source+1..source+target
for the target row; the text form writes target point j as j'.
"""
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple
import logging
import re

from app.core.exceptions import ShapeMismatchError, UsageError
from app.exactnum.ratfunc import ONE, RatFunc

logger = logging.getLogger(__name__)

PAIR_PATTERN = re.compile(r"\(\s*(\d+)\s*('?)\s*,\s*(\d+)\s*('?)\s*\)")

Pair = Tuple[int, int]


def double_factorial(n: int) -> int:
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def matching_count(points: int) -> int:
    """Number of perfect matchings on `points` points, (points - 1)!!"""
    if points % 2:
        return 0
    return double_factorial(points - 1)


@dataclass(frozen=True)
class BrauerDiagram:
    source: int
    target: int
    pairs: Tuple[Pair, ...]

    def __post_init__(self):
        total = self.source + self.target
        canonical = tuple(sorted(tuple(sorted(pair)) for pair in self.pairs))
        points = [p for pair in canonical for p in pair]
        if sorted(points) != list(range(1, total + 1)):
            raise ShapeMismatchError(
                f"pairs {self.pairs} are not a perfect matching on {total} points"
            )
        object.__setattr__(self, "pairs", canonical)

    @property
    def points(self) -> int:
        return self.source + self.target

    def is_source(self, point: int) -> bool:
        return point <= self.source

    def label(self, point: int) -> str:
        return str(point) if self.is_source(point) else f"{point - self.source}'"

    def partner(self) -> Dict[int, int]:
        result = {}
        for a, b in self.pairs:
            result[a], result[b] = b, a
        return result

    def cups(self) -> List[Pair]:
        """Pairs inside the source row"""
        return [pair for pair in self.pairs if self.is_source(pair[1])]

    def caps(self) -> List[Pair]:
        """Pairs inside the target row"""
        return [pair for pair in self.pairs if not self.is_source(pair[0])]

    def through_strands(self) -> List[Pair]:
        return [pair for pair in self.pairs if self.is_source(pair[0]) and not self.is_source(pair[1])]

    def transpose(self) -> "BrauerDiagram":
        def flip(p: int) -> int:
            return p + self.target if self.is_source(p) else p - self.source

        return BrauerDiagram(self.target, self.source, tuple((flip(a), flip(b)) for a, b in self.pairs))

    def __str__(self):
        return "[" + ",".join(f"({self.label(a)},{self.label(b)})" for a, b in self.pairs) + "]"


@dataclass(frozen=True)
class ScaledDiagram:
    coeff: RatFunc
    diagram: BrauerDiagram

    def __post_init__(self):
        if self.coeff.is_zero():
            raise ShapeMismatchError("scaled diagrams carry a nonzero coefficient")

    def __str__(self):
        if self.coeff.is_one():
            return str(self.diagram)
        text = str(self.coeff)
        if self.coeff.needs_parentheses() or self.coeff.is_negative():
            text = f"({text})"
        return f"{text}*{self.diagram}"


def parse_diagram(text: str, source: Optional[int] = None, target: Optional[int] = None) -> BrauerDiagram:
    """
    Read `[(1,1'),(2,3),(2',3')]`. Missing row sizes default to the largest
    index used in that row; a single given size is used for both rows.
    """
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise UsageError(f"diagram must be written as [(a,b),...], got {text!r}")
    inner = body[1:-1].strip()
    raw: List[Tuple[Tuple[int, bool], Tuple[int, bool]]] = []
    position = 0
    while position < len(inner):
        match = PAIR_PATTERN.match(inner, position)
        if match is None:
            raise UsageError(f"cannot read a pair at position {position + 1} of {text!r}")
        raw.append(((int(match.group(1)), bool(match.group(2))), (int(match.group(3)), bool(match.group(4)))))
        position = match.end()
        while position < len(inner) and inner[position] in ", ":
            position += 1

    if source is not None and target is None:
        target = source
    elif target is not None and source is None:
        source = target
    if source is None:
        source = max([i for pair in raw for i, primed in pair if not primed], default=0)
        target = max([i for pair in raw for i, primed in pair if primed], default=0)

    def point(index: int, primed: bool) -> int:
        bound = target if primed else source
        if not 1 <= index <= bound:
            label = f"{index}'" if primed else str(index)
            raise UsageError(f"point {label} outside a diagram with {source} source and {target} target points")
        return source + index if primed else index

    pairs = tuple((point(*a), point(*b)) for a, b in raw)
    return BrauerDiagram(source, target, pairs)


def identity_diagram(k: int) -> BrauerDiagram:
    return BrauerDiagram(k, k, tuple((i, k + i) for i in range(1, k + 1)))


def cup_cap(k: int, i: int) -> BrauerDiagram:
    """e_{i,i+1}: joins i with i+1 on both rows, every other point passes through"""
    if not 1 <= i < k:
        raise UsageError(f"cup-cap e_{i},{i + 1} needs 1 <= i < k, got k={k}")
    pairs = [(i, i + 1), (k + i, k + i + 1)]
    pairs.extend((j, k + j) for j in range(1, k + 1) if j not in (i, i + 1))
    return BrauerDiagram(k, k, tuple(pairs))


def enumerate_matchings(points: int) -> Iterator[Tuple[Pair, ...]]:
    """Every perfect matching of 1..points, first point paired first"""
    def extend(remaining: Tuple[int, ...]) -> Iterator[Tuple[Pair, ...]]:
        if not remaining:
            yield ()
            return
        first = remaining[0]
        for position in range(1, len(remaining)):
            rest = remaining[1:position] + remaining[position + 1:]
            for tail in extend(rest):
                yield ((first, remaining[position]),) + tail

    if points % 2:
        return
    yield from extend(tuple(range(1, points + 1)))


def enumerate_diagrams(source: int, target: int) -> Iterator[BrauerDiagram]:
    for pairs in enumerate_matchings(source + target):
        yield BrauerDiagram(source, target, pairs)


def compose_diagrams(second: BrauerDiagram, first: BrauerDiagram,
                     delta: RatFunc) -> Tuple[Optional[ScaledDiagram], int]:
    """
    second o first: stack `first` under `second`, follow strands through the
    middle row and count the closed loops. Returns (delta^loops * diagram, loops);
    the scaled diagram is None when that coefficient vanishes.
    """
    if first.target != second.source:
        raise ShapeMismatchError(
            f"cannot compose a diagram ending in {first.target} points with one starting at {second.source}"
        )
    a, b = first.source, first.target

    def lower(p: int) -> tuple:
        return ("outer", p) if p <= a else ("middle", p - a)

    def upper(p: int) -> tuple:
        return ("middle", p) if p <= b else ("outer", a + p - b)

    below: Dict[tuple, tuple] = {}
    above: Dict[tuple, tuple] = {}
    for p, q in first.pairs:
        below[lower(p)], below[lower(q)] = lower(q), lower(p)
    for p, q in second.pairs:
        above[upper(p)], above[upper(q)] = upper(q), upper(p)

    visited = set()
    pairs: List[Pair] = []
    for start in sorted(node for node in list(below) + list(above) if node[0] == "outer"):
        if start in visited:
            continue
        visited.add(start)
        node = start
        step = below if start in below else above
        while True:
            node = step[node]
            visited.add(node)
            if node[0] == "outer":
                break
            step = above if step is below else below
        pairs.append((start[1], node[1]))

    loops = 0
    for j in range(1, b + 1):
        node = ("middle", j)
        if node in visited:
            continue
        loops += 1
        step = below
        while node not in visited:
            visited.add(node)
            node = step[node]
            step = above if step is below else below

    diagram = BrauerDiagram(a, second.target, tuple(pairs))
    coeff = delta ** loops if loops else ONE
    logger.debug(f"{second} o {first}: {loops} closed loops")
    if coeff.is_zero():
        return None, loops
    return ScaledDiagram(coeff, diagram), loops
