"""
Search for Brauer diagrams whose realization sends a source class to a target.

The direct path realizes every diagram and applies it. When the source is a
tensor product of classes that are each fixed by pi_1 in every factor, a
diagram acts without building its realization: a source cup (i, j) becomes
multiplication by D(i,j) followed by integrating out both factors, a through
strand (i, j') renames factor i to j', and a target cap contributes pi_1 on
the two target factors.
"""
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Dict, Hashable, List, Optional, Sequence, Tuple, Union
import logging

from app.brauer.diagram import BrauerDiagram, ScaledDiagram, enumerate_diagrams, matching_count, parse_diagram
from app.brauer.realization import realize
from app.core.config import settings
from app.core.exceptions import RefusalError, ShapeMismatchError, UsageError
from app.exactnum.linalg import solve_linear
from app.exactnum.parser import parse_scalar
from app.tautring.correspondence import act
from app.tautring.monomial import Flavor
from app.tautring.projectors import kunneth_projector, projector_for
from app.tautring.taut_class import TautClass

logger = logging.getLogger(__name__)


@dataclass
class SearchReport:
    source_points: int
    target_points: int
    matchings_checked: int = 0
    shapes_evaluated: int = 0
    fast_path: bool = False
    witnesses: List[ScaledDiagram] = field(default_factory=list)
    combinations: List[List[ScaledDiagram]] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return bool(self.witnesses or self.combinations)

    def to_record(self, source: str, target: str) -> Dict:
        """
        JSON-ready result set. An empty witness list over the full enumeration
        certifies that no single diagram works.
        """
        return {
            "source": source,
            "target": target,
            "source_points": self.source_points,
            "target_points": self.target_points,
            "matchings_checked": self.matchings_checked,
            "shapes_evaluated": self.shapes_evaluated,
            "fast_path": self.fast_path,
            "witnesses": [{"diagram": str(w.diagram), "coeff": str(w.coeff)} for w in self.witnesses],
            "certified_absent": not self.witnesses and self.matchings_checked == matching_count(
                self.source_points + self.target_points
            ),
        }


def witnesses_from_record(record: Dict) -> List[ScaledDiagram]:
    return [
        ScaledDiagram(
            parse_scalar(row["coeff"]),
            parse_diagram(row["diagram"], record["source_points"], record["target_points"])
        )
        for row in record["witnesses"]
    ]


def is_projector_invariant(cls: TautClass) -> bool:
    """pi_1 in every factor fixes cls"""
    return act(kunneth_projector((1,) * cls.n, cls.flavor), cls) == cls


def proportionality(image: TautClass, target: TautClass):
    """s with image == s * target, or None"""
    if image.is_zero() or target.is_zero():
        return None
    monomial, coeff = target.sorted_terms()[0]
    ratio = image.coefficient(monomial) / coeff
    if ratio.is_zero() or image != target.scale(ratio):
        return None
    return ratio


class TensorSource:
    """
    Source class given as an ordered list of tensor factors, each fixed by pi_1
    """

    def __init__(self, factors: Sequence[TautClass], check: bool = True):
        if not factors:
            raise UsageError("a tensor source needs at least one factor")
        flavors = {factor.flavor for factor in factors}
        if len(flavors) != 1:
            raise ShapeMismatchError("tensor factors must share a flavor")
        self.factors = list(factors)
        self.flavor = flavors.pop()
        if check:
            for index, factor in enumerate(self.factors, start=1):
                if not is_projector_invariant(factor):
                    raise UsageError(f"tensor factor {index} is not fixed by pi_1 in every factor")
        self.offsets = []
        offset = 0
        for factor in self.factors:
            self.offsets.append(offset)
            offset += factor.n
        self.points = offset
        self.copy_of = {}
        for index, factor in enumerate(self.factors):
            for local in range(1, factor.n + 1):
                self.copy_of[self.offsets[index] + local] = index
        self.interchangeable = (
            all(factor == self.factors[0] for factor in self.factors)
            and self.factors[0].is_symmetric()
        )

    def full_class(self) -> TautClass:
        result = self.factors[0]
        for factor in self.factors[1:]:
            result = result.outer(factor)
        return result

    def shape_key(self, diagram: BrauerDiagram) -> Hashable:
        """
        Invariant of the diagram under permuting interchangeable copies and the
        points inside each copy
        """
        copies = len(self.factors)
        target_ends = [None] * diagram.target
        cups = []
        caps = []
        for p, q in diagram.pairs:
            if diagram.is_source(q):
                cups.append((self.copy_of[p], self.copy_of[q]))
            elif diagram.is_source(p):
                target_ends[q - diagram.source - 1] = self.copy_of[p]
            else:
                caps.append((p - diagram.source, q - diagram.source))
        best = None
        for order in permutations(range(copies)):
            key = (
                tuple(sorted(tuple(sorted((order[a], order[b]))) for a, b in cups)),
                tuple(None if end is None else order[end] for end in target_ends),
            )
            if best is None or key < best:
                best = key
        return best + (tuple(caps),)

    def act(self, diagram: BrauerDiagram) -> TautClass:
        """Image of the tensor source under the realization of diagram"""
        if diagram.source != self.points:
            raise ShapeMismatchError(
                f"diagram starts at {diagram.source} points, source has {self.points} factors"
            )
        flavor = self.flavor
        partner = diagram.partner()
        current = TautClass.one(0, flavor)
        live: List[int] = []
        for index, factor in enumerate(self.factors):
            current = current.outer(factor)
            live.extend(self.offsets[index] + local for local in range(1, factor.n + 1))
            for p in list(live):
                q = partner[p]
                if p not in live or q not in live or p > q:
                    continue
                i, j = live.index(p) + 1, live.index(q) + 1
                contracted = current * TautClass.from_factors(current.n, flavor, [("D", (i, j))])
                current = contracted.pushforward(j).pushforward(i)
                live.remove(q)
                live.remove(p)
                if current.is_zero():
                    return TautClass.zero(diagram.target, flavor)

        mapping = {position: partner[p] - diagram.source for position, p in enumerate(live, start=1)}
        image = current.pullback(mapping, diagram.target)
        strand = projector_for(1, flavor).cls
        for p, q in diagram.caps():
            image = image * strand.pullback({1: p - diagram.source, 2: q - diagram.source}, diagram.target)
        return image


def _check_bounds(points: int, max_points: int) -> int:
    if points % 2:
        raise UsageError(f"no perfect matching on an odd number ({points}) of points")
    count = matching_count(points)
    if points > max_points:
        raise RefusalError(
            f"{count} matchings on {points} points exceed the enumeration bound of {max_points} points",
            count
        )
    return count


def search_correspondence(source: Union[TautClass, Sequence[TautClass]], target: TautClass,
                          max_terms: int = 1, max_points: Optional[int] = None,
                          max_combinations: Optional[int] = None) -> SearchReport:
    """
    Scaled diagrams (and, for max_terms > 1, combinations of diagrams) whose
    realization maps source to target
    """
    max_points = settings.MAX_MATCHING_POINTS if max_points is None else max_points
    max_combinations = settings.MAX_SEARCH_COMBINATIONS if max_combinations is None else max_combinations
    if not 1 <= max_terms <= settings.MAX_SEARCH_TERMS:
        raise UsageError(f"max terms must lie in 1..{settings.MAX_SEARCH_TERMS}, got {max_terms}")

    tensor = None
    if isinstance(source, TautClass):
        source_points, flavor = source.n, source.flavor
    else:
        tensor = TensorSource(source)
        source_points, flavor = tensor.points, tensor.flavor
    if flavor is not target.flavor:
        raise ShapeMismatchError("source and target must share a flavor")

    count = _check_bounds(source_points + target.n, max_points)
    logger.info(f"searching {count} matchings on {source_points} + {target.n} points")

    report = SearchReport(source_points, target.n, fast_path=tensor is not None)
    images: Dict[Hashable, TautClass] = {}
    # distinct nonzero images with one representative diagram each
    candidates: Dict[TautClass, BrauerDiagram] = {}

    for diagram in enumerate_diagrams(source_points, target.n):
        report.matchings_checked += 1
        if tensor is None:
            image = act(realize(diagram, flavor), source)
            report.shapes_evaluated += 1
        else:
            key = tensor.shape_key(diagram) if tensor.interchangeable else diagram
            image = images.get(key)
            if image is None:
                image = tensor.act(diagram)
                images[key] = image
                report.shapes_evaluated += 1
        if report.matchings_checked % 10000 == 0:
            logger.info(f"{report.matchings_checked}/{count} matchings, {report.shapes_evaluated} shapes")
        if image.is_zero():
            continue
        candidates.setdefault(image, diagram)
        ratio = proportionality(image, target)
        if ratio is not None:
            report.witnesses.append(ScaledDiagram(ratio.inverse(), diagram))

    if max_terms > 1:
        report.combinations = _combinations(candidates, target, max_terms, max_combinations)
    logger.info(
        f"{len(report.witnesses)} single witnesses, {len(report.combinations)} combinations "
        f"from {report.shapes_evaluated} evaluated shapes"
    )
    return report


def _combinations(candidates: Dict[TautClass, BrauerDiagram], target: TautClass,
                  max_terms: int, max_combinations: int) -> List[List[ScaledDiagram]]:
    images = list(candidates)
    total = sum(comb(len(images), size) for size in range(2, max_terms + 1))
    if total > max_combinations:
        raise RefusalError(
            f"{total} combinations of {len(images)} distinct images exceed the bound {max_combinations}",
            total
        )
    goal = {monomial: coeff for monomial, coeff in target.terms.items()}
    found = []
    for size in range(2, max_terms + 1):
        for chosen in combinations(range(len(images)), size):
            columns = [dict(images[index].terms) for index in chosen]
            solution = solve_linear(columns, goal)
            if solution is None or any(x.is_zero() for x in solution):
                continue
            found.append([
                ScaledDiagram(x, candidates[images[index]]) for x, index in zip(solution, chosen)
            ])
    return found


def verify_witness(witness: Sequence[ScaledDiagram], source: Union[TautClass, Sequence[TautClass]],
                   target: TautClass) -> bool:
    """Recompute the image of a witness diagram by diagram"""
    total = None
    for term in witness:
        if isinstance(source, TautClass):
            image = act(realize(term.diagram, source.flavor), source)
        else:
            image = TensorSource(source, check=False).act(term.diagram)
        image = image.scale(term.coeff)
        total = image if total is None else total + image
    return total is not None and total == target
