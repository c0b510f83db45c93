"""
Leray bookkeeping for a class: which Kunneth components survive and where
they would sit in H^base(M_g, R^fiber).
"""
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple
import logging

from app.tautring.correspondence import act
from app.tautring.projectors import KUNNETH_DEGREES, kunneth_projector
from app.tautring.taut_class import TautClass

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KunnethComponent:
    vector: Tuple[int, ...]
    codimension: int
    image: TautClass

    @property
    def fiber_degree(self) -> int:
        return sum(self.vector)

    @property
    def base_degree(self) -> int:
        return 2 * self.codimension - self.fiber_degree


@dataclass
class LewisReport:
    n: int
    components: List[KunnethComponent] = field(default_factory=list)

    @property
    def nonzero_vectors(self) -> List[Tuple[int, ...]]:
        return sorted({component.vector for component in self.components})

    @property
    def histogram(self) -> Dict[Tuple[int, int], int]:
        counts = Counter((c.base_degree, c.fiber_degree) for c in self.components)
        return dict(sorted(counts.items()))

    @property
    def level(self) -> Optional[int]:
        """Smallest base degree carrying a nonzero component, None for the zero class"""
        if not self.components:
            return None
        return min(component.base_degree for component in self.components)

    def is_zero(self) -> bool:
        return not self.components


def lewis_level_estimate(cls: TautClass) -> LewisReport:
    report = LewisReport(cls.n)
    if cls.is_zero():
        return report
    for vector in product(KUNNETH_DEGREES, repeat=cls.n):
        image = act(kunneth_projector(vector, cls.flavor), cls)
        for codimension, part in image.homogeneous_parts().items():
            report.components.append(KunnethComponent(vector, codimension, part))
    logger.info(f"{len(report.components)} nonzero Kunneth components on {cls.n} factors")
    return report
