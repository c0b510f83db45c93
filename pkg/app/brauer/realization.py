from functools import lru_cache
import logging

from app.brauer.diagram import BrauerDiagram
from app.core.exceptions import InvariantViolation
from app.exactnum.ratfunc import RatFunc
from app.tautring.correspondence import Correspondence
from app.tautring.monomial import Flavor, unit_monomial
from app.tautring.projectors import projector_for
from app.tautring.taut_class import TautClass

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def realize(diagram: BrauerDiagram, flavor: Flavor = Flavor.RELATIVE) -> Correspondence:
    """
    Product over matched pairs (p, q) of pi_1 pulled back to factors p and q
    """
    flavor = Flavor(flavor)
    total = diagram.points
    strand = projector_for(1, flavor).cls
    cls = TautClass.one(total, flavor)
    for p, q in diagram.pairs:
        cls = cls * strand.pullback({1: p, 2: q}, total)
    return Correspondence(diagram.source, diagram.target, cls)


@lru_cache(maxsize=None)
def loop_parameter(flavor: Flavor = Flavor.RELATIVE) -> RatFunc:
    """
    Value of a closed loop: both factors of D(1,2) * pi_1 pushed to the base
    """
    flavor = Flavor(flavor)
    diagonal = TautClass.from_factors(2, flavor, [("D", (1, 2))])
    closed = (diagonal * projector_for(1, flavor).cls).pushforward(2).pushforward(1)
    value = closed.coefficient(unit_monomial(0, flavor))
    if len(closed) > 1 or (len(closed) == 1 and value.is_zero()):
        raise InvariantViolation(f"closed loop left a non-scalar class: {closed!r}")
    logger.info(f"loop parameter ({flavor.value}): {value}")
    return value
