from app.tautring.monomial import Decoration, Flavor, Monomial
from app.tautring.taut_class import TautClass
from app.tautring.correspondence import Correspondence, act, compose, identity
from app.tautring.projectors import kunneth_projector, pointed_projector, projector, projector_for
from app.tautring.expression import parse_expr, round_trip
from app.tautring.printing import class_latex, class_text, monomial_text
from app.tautring.cycles import fp, fpnm, gross_schoen_y, gs, pointed_gs, zk
from app.tautring.lewis import LewisReport, lewis_level_estimate

__all__ = [
    "Decoration", "Flavor", "Monomial", "TautClass",
    "Correspondence", "act", "compose", "identity",
    "projector", "pointed_projector", "projector_for", "kunneth_projector",
    "parse_expr", "round_trip", "class_text", "class_latex", "monomial_text",
    "fp", "fpnm", "gs", "gross_schoen_y", "pointed_gs", "zk",
    "LewisReport", "lewis_level_estimate",
]
