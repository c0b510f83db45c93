from app.brauer.diagram import (
    BrauerDiagram,
    ScaledDiagram,
    compose_diagrams,
    cup_cap,
    enumerate_diagrams,
    enumerate_matchings,
    identity_diagram,
    matching_count,
    parse_diagram,
)
from app.brauer.realization import loop_parameter, realize
from app.brauer.search import SearchReport, TensorSource, search_correspondence, verify_witness

__all__ = [
    "BrauerDiagram", "ScaledDiagram", "compose_diagrams", "cup_cap", "enumerate_diagrams",
    "enumerate_matchings", "identity_diagram", "matching_count", "parse_diagram",
    "loop_parameter", "realize", "SearchReport", "TensorSource", "search_correspondence",
    "verify_witness",
]
