from typing import Dict, Optional
import logging

from app.brauer.diagram import compose_diagrams, parse_diagram
from app.brauer.realization import loop_parameter, realize
from app.brauer.search import search_correspondence, verify_witness
from app.core.config import settings
from app.services.base import class_payload, parse_genus, service_result
from app.services.taut_service import resolve_named_cycle
from app.tautring.monomial import Flavor

logger = logging.getLogger(__name__)


class BrauerService:

    @staticmethod
    @service_result
    def compose(second: str, first: str, k: Optional[int] = None, flavor: str = None,
                genus: Optional[str] = None) -> Dict:
        """
        Compose two diagrams with the loop parameter of the chosen flavor
        """
        flavor = Flavor(flavor or settings.DEFAULT_FLAVOR)
        delta = loop_parameter(flavor)
        g0 = parse_genus(genus)
        if g0 is not None:
            delta = delta.specialize(g0)
        scaled, loops = compose_diagrams(parse_diagram(second, k), parse_diagram(first, k), delta)
        if scaled is None:
            return {
                'status': 'success',
                'data': {'diagram': None, 'coeff': {'num': "0", 'den': "1"}, 'loops': loops},
                'text': "0",
                'latex': "0"
            }
        num, den = scaled.coeff.poly_strings()
        return {
            'status': 'success',
            'data': {'diagram': str(scaled.diagram), 'coeff': {'num': num, 'den': den}, 'loops': loops},
            'text': str(scaled),
            'latex': f"{scaled.coeff.to_latex()} \\cdot {scaled.diagram}"
        }

    @staticmethod
    @service_result
    def realize(diagram: str, k: Optional[int] = None, flavor: str = None,
                genus: Optional[str] = None) -> Dict:
        flavor = flavor or settings.DEFAULT_FLAVOR
        parsed = parse_diagram(diagram, k)
        result = realize(parsed, Flavor(flavor))
        return class_payload(result.cls, genus, source=result.source, target=result.target)

    @staticmethod
    @service_result
    def loop_parameter(flavor: str = None, genus: Optional[str] = None) -> Dict:
        value = loop_parameter(Flavor(flavor or settings.DEFAULT_FLAVOR))
        g0 = parse_genus(genus)
        if g0 is not None:
            value = value.specialize(g0)
        num, den = value.poly_strings()
        return {'status': 'success', 'data': {'num': num, 'den': den}, 'text': str(value),
                'latex': value.to_latex()}

    @staticmethod
    @service_result
    def search(source: str, target: str, max_terms: int = 1, max_points: Optional[int] = None) -> Dict:
        """
        Search diagrams sending a named source cycle (`gs^4`) to a named target
        """
        base, copies = resolve_named_cycle(source)
        source_value = [base] * copies if copies > 1 else base
        target_base, target_copies = resolve_named_cycle(target)
        target_value = target_base
        for _ in range(target_copies - 1):
            target_value = target_value.outer(target_base)

        report = search_correspondence(source_value, target_value, max_terms, max_points)
        witnesses = [str(w) for w in report.witnesses]
        combinations = [[str(term) for term in combo] for combo in report.combinations]
        verified = all(verify_witness([w], source_value, target_value) for w in report.witnesses)
        lines = [
            f"matchings checked: {report.matchings_checked}",
            f"shapes evaluated: {report.shapes_evaluated}",
            f"single witnesses: {len(witnesses)}",
        ]
        lines.extend(f"  {w}" for w in witnesses)
        if max_terms > 1:
            lines.append(f"combinations: {len(combinations)}")
            lines.extend("  " + " + ".join(combo) for combo in combinations)
        text = "\n".join(lines)
        return {
            'status': 'success',
            'data': {
                'matchings_checked': report.matchings_checked,
                'shapes_evaluated': report.shapes_evaluated,
                'fast_path': report.fast_path,
                'witnesses': witnesses,
                'combinations': combinations,
                'verified': verified,
                'record': report.to_record(source, target)
            },
            'text': text,
            'latex': text
        }
