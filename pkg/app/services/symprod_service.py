from typing import Dict, Optional
import logging

import pandas as pd

from app.services.base import service_result, table_payload
from app.symprod.zero_cycle import (
    cycle_text,
    decompose,
    lewis_level,
    parse_cycle,
    s_pull,
    set_text,
    verify_identity,
)

logger = logging.getLogger(__name__)


class SymProdService:

    @staticmethod
    @service_result
    def verify(n: int, alphabet_size: int, removal: str = "per_copy") -> Dict:
        report = verify_identity(n, alphabet_size, removal)
        counterexample = set_text(report.counterexample) if report.counterexample is not None else None
        text = f"holds: {str(report.holds).lower()}\nchecked: {report.checked}"
        if counterexample:
            text += f"\ncounterexample: {counterexample}"
        return {
            'status': 'success',
            'data': {'holds': report.holds, 'checked': report.checked, 'counterexample': counterexample},
            'text': text,
            'latex': text
        }

    @staticmethod
    @service_result
    def decompose(cycle: str, n: Optional[int] = None) -> Dict:
        """
        Components z_i with z = sum_i push_o(z_i, i), plus the filtration level
        """
        z = parse_cycle(cycle, n)
        components = decompose(z)
        frame = pd.DataFrame(
            [
                {
                    'i': i,
                    'power': z.n - i,
                    'component': cycle_text(component),
                    'degree': str(component.degree()),
                    'in_kernel': component.n == 0 or s_pull(component).is_zero()
                }
                for i, component in enumerate(components)
            ],
            columns=['i', 'power', 'component', 'degree', 'in_kernel']
        )
        level = lewis_level(z)
        result = table_payload(frame, level=level, degree=str(z.degree()))
        result['text'] += f"\nlevel: {level}"
        return result
