from typing import Dict, Optional
import logging

import pandas as pd

from app.services.base import service_result, table_payload
from app.weights.bbw import bbw, kostant, kostant_table
from app.weights.representation import decompose_power, tensor_standard, weyl_dim
from app.weights.vanishing import (
    fakhruddin_grid,
    fakhruddin_r,
    first_nonvanishing,
    is_pure,
    leray_pieces,
    vanishes,
)
from app.weights.weight import parse_weight, word_length

logger = logging.getLogger(__name__)


def _plain(text: str, data) -> Dict:
    return {'status': 'success', 'data': data, 'text': text, 'latex': text}


class WeightService:

    @staticmethod
    @service_result
    def bbw(weight: str, g: Optional[int] = None) -> Dict:
        """
        Borel-Weil-Bott: singular, or the degree and dominant weight
        """
        parsed = parse_weight(weight, g)
        result = bbw(parsed)
        if result is None:
            return _plain("singular", {'weight': str(parsed), 'singular': True})
        data = {
            'weight': str(parsed),
            'singular': False,
            'degree': result.degree,
            'dominant': str(result.weight),
            'element': result.element.matrix_text()
        }
        if parsed.g <= 3:
            data['word_length'] = word_length(result.element)
        return _plain(f"degree: {result.degree}\nweight: {result.weight}", data)

    @staticmethod
    @service_result
    def kostant(weight: str, degree: Optional[int] = None, g: Optional[int] = None) -> Dict:
        parsed = parse_weight(weight, g)
        if degree is not None:
            weights = kostant(parsed, degree)
            return _plain("\n".join(str(w) for w in weights) or "(none)", [str(w) for w in weights])
        table = kostant_table(parsed)
        frame = pd.DataFrame(
            [{'degree': d, 'weight': str(w)} for d, weights in table.items() for w in weights],
            columns=['degree', 'weight']
        )
        return table_payload(frame)

    @staticmethod
    @service_result
    def dim(weight: str, g: Optional[int] = None) -> Dict:
        value = weyl_dim(parse_weight(weight, g))
        return _plain(str(value), value)

    @staticmethod
    @service_result
    def tensor(weight: str, g: Optional[int] = None) -> Dict:
        pieces = tensor_standard(parse_weight(weight, g))
        return _plain("\n".join(str(w) for w in pieces), [str(w) for w in pieces])

    @staticmethod
    @service_result
    def decompose_power(n: int, g: int) -> Dict:
        table = decompose_power(n, g)
        return table_payload(table.to_frame(), total_dimension=table.total_dimension())

    @staticmethod
    @service_result
    def vanish(g: int, i: int, l: int) -> Dict:
        r = fakhruddin_r(g, i, l)
        result = vanishes(g, i, l)
        pure = is_pure(g, i, l)
        text = f"r: {r}\nvanishes: {str(result).lower()}"
        if pure:
            text += f"\npure of weight {(i + l) / 2:g}"
        return _plain(text, {'r': r, 'vanishes': result, 'pure': pure})

    @staticmethod
    @service_result
    def first_nonvanish(g: int, l: int) -> Dict:
        value = first_nonvanishing(g, l)
        return _plain(str(value), value)

    @staticmethod
    @service_result
    def grid(g_max: int, i_max: int, l_max: int) -> Dict:
        return table_payload(fakhruddin_grid(g_max, i_max, l_max))

    @staticmethod
    @service_result
    def leray(g: int, n: int, k: int, base_dim: Optional[int] = None) -> Dict:
        return table_payload(leray_pieces(g, n, k, base_dim))
