from typing import Dict, Hashable, List, Optional, Sequence
import logging

import sympy

from app.exactnum.ratfunc import RatFunc

logger = logging.getLogger(__name__)


def solve_linear(columns: Sequence[Dict[Hashable, RatFunc]],
                 target: Dict[Hashable, RatFunc]) -> Optional[List[RatFunc]]:
    """
    Solve sum_j x_j * columns[j] = target exactly over Q(g).

    Vectors are sparse maps from basis keys to coefficients. Returns one solution
    (free parameters set to zero) or None when the system is inconsistent.
    """
    keys = list(dict.fromkeys(list(target) + [key for column in columns for key in column]))
    unknowns = sympy.symbols(f"x0:{len(columns)}")
    zero = RatFunc.from_int(0)
    matrix = sympy.Matrix([[column.get(key, zero).to_expr() for column in columns] for key in keys])
    rhs = sympy.Matrix([target.get(key, zero).to_expr() for key in keys])

    solutions = list(sympy.linsolve((matrix, rhs), *unknowns))
    if not solutions:
        logger.debug(f"inconsistent system: {len(keys)} equations, {len(columns)} unknowns")
        return None
    free = {unknown: 0 for unknown in unknowns}
    return [RatFunc.from_expr(sympy.sympify(value).subs(free)) for value in solutions[0]]
