from app.exactnum.ratfunc import CANONICAL_DEGREE, G, ONE, ZERO, RatFunc
from app.exactnum.parser import ExpressionParser, parse_scalar
from app.exactnum.linalg import solve_linear

__all__ = [
    "RatFunc", "ZERO", "ONE", "G", "CANONICAL_DEGREE",
    "ExpressionParser", "parse_scalar", "solve_linear",
]
