"""
Named cycles on fiber powers of the universal curve and on a pointed curve.
"""
from functools import lru_cache
from typing import Dict, List, Tuple
import logging

from app.core.exceptions import UsageError
from app.exactnum.ratfunc import CANONICAL_DEGREE
from app.tautring.correspondence import act
from app.tautring.monomial import Flavor, Monomial
from app.tautring.projectors import kunneth_projector
from app.tautring.taut_class import TautClass

logger = logging.getLogger(__name__)

RELATIVE = Flavor.RELATIVE
POINTED = Flavor.POINTED


def _diagonal(indices: Tuple[int, ...], n: int, flavor: Flavor) -> TautClass:
    if len(indices) < 2:
        return TautClass.one(n, flavor)
    return TautClass.from_factors(n, flavor, [("D", indices)])


@lru_cache(maxsize=None)
def fp(n: int) -> TautClass:
    """pi_1 x pi_1 applied to D(1,2)^n * psi(1)"""
    if n < 1:
        raise UsageError(f"fp needs a positive power, got {n}")
    seed = _diagonal((1, 2), 2, RELATIVE) ** n * TautClass.from_factors(2, RELATIVE, [("psi", 1, 1)])
    logger.info(f"expanding fp({n}) from {len(seed)} seed terms")
    return act(kunneth_projector((1, 1), RELATIVE), seed)


@lru_cache(maxsize=None)
def fpnm(n: int, m: int) -> TautClass:
    """pi_1^{x n} applied to D(1,...,n) * psi(1)^m"""
    if n < 2 or m < 0:
        raise UsageError(f"fpnm needs n >= 2 and m >= 0, got n={n}, m={m}")
    seed = _diagonal(tuple(range(1, n + 1)), n, RELATIVE)
    if m:
        seed = seed * TautClass.from_factors(n, RELATIVE, [("psi", 1, m)])
    return act(kunneth_projector((1,) * n, RELATIVE), seed)


def gs() -> TautClass:
    """Modified small diagonal pi_1^{x3}(D(1,2,3)) on the relative triple product"""
    return fpnm(3, 0)


@lru_cache(maxsize=None)
def zk() -> TautClass:
    """K_1 K_2 - (2g - 2) D(1,2) K_1 on a pointed curve"""
    product = TautClass.from_factors(2, POINTED, [("K", 1), ("K", 2)])
    diagonal = TautClass.from_factors(2, POINTED, [("D", (1, 2)), ("K", 1)], CANONICAL_DEGREE)
    return product - diagonal


@lru_cache(maxsize=None)
def gross_schoen_y() -> TautClass:
    """
    D_123 - D_12 - D_13 - D_23 + D_1 + D_2 + D_3, where D_I is the locus
    x_i = x_j for i, j in I and x_k = o for k outside I
    """
    result = TautClass.zero(3, POINTED)
    for subset, sign in (((1, 2, 3), 1), ((1, 2), -1), ((1, 3), -1), ((2, 3), -1),
                         ((1,), 1), ((2,), 1), ((3,), 1)):
        factors = [("D", subset)] if len(subset) > 1 else []
        factors.extend(("o", k) for k in (1, 2, 3) if k not in subset)
        result = result + TautClass.from_factors(3, POINTED, factors).scale(sign)
    return result


@lru_cache(maxsize=None)
def pointed_gs() -> TautClass:
    """pi_1^{x3}(D(1,2,3)) built from the base-point projectors"""
    return act(kunneth_projector((1, 1, 1), POINTED), _diagonal((1, 2, 3), 3, POINTED))


def printed_fp1() -> TautClass:
    """
    The expansion of fp(1) exactly as it appears in the literature, final term
    psi_1 kappa_1^2 / (2g-2)^3 included
    """
    from app.tautring.expression import parse_expr

    return parse_expr(
        "D(1,2)*psi(1) - 1/(2*g-2)*psi(1)*psi(2) - 1/(2*g-2)*psi(1)^2 - 1/(2*g-2)*psi(2)^2"
        " + 1/(2*g-2)^2*kappa(1)*psi(1) + 1/(2*g-2)^2*kappa(1)*psi(2)"
        " + 1/(2*g-2)^2*kappa(2) - 1/(2*g-2)^3*psi(1)*kappa(1)^2",
        2, RELATIVE
    )


def compare_terms(engine: TautClass, printed: TautClass) -> List[Dict]:
    """
    Term-by-term agreement table between two classes in canonical monomial order
    """
    monomials: Dict[Monomial, None] = {}
    for monomial, _ in engine.sorted_terms() + printed.sorted_terms():
        monomials.setdefault(monomial, None)
    rows = []
    for monomial in sorted(monomials, key=lambda m: m.sort_key):
        ours, theirs = engine.coefficient(monomial), printed.coefficient(monomial)
        if ours.is_zero():
            status = "printed_only"
        elif theirs.is_zero():
            status = "engine_only"
        elif ours == theirs:
            status = "agree"
        else:
            status = "coefficient_mismatch"
        rows.append({'monomial': monomial, 'engine': ours, 'printed': theirs, 'status': status})
    return rows


def compare_printed_fp1() -> List[Dict]:
    return compare_terms(fp(1), printed_fp1())


def diagonal_power_relation(flavor: Flavor = RELATIVE) -> Dict:
    """
    Relation between D(1,2)^4 psi(1)^2 and D(1,2)^3 psi(1)^3 after normalization
    """
    flavor = Flavor(flavor)
    diagonal = _diagonal((1, 2), 2, flavor)
    first = diagonal ** 4 * TautClass.from_factors(2, flavor, [("psi", 1, 2)])
    second = diagonal ** 3 * TautClass.from_factors(2, flavor, [("psi", 1, 3)])
    if first.is_zero() and second.is_zero():
        relation = "both_zero"
    elif first == second:
        relation = "equal"
    elif first == -second:
        relation = "negated"
    else:
        relation = "unrelated"
    return {'flavor': flavor, 'first': first, 'second': second, 'relation': relation}


def classify_fp1_shape(monomial: Monomial) -> str:
    """
    'diagonal_divisor' for a single two-factor diagonal times one divisor class,
    'divisor_divisor' for two divisor classes on distinct factors, else 'other'.
    The divisor of a diagonal_divisor term may sit on the third factor, as in
    D(2,3)*K(1), which is the external product of a diagonal and a divisor.
    """
    big_blocks = [block for block in monomial.blocks if len(block) > 1]
    decorations = sum(1 for d in monomial.decor or () if d) + sum(1 for e in monomial.psi if e)
    if monomial.kappa or any(e > 1 for e in monomial.psi):
        return "other"
    if len(big_blocks) == 1 and len(big_blocks[0]) == 2 and decorations == 1:
        return "diagonal_divisor"
    if not big_blocks and decorations == 2:
        return "divisor_divisor"
    return "other"


def gs_y_difference() -> Dict:
    """
    pi_1^{x3}(restrict(gs())) - gross_schoen_y() on the pointed triple product,
    with every monomial classified
    """
    projected = act(kunneth_projector((1, 1, 1), POINTED), gs().restrict())
    difference = projected - gross_schoen_y()
    shapes = [
        {'monomial': monomial, 'coeff': coeff, 'shape': classify_fp1_shape(monomial)}
        for monomial, coeff in difference.sorted_terms()
    ]
    return {
        'difference': difference,
        'terms': shapes,
        'fp1_type': all(row['shape'] != "other" for row in shapes)
    }


__all__ = [
    "fp", "fpnm", "gs", "zk", "gross_schoen_y", "pointed_gs", "printed_fp1",
    "compare_terms", "compare_printed_fp1", "diagonal_power_relation", "classify_fp1_shape",
    "gs_y_difference",
]
