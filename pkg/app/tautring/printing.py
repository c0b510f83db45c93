"""
Text and LaTeX renderings of classes. The text form is the expression grammar
and parses back to the same class.
"""
from collections import Counter
from typing import List

from app.exactnum.ratfunc import RatFunc
from app.tautring.monomial import Decoration, Monomial
from app.tautring.taut_class import TautClass


def _power(text: str, exponent: int) -> str:
    return text if exponent == 1 else f"{text}^{exponent}"


def monomial_text(monomial: Monomial) -> str:
    parts: List[str] = []
    for block in monomial.blocks:
        if len(block) > 1:
            parts.append(f"D({','.join(str(i) for i in block)})")
    for block, exponent in zip(monomial.blocks, monomial.psi):
        if exponent:
            parts.append(_power(f"psi({block[0]})", exponent))
    for a, multiplicity in sorted(Counter(monomial.kappa).items()):
        parts.append(_power(f"kappa({a})", multiplicity))
    for block, decoration in zip(monomial.blocks, monomial.decor or ()):
        if decoration is Decoration.K:
            parts.append(f"K({block[0]})")
        elif decoration is Decoration.O:
            parts.append(f"o({block[0]})")
    return "*".join(parts) if parts else "1"


def _magnitude_text(magnitude: RatFunc, monomial: Monomial, bare: bool) -> str:
    if monomial.is_unit():
        text = str(magnitude)
        return f"({text})" if magnitude.needs_parentheses() and not bare else text
    if magnitude.is_one():
        return monomial_text(monomial)
    text = str(magnitude)
    if magnitude.needs_parentheses():
        text = f"({text})"
    return f"{text}*{monomial_text(monomial)}"


def class_text(cls: TautClass) -> str:
    terms = cls.sorted_terms()
    if not terms:
        return "0"
    alone = len(terms) == 1
    pieces = []
    for index, (monomial, coeff) in enumerate(terms):
        negative = coeff.is_negative()
        body = _magnitude_text(-coeff if negative else coeff, monomial, alone and not negative)
        if index == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


def _indices_latex(block) -> str:
    separator = "" if all(i < 10 for i in block) else ","
    return separator.join(str(i) for i in block)


def _latex_power(text: str, exponent: int) -> str:
    return text if exponent == 1 else f"{text}^{{{exponent}}}"


def monomial_latex(monomial: Monomial) -> str:
    parts: List[str] = []
    for block in monomial.blocks:
        if len(block) > 1:
            parts.append(f"\\Delta_{{{_indices_latex(block)}}}")
    for block, exponent in zip(monomial.blocks, monomial.psi):
        if exponent:
            parts.append(_latex_power(f"\\psi_{{{block[0]}}}", exponent))
    for a, multiplicity in sorted(Counter(monomial.kappa).items()):
        parts.append(_latex_power(f"\\kappa_{{{a}}}", multiplicity))
    for block, decoration in zip(monomial.blocks, monomial.decor or ()):
        if decoration is Decoration.K:
            parts.append(f"K_{{{block[0]}}}")
        elif decoration is Decoration.O:
            parts.append(f"o_{{{block[0]}}}")
    return " ".join(parts)


def class_latex(cls: TautClass) -> str:
    terms = cls.sorted_terms()
    if not terms:
        return "0"
    pieces = []
    for index, (monomial, coeff) in enumerate(terms):
        negative = coeff.is_negative()
        magnitude = -coeff if negative else coeff
        coeff_text = magnitude.to_latex()
        if magnitude.needs_parentheses() and (negative or len(terms) > 1 or not monomial.is_unit()):
            coeff_text = f"\\left({coeff_text}\\right)"
        if monomial.is_unit():
            body = coeff_text
        elif magnitude.is_one():
            body = monomial_latex(monomial)
        else:
            body = f"{coeff_text} {monomial_latex(monomial)}"
        if index == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)
