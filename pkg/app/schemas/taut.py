from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from app.exactnum.ratfunc import RatFunc
from app.tautring.monomial import Decoration, Monomial
from app.tautring.taut_class import TautClass

DECORATION_NAMES = {Decoration.NONE: None, Decoration.K: "K", Decoration.O: "o"}


class CoefficientModel(BaseModel):
    num: str = Field(..., description="numerator polynomial in g")
    den: str = Field(..., description="denominator polynomial in g, positive leading coefficient")

    @classmethod
    def from_ratfunc(cls, value: RatFunc) -> "CoefficientModel":
        num, den = value.poly_strings()
        return cls(num=num, den=den)


class TermModel(BaseModel):
    partition: List[List[int]]
    psi: List[int] = Field(..., description="psi exponent per block, aligned with partition")
    kappa: List[int]
    decor: Optional[List[Optional[Literal["K", "o"]]]] = Field(
        None, description="per-block decoration, null in the relative flavor"
    )
    coeff: CoefficientModel

    @classmethod
    def from_term(cls, monomial: Monomial, coeff: RatFunc) -> "TermModel":
        decor = None
        if monomial.decor is not None:
            decor = [DECORATION_NAMES[d] for d in monomial.decor]
        return cls(
            partition=[list(block) for block in monomial.blocks],
            psi=list(monomial.psi),
            kappa=list(monomial.kappa),
            decor=decor,
            coeff=CoefficientModel.from_ratfunc(coeff)
        )


class TautClassModel(BaseModel):
    n: int
    flavor: Literal["relative", "pointed"]
    terms: List[TermModel]

    @classmethod
    def from_class(cls, value: TautClass) -> "TautClassModel":
        return cls(
            n=value.n,
            flavor=value.flavor.value,
            terms=[TermModel.from_term(monomial, coeff) for monomial, coeff in value.sorted_terms()]
        )


def class_json(value: TautClass) -> dict:
    return TautClassModel.from_class(value).model_dump()


def class_schema() -> dict:
    return TautClassModel.model_json_schema()
