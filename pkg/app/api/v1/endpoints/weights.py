from typing import Optional

from fastapi import APIRouter, Query
from pydantic import BaseModel

from app.api.v1.endpoints._responses import unwrap
from app.services.weight_service import WeightService

router = APIRouter()


class WeightRequest(BaseModel):
    weight: str
    g: Optional[int] = None


@router.post("/bbw")
async def bbw(request: WeightRequest):
    """Borel-Weil-Bott for a weight of Sp(2g)"""
    return unwrap(WeightService.bbw(request.weight, request.g))


@router.post("/dim")
async def dim(request: WeightRequest):
    return unwrap(WeightService.dim(request.weight, request.g))


@router.get("/vanish")
async def vanish(g: int = Query(...), i: int = Query(...), l: int = Query(...)):
    return unwrap(WeightService.vanish(g, i, l))


@router.get("/decompose-power")
async def decompose_power(n: int = Query(...), g: int = Query(...)):
    return unwrap(WeightService.decompose_power(n, g))
