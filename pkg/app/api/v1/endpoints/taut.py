from typing import Optional

from fastapi import APIRouter, Query
from pydantic import BaseModel

from app.api.v1.endpoints._responses import unwrap
from app.services.taut_service import TautService

router = APIRouter()


class ExpressionRequest(BaseModel):
    expression: str
    n: int
    flavor: str = "relative"
    genus: Optional[str] = None


class EstimateRequest(BaseModel):
    expression: str
    n: Optional[int] = None
    flavor: str = "relative"


class ActRequest(BaseModel):
    correspondence: str
    expression: str
    flavor: str = "relative"
    source: Optional[int] = None
    target: Optional[int] = None
    genus: Optional[str] = None


@router.post("/simplify")
async def simplify(request: ExpressionRequest):
    """Normalize a class expression"""
    return unwrap(TautService.simplify(request.expression, request.n, request.flavor, request.genus))


@router.post("/act")
async def act(request: ActRequest):
    return unwrap(TautService.act(
        request.correspondence, request.expression, request.flavor,
        request.source, request.target, request.genus
    ))


@router.post("/degree")
async def degree(request: ExpressionRequest):
    return unwrap(TautService.degree(request.expression, request.n, request.flavor, request.genus))


@router.post("/lewis-estimate")
async def lewis_estimate(request: EstimateRequest):
    return unwrap(TautService.lewis_estimate(request.expression, request.n, request.flavor))


@router.get("/fp/{n}")
async def fp(n: int, genus: Optional[str] = Query(None)):
    return unwrap(TautService.fp(n, genus))


@router.get("/named/{name}")
async def named(name: str, genus: Optional[str] = Query(None)):
    return unwrap(TautService.named(name, genus))


@router.get("/witness/{name}")
async def witness(name: str):
    return unwrap(TautService.witness(name))


@router.get("/schema")
async def schema():
    return unwrap(TautService.schema())['data']
