from typing import Optional

from fastapi import APIRouter
from pydantic import BaseModel

from app.api.v1.endpoints._responses import unwrap
from app.services.brauer_service import BrauerService

router = APIRouter()


class ComposeRequest(BaseModel):
    second: str
    first: str
    k: Optional[int] = None
    flavor: str = "relative"
    genus: Optional[str] = None


class SearchRequest(BaseModel):
    source: str
    target: str
    max_terms: int = 1


@router.post("/compose")
async def compose(request: ComposeRequest):
    """Compose two Brauer diagrams, the second applied last"""
    return unwrap(BrauerService.compose(request.second, request.first, request.k, request.flavor, request.genus))


@router.get("/loop-parameter")
async def loop_parameter(flavor: str = "relative", genus: Optional[str] = None):
    return unwrap(BrauerService.loop_parameter(flavor, genus))


@router.post("/search")
async def search(request: SearchRequest):
    return unwrap(BrauerService.search(request.source, request.target, request.max_terms))
