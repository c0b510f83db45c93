from typing import Optional

from fastapi import APIRouter
from pydantic import BaseModel

from app.api.v1.endpoints._responses import unwrap
from app.services.symprod_service import SymProdService

router = APIRouter()


class CycleRequest(BaseModel):
    cycle: str
    n: Optional[int] = None


class VerifyRequest(BaseModel):
    n: int
    alphabet_size: int
    removal: str = "per_copy"


@router.post("/decompose")
async def decompose(request: CycleRequest):
    """Split a zero-cycle into pushed-forward components"""
    return unwrap(SymProdService.decompose(request.cycle, request.n))


@router.post("/verify")
async def verify(request: VerifyRequest):
    return unwrap(SymProdService.verify(request.n, request.alphabet_size, request.removal))
