from fastapi import APIRouter
from app.api.v1.endpoints import brauer, health, symprod, taut, weights

api_router = APIRouter()

api_router.include_router(health.router, prefix="/health", tags=["health"])
api_router.include_router(taut.router, prefix="/taut", tags=["taut"])
api_router.include_router(brauer.router, prefix="/brauer", tags=["brauer"])
api_router.include_router(weights.router, prefix="/weights", tags=["weights"])
api_router.include_router(symprod.router, prefix="/symprod", tags=["symprod"])
