from fastapi import APIRouter

from app.brauer.realization import loop_parameter
from app.core.config import settings
from app.tautring.monomial import Flavor

router = APIRouter()


@router.get("/")
async def health_check():
    """Basic health check endpoint"""
    return {
        "status": "healthy",
        "service": settings.PROJECT_NAME,
        "version": settings.VERSION
    }


@router.get("/detailed")
async def detailed_health_check():
    """Health check that also evaluates the loop parameter of each flavor"""
    checks = {}
    status = "healthy"
    for flavor in Flavor:
        try:
            checks[flavor.value] = {"status": "healthy", "loop_parameter": str(loop_parameter(flavor))}
        except Exception as e:
            checks[flavor.value] = {"status": "unhealthy", "error": str(e)}
            status = "unhealthy"
    return {"status": status, "checks": checks}
