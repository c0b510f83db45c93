from app.services.taut_service import TautService
from app.services.brauer_service import BrauerService
from app.services.weight_service import WeightService
from app.services.symprod_service import SymProdService

__all__ = ["TautService", "BrauerService", "WeightService", "SymProdService"]
