from app.schemas.taut import (
    CoefficientModel,
    TautClassModel,
    TermModel,
    class_json,
    class_schema,
)

__all__ = ["CoefficientModel", "TermModel", "TautClassModel", "class_json", "class_schema"]
