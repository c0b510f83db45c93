from pydantic_settings import BaseSettings
import os


class Settings(BaseSettings):
    # API Settings
    API_V1_STR: str = "/api/v1"
    PROJECT_NAME: str = "Tautological Cycle Calculator"
    VERSION: str = "1.0.0"
    HOST: str = "0.0.0.0"
    PORT: int = int(os.getenv("PORT", 8000))
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # Output
    DEFAULT_FORMAT: str = "text"
    DEFAULT_FLAVOR: str = "relative"

    # Brauer search
    MAX_MATCHING_POINTS: int = 14  # 13!! = 135135 matchings
    MAX_SEARCH_TERMS: int = 3
    MAX_SEARCH_COMBINATIONS: int = 20000

    # Weights
    MAX_WEIGHT_RANK: int = 6  # |W(C_6)| = 46080

    # Symmetric products
    SYMPROD_MAX_BASIS: int = 200000

    class Config:
        env_file = ".env"
        case_sensitive = True


settings = Settings()
