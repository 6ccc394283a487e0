from typing import Optional
from pydantic import validator
from pydantic_settings import BaseSettings
import os
from dotenv import load_dotenv

load_dotenv()


class Settings(BaseSettings):
    API_V1_STR: str = "/api"
    PROJECT_NAME: str = "hookcalc"
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # Truncation orders
    DEFAULT_ORDER: int = 40
    U_ORDER: int = 20
    NO_ORDER: int = 15
    QUICK_ORDER: int = 25

    # Degree caps for the auxiliary variable
    Y_DEGREE_CAP: int = 4
    X_DEGREE_CAP: int = 4
    U_DEGREE_CAP: int = 3

    # Congruence scans
    DEFAULT_N_MAX: int = 60
    QUICK_N_MAX: int = 40
    MAX_T: int = 10

    # Randomized rho tables are derived from this seed
    RANDOM_SEED: int = int(os.getenv("RANDOM_SEED", "20240917"))

    # Worker processes for catalog runs
    JOBS: int = 1

    # HTTP surface
    HOST: str = os.getenv("HOST", "127.0.0.1")
    PORT: int = int(os.getenv("PORT", "8000"))
    BACKEND_CORS_ORIGINS: Optional[str] = os.getenv("BACKEND_CORS_ORIGINS")

    # Request bounds for the CPU-bound endpoints
    API_MAX_ORDER: int = 60
    API_MAX_N_MAX: int = 60
    API_MAX_DEGREE_CAP: int = 8
    API_MAX_T: int = 20
    API_MAX_WEIGHT: int = 40

    @validator(
        "DEFAULT_ORDER", "U_ORDER", "NO_ORDER", "QUICK_ORDER",
        "Y_DEGREE_CAP", "X_DEGREE_CAP", "U_DEGREE_CAP",
        "DEFAULT_N_MAX", "QUICK_N_MAX", "MAX_T", "JOBS",
        "API_MAX_ORDER", "API_MAX_N_MAX", "API_MAX_DEGREE_CAP", "API_MAX_T", "API_MAX_WEIGHT",
    )
    def must_be_positive(cls, v):
        if v < 1:
            raise ValueError("must be a positive integer")
        return v

    class Config:
        case_sensitive = True


settings = Settings()
