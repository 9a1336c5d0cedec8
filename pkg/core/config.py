import os
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, PositiveFloat, PositiveInt

load_dotenv()


class Settings(BaseModel):
    search_padding: int = Field(3, ge=0, description="Added to half the cyclic length for the default gen-3 search bound")
    geometry_tolerance: PositiveFloat = Field(1e-9, description="Squared-distance tolerance for axis incidence")
    oracle_syllables: PositiveInt = Field(6, description="Default conjugator syllable budget for oracle scans")
    oracle_central: PositiveInt = Field(2, description="Default central exponent budget for oracle scans")
    oracle_candidates: PositiveInt = Field(10**6, description="Default candidate cap for oracle scans")
    log_level: str = Field("WARNING", description="Logging level name")
    port: int = Field(8000, description="HTTP port")
    frontend_url: Optional[str] = Field(None, description="Allowed CORS origin")


def _env(name: str, default):
    value = os.getenv(name)
    return default if value is None or value == "" else value


def load_settings() -> Settings:
    return Settings(
        search_padding=_env("TORSION_SEARCH_PADDING", 3),
        geometry_tolerance=_env("TORSION_GEOMETRY_TOLERANCE", 1e-9),
        oracle_syllables=_env("TORSION_ORACLE_SYLLABLES", 6),
        oracle_central=_env("TORSION_ORACLE_CENTRAL", 2),
        oracle_candidates=_env("TORSION_ORACLE_CANDIDATES", 10**6),
        log_level=_env("LOG_LEVEL", "WARNING"),
        port=_env("PORT", 8000),
        frontend_url=os.getenv("FRONTEND_URL"),
    )


@lru_cache
def get_settings() -> Settings:
    return load_settings()
