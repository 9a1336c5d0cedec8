from typing import Any, Dict, Optional

from pydantic import BaseModel, Field


class WordQuery(BaseModel):
    group: str = Field("pslz", description="pslz, b3 or seifert:<spec>")
    word: str
    other: Optional[str] = None
    n: Optional[int] = None
    bound: Optional[int] = None


class BraidQuery(BaseModel):
    word: str


class SeifertQuery(BaseModel):
    spec: str
    word: Optional[str] = None
    n: Optional[int] = None


class VerifyRequest(BaseModel):
    certificate: Dict[str, Any]
