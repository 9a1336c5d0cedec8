from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from schemas.certificates import Certificate


class QueryResult(BaseModel):
    verdict: str = Field(..., description="yes, no, unknown-within-bound, or an operation-specific token")
    certificate: Optional[Certificate] = None
    normal_form: Optional[Any] = None
    diagnostics: List[str] = Field(default_factory=list)
    budget: Dict[str, Any] = Field(default_factory=dict)
    data: Optional[Dict[str, Any]] = None

    def to_json(self) -> str:
        return self.model_dump_json(exclude_none=True, indent=2)
