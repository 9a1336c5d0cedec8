from typing import Optional

from fastapi import APIRouter

from api.deps import answer
from models.verdicts import SearchBudget
from schemas.results import QueryResult
from services import queries

router = APIRouter()


def _budget(max_syllables: Optional[int], max_central: Optional[int], max_candidates: Optional[int]) -> SearchBudget:
    base = queries.default_budget()
    return SearchBudget(
        max_syllables or base.max_conjugator_syllables,
        max_central or base.max_central_exponent,
        max_candidates or base.max_candidates,
    )


@router.get("/{suite}", response_model=QueryResult, response_model_exclude_none=True)
def run_sweep(
    suite: str,
    max_syllables: Optional[int] = None,
    max_central: Optional[int] = None,
    max_candidates: Optional[int] = None,
):
    budget = answer(_budget, max_syllables, max_central, max_candidates)
    return answer(queries.sweep, suite, budget)
