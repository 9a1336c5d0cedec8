from fastapi import APIRouter

from api.deps import answer
from schemas.requests import BraidQuery
from schemas.results import QueryResult
from services import queries

router = APIRouter()


@router.post("/normal-form", response_model=QueryResult, response_model_exclude_none=True)
async def normal_form(query: BraidQuery):
    return answer(queries.braid, query.word)


@router.post("/exponent-sum")
async def exponent_sum(query: BraidQuery):
    result = answer(queries.braid, query.word)
    return {"word": query.word, "exponent_sum": result.data["exponent_sum"]}
