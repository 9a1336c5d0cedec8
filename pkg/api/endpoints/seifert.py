from fastapi import APIRouter

from api.deps import answer
from schemas.requests import SeifertQuery
from schemas.results import QueryResult
from services import queries

router = APIRouter()


@router.post("/presentation", response_model=QueryResult, response_model_exclude_none=True)
async def presentation(query: SeifertQuery):
    return answer(queries.seifert_query, "presentation", query.spec)


@router.post("/quotient", response_model=QueryResult, response_model_exclude_none=True)
async def quotient(query: SeifertQuery):
    return answer(queries.seifert_query, "quotient", query.spec)


@router.post("/families", response_model=QueryResult, response_model_exclude_none=True)
async def families(query: SeifertQuery):
    return answer(queries.seifert_query, "families", query.spec)


@router.post("/involutions", response_model=QueryResult, response_model_exclude_none=True)
async def involutions(query: SeifertQuery):
    return answer(queries.seifert_query, "involutions", query.spec)


@router.post("/reversible", response_model=QueryResult, response_model_exclude_none=True)
async def reversible(query: SeifertQuery):
    return answer(queries.seifert_query, "reversible", query.spec, query.word)


@router.post("/certificate", response_model=QueryResult, response_model_exclude_none=True)
async def certificate(query: SeifertQuery):
    return answer(queries.seifert_query, "certificate", query.spec, None, query.n)
