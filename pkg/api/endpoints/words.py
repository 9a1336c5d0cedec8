from fastapi import APIRouter, HTTPException

from api.deps import answer
from schemas.requests import WordQuery
from schemas.results import QueryResult
from services import queries

router = APIRouter()


@router.post("/normalize", response_model=QueryResult, response_model_exclude_none=True)
async def normalize(query: WordQuery):
    return answer(queries.normalize, query.group, query.word)


@router.post("/conjugate", response_model=QueryResult, response_model_exclude_none=True)
async def conjugate(query: WordQuery):
    if query.other is None:
        raise HTTPException(status_code=400, detail="conjugate needs 'other'")
    return answer(queries.conjugate, query.group, query.word, query.other)


@router.post("/abelian-image", response_model=QueryResult, response_model_exclude_none=True)
async def abelian_image(query: WordQuery):
    return answer(queries.abelian, query.group, query.word)
