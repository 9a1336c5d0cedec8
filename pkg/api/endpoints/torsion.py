from fastapi import APIRouter, HTTPException

from api.deps import answer
from schemas.requests import WordQuery
from schemas.results import QueryResult
from services import queries

router = APIRouter()


@router.post("/classify", response_model=QueryResult, response_model_exclude_none=True)
async def classify(query: WordQuery):
    return answer(queries.classify, query.group, query.word)


@router.post("/reversible", response_model=QueryResult, response_model_exclude_none=True)
async def reversible(query: WordQuery):
    return answer(queries.reversible, query.group, query.word)


@router.post("/gen-torsion", response_model=QueryResult, response_model_exclude_none=True)
async def gen_torsion(query: WordQuery):
    if query.n is None:
        raise HTTPException(status_code=400, detail="gen-torsion needs 'n'")
    return answer(queries.gen_torsion, query.group, query.word, query.n, query.bound)
