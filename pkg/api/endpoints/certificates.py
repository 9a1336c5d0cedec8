from fastapi import APIRouter

from api.deps import answer
from schemas.requests import VerifyRequest
from schemas.results import QueryResult
from services import queries

router = APIRouter()


@router.post("/verify", response_model=QueryResult, response_model_exclude_none=True)
async def verify(request: VerifyRequest):
    return answer(queries.verify, request.certificate)
