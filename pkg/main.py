from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from api.endpoints.braids import router as braids_router
from api.endpoints.certificates import router as certificates_router
from api.endpoints.seifert import router as seifert_router
from api.endpoints.sweeps import router as sweeps_router
from api.endpoints.torsion import router as torsion_router
from api.endpoints.words import router as words_router
from core.config import get_settings
from core.log import configure_logging

settings = get_settings()


@asynccontextmanager
async def lifespan(app: FastAPI):
    configure_logging(settings.log_level)
    yield


app = FastAPI(title="Torsion API", lifespan=lifespan)

# Allow the frontend to access the backend
app.add_middleware(
    CORSMiddleware,
    allow_origins=[settings.frontend_url] if settings.frontend_url else ["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.get("/")
async def root():
    return {"message": "Welcome to the Torsion API!"}

app.include_router(words_router, prefix="/words", tags=["Words"])
app.include_router(torsion_router, prefix="/torsion", tags=["Torsion"])
app.include_router(braids_router, prefix="/braids", tags=["Braids"])
app.include_router(seifert_router, prefix="/seifert", tags=["Seifert"])
app.include_router(certificates_router, prefix="/certificates", tags=["Certificates"])
app.include_router(sweeps_router, prefix="/sweeps", tags=["Sweeps"])

if __name__ == "__main__":
    import uvicorn
    uvicorn.run("main:app", host="0.0.0.0", port=settings.port)
