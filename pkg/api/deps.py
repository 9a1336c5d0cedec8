from fastapi import HTTPException

from core.errors import TorsionError, UnknownSuite


def answer(query, *args):
    """Run a query builder, mapping library errors onto HTTP status codes."""
    try:
        return query(*args)
    except UnknownSuite as exc:
        raise HTTPException(status_code=404, detail=f"{exc.code}: {exc}")
    except TorsionError as exc:
        raise HTTPException(status_code=400, detail=f"{exc.code}: {exc}")
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=f"invalid-input: {exc}")
