from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field
from typing import Dict, List, Optional
import asyncio
import logging

from src.identities.base import identity_registry
from src.identities.verifier import engine_from_config, verify
from src.klr.reduction import reduce
from src.klr.serialize import format_element, parse_element
from src.storage.cache_manager import get_cache_manager
from src.symfunc.littlewood import schur_product
from src.symfunc.partitions import parse_partition
from src.symfunc.quantum import quantum_binomial_partition, q_divided_power_product
from src.thick.calibration import calibrate_engine
from src.utils.config import config
from src.utils.errors import ThickCalcError

logger = logging.getLogger(__name__)

# Largest grid the HTTP front end will verify in one request.
API_MAX_STRANDS = 4

app = FastAPI(
    title="thickcalc",
    description="Exact computations in the thick calculus of categorified quantum sl(n)",
    version="1.0.0"
)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Pydantic models for API requests/responses
class LRRequest(BaseModel):
    partitions: List[str] = Field(..., min_length=2, description="Comma-separated parts, '0' for the empty partition")


class ReduceRequest(BaseModel):
    element: str


class VerifyRequest(BaseModel):
    identity: str
    max_strands: int = Field(3, ge=1)
    oracle: bool = True
    mutate: bool = False
    grid: Optional[Dict[str, int]] = None


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


# API Endpoints
@app.get("/")
async def root():
    """Root endpoint with system information."""
    return {
        "message": "thickcalc - thick calculus engine",
        "version": "1.0.0",
        "status": "running",
        "config": config.to_dict(),
    }


@app.post("/lr")
async def littlewood_richardson(request: LRRequest):
    """Schur expansion of a product of Schur polynomials."""
    try:
        partitions = [parse_partition(text) for text in request.partitions]
        expansion = schur_product(partitions)
        return {
            "status": "success",
            "expansion": [{"gamma": list(gamma.parts), "coeff": coeff} for gamma, coeff in expansion.items()],
        }
    except ThickCalcError as e:
        raise _bad_request(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.get("/qbinom/{a}/{b}")
async def quantum_binomial(a: int, b: int):
    """[a+b choose a] in factorial and partition-sum form."""
    try:
        factorial_form = q_divided_power_product(a, b)
        partition_form = quantum_binomial_partition(a, b)
        return {
            "status": "success",
            "value": str(factorial_form),
            "partition_sum": str(partition_form),
            "agree": factorial_form == partition_form,
        }
    except ThickCalcError as e:
        raise _bad_request(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.post("/reduce")
async def reduce_element(request: ReduceRequest):
    """Canonical form of a thin element."""
    try:
        element = parse_element(request.element)
        loop = asyncio.get_event_loop()
        reduced = await loop.run_in_executor(None, reduce, element)
        return {
            "status": "success",
            "canonical": format_element(reduced),
            "terms": len(reduced),
            "degree": reduced.degree,
        }
    except ThickCalcError as e:
        raise _bad_request(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.post("/verify")
async def verify_identity(request: VerifyRequest):
    """Verify one identity over a small grid."""
    spec = identity_registry.get_identity(request.identity)
    if not spec:
        raise HTTPException(status_code=404, detail=f"Identity '{request.identity}' not found")
    if request.max_strands > API_MAX_STRANDS:
        raise HTTPException(status_code=400, detail=f"max_strands is limited to {API_MAX_STRANDS} here; use the CLI")
    try:
        grid = [
            params for params in spec.grid(request.max_strands)
            if all(params.get(key, value) == value for key, value in (request.grid or {}).items())
        ]

        def run():
            return verify(
                spec, grid=grid, engine=calibrate_engine(engine_from_config()), oracle=request.oracle,
                mutate=request.mutate, workers=1, max_strands=request.max_strands,
            )

        loop = asyncio.get_event_loop()
        report = await loop.run_in_executor(None, run)
        return {
            "status": "success",
            "report": report.model_dump(by_alias=True, exclude_none=True),
        }
    except ThickCalcError as e:
        raise _bad_request(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.get("/identities")
async def list_identities(max_strands: Optional[int] = None):
    """List all registered identities."""
    try:
        names = identity_registry.list_identities()
        return {
            "status": "success",
            "identities": [identity_registry.get_identity(name).to_dict(max_strands) for name in names],
            "count": len(names),
            "cache": get_cache_manager().get_statistics(),
        }
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host=config.host, port=config.port)
