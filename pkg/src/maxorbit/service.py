"""HTTP service exposing the package over JSON.

Every capability is a POST endpoint taking a small pydantic request model;
partitions travel as either a text form ("5,4,3^2,2,1") or an integer array.
The CLI is a thin client of this app, normally over an in-process transport.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .basis_graph import build_graph, render_graph
from .centralizer import VARIANTS, subalgebra_spec
from .fieldmat import is_prime
from .maxtype import hat_with, omega1, q_of, select_hat
from .oracle import audit_range, verify
from .partitions import Partition, dominance, parse_partition

app = FastAPI(title="maxorbit", version=__version__)

PartitionInput = str | list[int]


def _partition(value: PartitionInput) -> Partition:
    try:
        if isinstance(value, str):
            return parse_partition(value)
        return Partition(sorted((int(x) for x in value), reverse=True))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


class PartitionRequest(BaseModel):
    partition: PartitionInput


class QResponse(BaseModel):
    input: list[int]
    result: list[int]


class ChainStep(BaseModel):
    partition: list[int]
    omega1: int
    i_tilde: int
    s: int


class ChainResponse(BaseModel):
    input: list[int]
    steps: list[ChainStep]
    result: list[int]


class OmegaResponse(BaseModel):
    input: list[int]
    omega1: int


class HatResponse(BaseModel):
    input: list[int]
    hat: list[int]
    i_tilde: int
    s: int
    cardinality: int


class GraphEntry(BaseModel):
    level: int
    run: int
    j: int
    l: int
    in_delta_circ: bool


class GraphResponse(BaseModel):
    input: list[int]
    omega1: int
    entries: list[GraphEntry]
    table: str


class DimsResponse(BaseModel):
    input: list[int]
    counts: dict[str, int]


class DominanceRequest(BaseModel):
    a: PartitionInput
    b: PartitionInput


class DominanceResponse(BaseModel):
    a: list[int]
    b: list[int]
    ordering: str


class VerifyRequest(BaseModel):
    partition: PartitionInput
    prime: int = 10007
    samples: int = Field(default=100, ge=1)
    seed: int = 0


class TypeCount(BaseModel):
    type: list[int]
    count: int


class CorankCount(BaseModel):
    corank: int
    count: int


class Violation(BaseModel):
    check: str
    witness: int


class VerifyResponse(BaseModel):
    partition: list[int]
    predicted: list[int]
    prime: int
    samples: int
    seed: int
    observed: list[TypeCount]
    maximal: list[list[int]]
    corank_counts: list[CorankCount]
    modal_corank: int
    expected_corank: int
    violations: list[Violation]
    verdict: str


class AuditRequest(BaseModel):
    n_max: int = Field(ge=1)
    sample_upto: int = Field(default=0, ge=0)
    prime: int = 10007
    samples: int = Field(default=100, ge=1)
    seed: int = 0


class AuditCheck(BaseModel):
    name: str
    passes: int
    failures: int
    first_counterexample: str | None


class AuditSampling(BaseModel):
    upto: int
    prime: int
    samples: int
    seed: int
    partitions: int
    confirmed: int
    escalated: int
    failed: list[str]


class AuditResponse(BaseModel):
    n_max: int
    partitions: int
    checks: list[AuditCheck]
    total_failures: int
    sampling: AuditSampling | None


def _check_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise HTTPException(status_code=400, detail=f"modulus must be an odd prime >= 3, got {p}")


def _require_nonempty(b: Partition) -> Partition:
    if not b:
        raise HTTPException(status_code=400, detail="partition must be nonempty")
    return b


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/q", response_model=QResponse)
def q_endpoint(req: PartitionRequest):
    b = _partition(req.partition)
    return QResponse(input=list(b.parts), result=list(q_of(b).result.parts))


@app.post("/chain", response_model=ChainResponse)
def chain_endpoint(req: PartitionRequest):
    b = _partition(req.partition)
    return ChainResponse(**q_of(b).to_dict())


@app.post("/omega", response_model=OmegaResponse)
def omega_endpoint(req: PartitionRequest):
    b = _require_nonempty(_partition(req.partition))
    return OmegaResponse(input=list(b.parts), omega1=omega1(b))


@app.post("/hat", response_model=HatResponse)
def hat_endpoint(req: PartitionRequest):
    b = _require_nonempty(_partition(req.partition))
    sel = select_hat(b)
    return HatResponse(
        input=list(b.parts),
        hat=list(hat_with(b, sel).parts),
        i_tilde=sel.i_tilde,
        s=sel.s,
        cardinality=sel.cardinality,
    )


@app.post("/graph", response_model=GraphResponse)
def graph_endpoint(req: PartitionRequest):
    b = _require_nonempty(_partition(req.partition))
    g = build_graph(b)
    entries = [
        GraphEntry(
            level=g.level[lab],
            run=lab.run,
            j=lab.j,
            l=lab.l,
            in_delta_circ=lab in g.delta_circ,
        )
        for lab in sorted(g.labels, key=lambda lab: (g.level[lab], lab.run, lab.j))
    ]
    return GraphResponse(
        input=list(b.parts), omega1=g.omega1, entries=entries, table=render_graph(g)
    )


@app.post("/dims", response_model=DimsResponse)
def dims_endpoint(req: PartitionRequest):
    b = _partition(req.partition)
    counts = {v: subalgebra_spec(b, v).free_count for v in VARIANTS}
    return DimsResponse(input=list(b.parts), counts=counts)


@app.post("/dominance", response_model=DominanceResponse)
def dominance_endpoint(req: DominanceRequest):
    a = _partition(req.a)
    b = _partition(req.b)
    try:
        ordering = dominance(a, b)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return DominanceResponse(
        a=list(a.parts), b=list(b.parts), ordering=ordering.value
    )


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest):
    _check_prime(req.prime)
    b = _partition(req.partition)
    report = verify(b, p=req.prime, samples=req.samples, seed=req.seed)
    return VerifyResponse(**report.to_dict())


@app.post("/audit", response_model=AuditResponse)
def audit_endpoint(req: AuditRequest):
    _check_prime(req.prime)
    summary = audit_range(
        req.n_max,
        sample_upto=req.sample_upto,
        prime=req.prime,
        samples=req.samples,
        seed=req.seed,
    )
    return AuditResponse(**summary.to_dict())
