"""HTTP service wrapping the solvers, spectrum, classifier and verifier.

Run with: uvicorn paritysg.service:app
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .analysis import spectrum
from .graphs import (
    FAMILY_MIN_N,
    FamilySpec,
    Graph,
    Graph6Error,
    enumerate_connected_labeled,
    generate,
    parse_graph6,
    write_graph6,
)
from .signatures import format_partition
from .solver import (
    default_start_partition,
    rna_exact_bnb,
    rna_exact_bruteforce,
    rna_switch_descent,
    upper_bound_main,
    upper_bound_trivial,
)
from .verify import classify_family, resolve_checks, run_corpus

app = FastAPI(
    title="paritysg",
    description="Exact rna-number solvers and theorem verification "
    "for small graphs.",
)


def _decode(graph6: str) -> Graph:
    try:
        return parse_graph6(graph6)
    except Graph6Error as exc:
        raise HTTPException(status_code=422, detail=str(exc))


class GraphRequest(BaseModel):
    graph6: str


class RnaRequest(GraphRequest):
    method: Literal["bruteforce", "bnb", "descent"] = "bnb"


class RnaResponse(BaseModel):
    graph6: str
    n: int
    m: int
    value: int
    method: str
    witness: str
    nodes_explored: int
    bound_trivial: int
    bound_main: int


class SpectrumResponse(BaseModel):
    graph6: str
    n: int
    values: list[int]


class ClassifyResponse(BaseModel):
    graph6: str
    family: str


class GenRequest(BaseModel):
    family: str
    n: int


class GenResponse(BaseModel):
    graph6: str
    n: int
    edges: list[tuple[int, int]]


class VerifyRequest(BaseModel):
    graphs: Optional[list[str]] = None
    enumerate_n: Optional[int] = Field(default=None, ge=1, le=7)
    checks: list[str] = ["all"]
    max_n: int = 62


class CheckReport(BaseModel):
    check: str
    graphs_tested: int
    skipped: int
    failures: list[dict]
    passed: bool


class VerifyResponse(BaseModel):
    reports: list[CheckReport]
    all_passed: bool


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/rna", response_model=RnaResponse)
def rna(req: RnaRequest) -> RnaResponse:
    g = _decode(req.graph6)
    if req.method == "bruteforce":
        res = rna_exact_bruteforce(g)
    elif req.method == "bnb":
        res = rna_exact_bnb(g)
    else:
        res = rna_switch_descent(g, default_start_partition(g))
    return RnaResponse(
        graph6=write_graph6(g).decode("ascii"),
        n=g.n,
        m=g.m,
        value=res.value,
        method=res.method,
        witness=format_partition(res.witness),
        nodes_explored=res.nodes_explored,
        bound_trivial=upper_bound_trivial(g.n),
        bound_main=upper_bound_main(g.m, g.n),
    )


@app.post("/spectrum", response_model=SpectrumResponse)
def spectrum_endpoint(req: GraphRequest) -> SpectrumResponse:
    g = _decode(req.graph6)
    try:
        sp = spectrum(g)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return SpectrumResponse(
        graph6=write_graph6(g).decode("ascii"), n=g.n, values=list(sp.values)
    )


@app.post("/classify", response_model=ClassifyResponse)
def classify(req: GraphRequest) -> ClassifyResponse:
    g = _decode(req.graph6)
    return ClassifyResponse(
        graph6=write_graph6(g).decode("ascii"), family=classify_family(g)
    )


@app.post("/gen", response_model=GenResponse)
def gen(req: GenRequest) -> GenResponse:
    if req.family not in FAMILY_MIN_N:
        raise HTTPException(status_code=422,
                            detail=f"unknown family {req.family!r}")
    try:
        g = generate(FamilySpec(req.family, req.n))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return GenResponse(
        graph6=write_graph6(g).decode("ascii"),
        n=g.n,
        edges=sorted(g.edges),
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    if (req.graphs is None) == (req.enumerate_n is None):
        raise HTTPException(
            status_code=422,
            detail="provide exactly one of graphs / enumerate_n",
        )
    try:
        names = resolve_checks(req.checks)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    if req.graphs is not None:
        source = [_decode(s) for s in req.graphs]
    else:
        source = (
            g
            for n in range(1, req.enumerate_n + 1)
            for g in enumerate_connected_labeled(n)
        )
    reports = run_corpus(source, names, max_n=req.max_n)
    out = [
        CheckReport(
            check=rep.check_name,
            graphs_tested=rep.graphs_tested,
            skipped=rep.skipped,
            failures=[vars(f) for f in rep.failures],
            passed=rep.passed,
        )
        for rep in reports.values()
    ]
    return VerifyResponse(
        reports=out, all_passed=all(r.passed for r in out)
    )
