"""HTTP front end wrapping the core package.

Every endpoint is a stateless exact computation; responses carry the same
payload shapes as the CLI's JSON output.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel, Field

from .edge import edge_measure, jack_measure, verify_corner_poly, verify_growth_ratios, verify_measures_match, verify_swap_quotient
from .partitions import Partition, PlanePartition, enumerate_partitions, enumerate_plane_partitions
from .series import macmahon_series
from .vertex import vertex_measure, verify_partition_function

app = FastAPI(title="eqmeas", description="Exact measures on partitions and plane partitions, with identity checks.")


class VerifyEdgeRequest(BaseModel):
    max_size: int = Field(default=12, ge=1)


class VerifyRatiosRequest(BaseModel):
    max_size: int = Field(default=10, ge=1)


class VerifyLemmasRequest(BaseModel):
    max_size: int = Field(default=10, ge=1)
    trials: int = Field(default=200, ge=1)
    seed: int = Field(default=0, ge=0)


class VerifyVertexRequest(BaseModel):
    order: int = Field(default=6, ge=1)
    points: int = Field(default=5, ge=1)
    seed: int = Field(default=0, ge=0)


class PartitionRequest(BaseModel):
    partition: str = Field(description="comma-separated parts, empty string for the empty partition")


class PlanePartitionRequest(BaseModel):
    plane_partition: str = Field(description="semicolon-separated rows of column heights, e.g. 2,1;1")


class MeasureResponse(BaseModel):
    schema_version: str = "1"
    subject: str
    measure: dict
    text: str


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/verify/edge")
def verify_edge(req: VerifyEdgeRequest) -> dict:
    report = verify_measures_match(req.max_size)
    return {"schema": "1", "max_size": req.max_size, "ok": report.ok, "report": report.json_dict()}


@app.post("/verify/ratios")
def verify_ratios(req: VerifyRatiosRequest) -> dict:
    reports = verify_growth_ratios(req.max_size)
    return {
        "schema": "1",
        "max_size": req.max_size,
        "ok": all(rep.ok for rep in reports.values()),
        "reports": {key: rep.json_dict() for key, rep in reports.items()},
    }


@app.post("/verify/lemmas")
def verify_lemmas(req: VerifyLemmasRequest) -> dict:
    corner = verify_corner_poly(req.max_size)
    swap = verify_swap_quotient(req.trials, req.seed)
    return {
        "schema": "1",
        "max_size": req.max_size,
        "trials": req.trials,
        "seed": req.seed,
        "ok": corner.ok and swap.ok,
        "reports": {"corner_poly": corner.json_dict(), "swap_quotient": swap.json_dict()},
    }


@app.post("/verify/vertex")
def verify_vertex(req: VerifyVertexRequest) -> dict:
    zreport = verify_partition_function(req.order, req.points, req.seed)
    return {
        "schema": "1",
        "order": req.order,
        "points": req.points,
        "seed": req.seed,
        "ok": zreport.ok,
        "report": zreport.json_dict(),
    }


def _parse_partition(text: str) -> Partition:
    try:
        return Partition.from_text(text)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _parse_plane_partition(text: str) -> PlanePartition:
    try:
        return PlanePartition.from_text(text)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/measure/jack", response_model=MeasureResponse)
def measure_jack(req: PartitionRequest) -> MeasureResponse:
    lam = _parse_partition(req.partition)
    value = jack_measure(lam)
    return MeasureResponse(subject=lam.text(), measure=value.json_dict(), text=value.text())


@app.post("/measure/mnop", response_model=MeasureResponse)
def measure_mnop(req: PartitionRequest) -> MeasureResponse:
    lam = _parse_partition(req.partition)
    value = edge_measure(lam)
    return MeasureResponse(subject=lam.text(), measure=value.json_dict(), text=value.text())


@app.post("/measure/vertex", response_model=MeasureResponse)
def measure_vertex(req: PlanePartitionRequest) -> MeasureResponse:
    pi = _parse_plane_partition(req.plane_partition)
    value = vertex_measure(pi)
    return MeasureResponse(subject=pi.text(), measure=value.json_dict(), text=value.text())


@app.get("/series/macmahon")
def series_macmahon(order: int = Query(default=8, ge=0)) -> dict:
    coeffs = macmahon_series(order).coeffs
    return {"schema": "1", "order": order, "coefficients": [str(c) for c in coeffs]}


@app.get("/enumerate/partitions")
def enumerate_partitions_endpoint(size: int = Query(ge=0), count_only: bool = False) -> dict:
    items = [lam.text() for lam in enumerate_partitions(size)]
    payload = {"schema": "1", "size": size, "count": len(items)}
    if not count_only:
        payload["items"] = items
    return payload


@app.get("/enumerate/plane-partitions")
def enumerate_plane_partitions_endpoint(size: int = Query(ge=0), count_only: bool = False) -> dict:
    items = [pi.text() for pi in enumerate_plane_partitions(size)]
    payload = {"schema": "1", "size": size, "count": len(items)}
    if not count_only:
        payload["items"] = items
    return payload
