from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field

Number = int | str  # integers stay integers, other rationals print as "p/q"


class OutputDocument(BaseModel):
    command: str
    n: int = Field(..., ge=2)
    kind: Literal["singular", "classical"]
    format: Literal["text", "json", "csv"] = "text"
    payload: dict[str, Any] = Field(default_factory=dict)

    def to_json(self) -> str:
        flat = FlatDocument(command=self.command, n=self.n, kind=self.kind, **self.payload)
        return flat.model_dump_json()


class FlatDocument(BaseModel):
    """JSON shape of a document: the header fields with the payload keys beside them."""

    model_config = ConfigDict(extra="allow")

    command: str
    n: int
    kind: str


class SeriesPayload(BaseModel):
    method: Literal["genfunc", "dp", "oracle"]
    terms: int = Field(..., ge=0)
    coefficients: list[int]


class GenfuncPayload(BaseModel):
    numerator: list[int]
    denominator: list[int]
    unknowns: int
    blocks_per_syllable: dict[str, int] = Field(default_factory=dict)


class RootOut(BaseModel):
    value: float
    multiplicity: int
    residue: float | None = None


class RecurrenceOut(BaseModel):
    coefficients: list[Number]
    valid_from: int
    reduced_coefficients: list[Number] | None = None
    constant: Number | None = None


class CubicOut(BaseModel):
    factor: list[int]
    p: str
    q: str
    discriminant_expr: str
    root_count: int
    trig_roots: list[float] | None = None


class GrowthPayload(BaseModel):
    roots: list[RootOut]
    growth_rate: float
    residues_available: bool
    recurrence: RecurrenceOut
    cubic: CubicOut | None = None


class PredecessorRow(BaseModel):
    id: int
    word: str
    length: int = Field(..., ge=1)
    predecessors: list[int]


class PredecessorsPayload(BaseModel):
    rows: list[PredecessorRow]


class OraclePayload(BaseModel):
    maxlen: int = Field(..., ge=0)
    counts: list[int]
    list_length: int | None = None
    representatives: list[str] | None = None


class CheckOut(BaseModel):
    name: str
    passed: bool
    detail: str | None = None


class VerifyPayload(BaseModel):
    maxlen: int
    summary: dict[str, Any]
    checks: list[CheckOut]
