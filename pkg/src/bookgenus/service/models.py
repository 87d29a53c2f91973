"""Request and response models for the HTTP service.

Requests carry the same raw text a CLI user would type; parsing happens
server side so the client stays thin.  Response models mirror the report
dicts field for field (declaration order is serialisation order), with
None used only for keys the reports omit, so serialising with
exclude_none reproduces the CLI payloads.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class PantsRequest(BaseModel):
    exponents: str = Field(description='twist exponents "r1,r2,r3"')


class DbcRequest(BaseModel):
    word: str = Field(description='braid word, e.g. "1 1 -2"')
    strands: int | None = None
    classify: bool | None = None


class PlumbRequest(BaseModel):
    pages: str = Field(description='comma-separated pages, e.g. "annulus,annulus"')


class SnfRequest(BaseModel):
    matrix: str = Field(description='matrix as JSON rows or "1 2; 3 4"')


class BraidInfoRequest(BaseModel):
    word: str
    strands: int | None = None


class ClassOut(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    type: str
    p: int | None = None
    q: int | None = None
    fibers: list[list[int]] | None = None
    summands: list["ClassOut"] | None = None


ClassOut.model_rebuild()


class H1Out(BaseModel):
    rank: int
    torsion: list[int]


class ObgOut(BaseModel):
    lower: int
    upper: int
    exact: int | None = None


class PageOut(BaseModel):
    genus: int
    boundary: int
    chi: int


class PantsInput(BaseModel):
    command: str
    exponents: list[int]


class PantsResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    input: PantsInput
    classified: ClassOut = Field(alias="class")
    h1: H1Out
    obg: ObgOut
    witnesses: list[str]


class DbcInput(BaseModel):
    command: str
    word: list[int]
    strands: int


class DbcResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    input: DbcInput
    page: PageOut
    obg_bound: int
    classified: ClassOut | None = Field(default=None, alias="class")
    h1: H1Out | None = None
    obg: ObgOut | None = None
    witnesses: list[str]


class PlumbInput(BaseModel):
    command: str
    pages: list[list[int]]


class PlumbResponse(BaseModel):
    input: PlumbInput
    page: PageOut
    heegaard_genus: int
    obg: ObgOut
    witnesses: list[str]


class SnfInput(BaseModel):
    command: str
    matrix: list[list[int]]


class SmithOut(BaseModel):
    d: list[int]


class SnfResponse(BaseModel):
    input: SnfInput
    smith: SmithOut
    cokernel: H1Out


class BraidInfoInput(BaseModel):
    command: str
    word: list[int]
    strands: int


class ClosureOut(BaseModel):
    components: int
    exponent_sum: int
    strands: int


class BraidInfoResponse(BaseModel):
    input: BraidInfoInput
    closure: ClosureOut
    burau_neg1: list[list[int]] | None = None
    determinant: int | None = None
