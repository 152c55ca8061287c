"""Request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field


class SetupParams(BaseModel):
    """A shuffle setup: Cartan type, the two letter words, the sign sequence."""

    cartan: Union[str, list[list[int]]] = Field(description="type label like 'A3' or an explicit Cartan matrix")
    u: list[int] = Field(default_factory=list, description="simple-root indices of the minus-side word")
    v: list[int] = Field(default_factory=list, description="simple-root indices of the plus-side word")
    eps: list[int] = Field(default_factory=list, description="sign sequence of the shuffle (+1/-1 per slot)")


class EnumerateRequest(SetupParams):
    filter: Literal["all", "positive", "distinguished"] = "all"
    fixed_w: Optional[list[int]] = Field(
        default=None, description="restrict to masks whose endpoint has this reduced word"
    )
    max_bits: int = Field(default=20, ge=0, le=24)


class SubexpressionRecord(BaseModel):
    mask: list[int]
    letters: list[int]
    gammas: list[list[int]]
    J: list[int]
    I: list[int]
    K: list[int]
    dim: int
    positive: bool
    distinguished: bool
    w: list[int]
    nu: list[list[int]]


class EnumerateSummary(BaseModel):
    total: int
    positive: int
    distinguished: int
    by_endpoint: dict[str, int]


class EnumerateResponse(BaseModel):
    n: int
    records: list[SubexpressionRecord]
    summary: EnumerateSummary


class MaskRequest(SetupParams):
    mask: list[int] = Field(description="0/1 flags, one per position")


class PsiItem(BaseModel):
    j: int
    psi: str
    L: str
    M: str


class PsiResponse(BaseModel):
    mask: list[int]
    J: list[int]
    I: list[int]
    K: list[int]
    items: list[PsiItem]


class SectionItem(BaseModel):
    j: int
    p: list[list[str]]
    q: list[list[str]]


class SectionsResponse(BaseModel):
    mask: list[int]
    sections: list[SectionItem]


class MonoRequest(MaskRequest):
    samples: int = Field(default=10, ge=0, le=1000)
    seed: int = 20240601


class ClosedFormReport(BaseModel):
    applicable: bool
    matches: bool
    mismatches: list[str]


class SampleReport(BaseModel):
    xi: list[str]
    z: list[str]
    per_position: dict[int, str]


class MonoResponse(BaseModel):
    mask: list[int]
    index_set: list[int]
    M: list[list[int]]
    L: list[list[int]]
    closed_form: ClosedFormReport
    verified_samples: int
    resamples: int
    passed: bool
    failures: list[SampleReport]


class ConvertWyRequest(MaskRequest):
    allow_unreduced: bool = False


class ConvertWyResponse(BaseModel):
    J0: list[int]
    Jplus: list[int]
    Jminus: list[int]
    w_sequence: list[list[int]]


class VerifyRequest(BaseModel):
    suite: Literal["examples", "properties", "all"] = "all"
    seed: int = 20240601
    golden_dir: Optional[str] = None


class CheckReport(BaseModel):
    name: str
    criterion: int
    passed: bool
    seconds: float
    detail: str
    findings: list[str]


class VerifyResponse(BaseModel):
    passed: bool
    checks: list[CheckReport]
