"""
Modelos pydantic dos relatórios JSON da linha de comando.

Toda quantidade exata sai como string, acompanhada de um campo *_float de
conveniência; o topo de cada relatório carrega "schema": 1.
"""
from __future__ import annotations

import json
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.models.continued_fraction import CFExpansion
from src.models.surd import Surd

SCHEMA_VERSION = 1


class Report(BaseModel):
    """Base dos relatórios: chaves ordenadas, sem carimbo de tempo."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias='schema')

    def to_json(self) -> str:
        payload = self.model_dump(by_alias=True, exclude_none=True)
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


class ExactNumber(BaseModel):
    """Valor exato em texto e sua aproximação."""

    exact: str
    float_value: float = Field(alias='float')

    model_config = ConfigDict(populate_by_name=True)

    @classmethod
    def of(cls, value) -> 'ExactNumber':
        text = value.to_text() if isinstance(value, Surd) else str(value)
        return cls(exact=text, float_value=float(value))


class SequenceReport(BaseModel):
    preperiod: List[int]
    period: List[int]

    @classmethod
    def of_cf(cls, cf: CFExpansion) -> 'SequenceReport':
        return cls(preperiod=list(cf.preperiod), period=list(cf.period))


class ApproximationReport(BaseModel):
    p: int
    q: int
    side: str


class ClassifyReport(Report):
    matrix: List[List[int]]
    hyperbolic: bool
    trace: int
    det: int
    discriminant: int
    lambda_u: Optional[ExactNumber] = None
    lambda_s: Optional[ExactNumber] = None
    kappa: Optional[ExactNumber] = None
    cf: Optional[SequenceReport] = None
    cf_text: Optional[str] = None
    period: Optional[List[int]] = None
    fixpoint_count: Optional[int] = None
    one_sided: Optional[List[ApproximationReport]] = None
    two_sided: Optional[List[ApproximationReport]] = None
    oracle_agrees: Optional[bool] = None


class WitnessReport(BaseModel):
    word: str
    matrix: List[List[int]]
    det: int


class ConjugacyReport(Report):
    gl_conjugate: bool
    sl_conjugate: bool
    period: List[int]
    witness_word: Optional[List[str]] = None
    witness_matrix: Optional[List[List[int]]] = None
    matrices: List[List[List[int]]]
    periods: List[List[int]]
    gl_witness: Optional[WitnessReport] = None
    sl_witness: Optional[WitnessReport] = None


class ClassCountReport(BaseModel):
    total: int
    island: int
    parquet: int
    shift: Optional[int] = None
    verified: Optional[bool] = None


class PieceReport(BaseModel):
    anchor_u: str
    anchor_s: str
    u_len: str
    s_len: str


class PartitionReport(BaseModel):
    kind: str
    type: Optional[str] = None
    pieces: List[PieceReport]


class EntryReport(BaseModel):
    side: str
    k: int
    l: int
    type: str
    position: int
    A: List[int]
    B: List[int]
    guaranteed: bool
    partition: Optional[PartitionReport] = None


class PrempReport(Report):
    matrix: List[List[int]]
    counts: Optional[ClassCountReport] = None
    entries: Optional[List[EntryReport]] = None
    edge_type: Optional[List[PartitionReport]] = None
    svg: Optional[str] = None


class ComponentReport(BaseModel):
    vertices: List[int]
    spectral_radius: float


class EntropyReport(Report):
    matrix: List[List[int]]
    lambda_u: ExactNumber = Field(alias='lambda')
    ln: float
    log2: float
    determinant_vanishes: bool
    perron_float: float
    certified: bool
    sizes: Dict[str, int]
    components: List[ComponentReport]


class DoubleReport(Report):
    x: str
    steps: int
    orbit: List[str]
    code: List[int]
    sequence: SequenceReport
    ambiguous: bool
    alternate: Optional[SequenceReport] = None


class MixReport(Report):
    matrix: List[List[int]]
    grid: int
    iterations: int
    mes_x: ExactNumber
    mes_y: ExactNumber
    overlap: ExactNumber
    product: ExactNumber
    deviation: float
    mixed: bool
    frames: Optional[List[str]] = None


class FormReport(Report):
    matrix: List[List[int]]
    form: Dict[str, int]
    disc: int
    trace: int
    det: int


class EdgeReport(BaseModel):
    source: int
    target: int
    shift: List[int]


class GraphReport(Report):
    matrix: List[List[int]]
    kind: str
    vertices: int
    edges: List[EdgeReport]
    adjacency: List[List[int]]
    strongly_connected: bool
    condition_II: bool


__all__ = [
    'SCHEMA_VERSION',
    'Report',
    'ExactNumber',
    'SequenceReport',
    'ApproximationReport',
    'ClassifyReport',
    'WitnessReport',
    'ConjugacyReport',
    'ClassCountReport',
    'PieceReport',
    'PartitionReport',
    'EntryReport',
    'PrempReport',
    'ComponentReport',
    'EntropyReport',
    'DoubleReport',
    'MixReport',
    'FormReport',
    'EdgeReport',
    'GraphReport',
]
