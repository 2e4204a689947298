"""
Modelos de partições do toro em coordenadas (u, s).

Cada paralelogramo de Markov é guardado como retângulo [u0, u1] x [s0, s1]
no frame das direções instável/estável; a conversão para coordenadas
padrão fica com o Frame.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Tuple

import networkx as nx

from src.models.surd import Surd
from src.utils.errors import InvariantViolationError

PartitionKind = Literal['qMp', 'preMp', 'strMp']
PieceType = Literal['island', 'parquet']
Side = Literal['+u', '-u', '+s', '-s']
LatticePoint = Tuple[int, int]

PARTITION_KINDS = ('qMp', 'preMp', 'strMp')
SIDES = ('+u', '+s', '-u', '-s')


@dataclass(frozen=True)
class PlanarParallelogram:
    """Paralelogramo com lados paralelos a E^u e E^s, como retângulo (u, s)."""

    u0: Surd
    u1: Surd
    s0: Surd
    s1: Surd

    def __post_init__(self):
        if not (self.u0 < self.u1 and self.s0 < self.s1):
            raise InvariantViolationError(
                f"Paralelogramo degenerado: u [{self.u0}, {self.u1}] s [{self.s0}, {self.s1}]"
            )

    @classmethod
    def from_bounds(cls, ua: Surd, ub: Surd, sa: Surd, sb: Surd) -> 'PlanarParallelogram':
        """Aceita os extremos em qualquer ordem."""
        return cls(min(ua, ub), max(ua, ub), min(sa, sb), max(sa, sb))

    @property
    def anchor(self) -> Tuple[Surd, Surd]:
        return (self.u0, self.s0)

    @property
    def u_len(self) -> Surd:
        return self.u1 - self.u0

    @property
    def s_len(self) -> Surd:
        return self.s1 - self.s0

    def translated(self, du, ds) -> 'PlanarParallelogram':
        return PlanarParallelogram(self.u0 + du, self.u1 + du, self.s0 + ds, self.s1 + ds)

    def scaled(self, lam, mu) -> 'PlanarParallelogram':
        """Imagem pela aplicação linear (u, s) -> (λu, μs)."""
        return PlanarParallelogram.from_bounds(self.u0 * lam, self.u1 * lam, self.s0 * mu, self.s1 * mu)

    def negated(self) -> 'PlanarParallelogram':
        return PlanarParallelogram(-self.u1, -self.u0, -self.s1, -self.s0)

    def intersection(self, other: 'PlanarParallelogram') -> Optional['PlanarParallelogram']:
        """Interseção com interior não vazio, ou None."""
        u0, u1 = max(self.u0, other.u0), min(self.u1, other.u1)
        s0, s1 = max(self.s0, other.s0), min(self.s1, other.s1)
        if u0 < u1 and s0 < s1:
            return PlanarParallelogram(u0, u1, s0, s1)
        return None

    def contains(self, u, s) -> bool:
        """Pertinência ao fecho."""
        return self.u0 <= u <= self.u1 and self.s0 <= s <= self.s1

    def to_dict(self) -> Dict[str, str]:
        return {
            'anchor_u': self.u0.to_text(),
            'anchor_s': self.s0.to_text(),
            'u_len': self.u_len.to_text(),
            's_len': self.s_len.to_text(),
        }


@dataclass(frozen=True)
class TorusPartition:
    """Família de paralelogramos Π_i cujas projeções formam uma partição de T^2."""

    pieces: Tuple[PlanarParallelogram, ...]
    kind: PartitionKind
    frame: object

    def __post_init__(self):
        object.__setattr__(self, 'pieces', tuple(self.pieces))
        if self.kind not in PARTITION_KINDS:
            raise ValueError(f"Tipo de partição desconhecido: {self.kind}")

    def __len__(self) -> int:
        return len(self.pieces)

    @property
    def directions(self) -> Tuple[Surd, Surd]:
        return (self.frame.k1, self.frame.k2)

    def area(self) -> Surd:
        """Soma exata das áreas padrão das peças."""
        total = sum((p.u_len * p.s_len for p in self.pieces), Surd.rational(0, self.frame.D))
        return total * self.frame.cell_area

    def with_kind(self, kind: PartitionKind) -> 'TorusPartition':
        return TorusPartition(self.pieces, kind, self.frame)

    def translated(self, du, ds) -> 'TorusPartition':
        return TorusPartition(tuple(p.translated(du, ds) for p in self.pieces), self.kind, self.frame)

    def negated(self) -> 'TorusPartition':
        """Imagem pela simetria -id."""
        return TorusPartition(tuple(p.negated() for p in self.pieces), self.kind, self.frame)


@dataclass(frozen=True)
class TConfiguration:
    """
    Ponto P, raio L ao longo do eixo `leg_axis` (0 = c1, 1 = c2) com sentido
    `leg_sign`, e travessa I na outra direção com extremos A e B.

    Coordenadas da travessa são relativas a P; t_a < t_b são os tempos de
    cruzamento e v_a, v_b os vetores do reticulado que os realizam.
    """

    frame: object
    origin: Tuple[object, object]
    leg_axis: int
    leg_sign: int
    sigma_a: Surd
    sigma_b: Surd
    t_a: Surd
    t_b: Surd
    v_a: LatticePoint
    v_b: LatticePoint

    @property
    def crossbar(self) -> Tuple[Surd, Surd]:
        """Arco I como intervalo [min, max] de coordenadas da travessa."""
        return (min(self.sigma_a, self.sigma_b), max(self.sigma_a, self.sigma_b))

    @property
    def t_c(self) -> Surd:
        """Tempo do ponto C (fim do segmento PC)."""
        return self.t_a + self.t_b


@dataclass(frozen=True)
class VertexPreMp:
    """Entrada (side, k, l) da sequência biinfinita de preMps de tipo vértice."""

    side: Side
    k: int
    l: int
    position: int
    A_pt: LatticePoint
    B_pt: LatticePoint
    geometry: TorusPartition
    ptype: PieceType
    t_a: Surd
    t_b: Surd
    sigma_a: Surd
    sigma_b: Surd
    guaranteed: bool = False
    notes: Tuple[str, ...] = ()

    @property
    def stable_segment(self) -> Tuple[Surd, Surd]:
        return (min(self.sigma_a, self.sigma_b), max(self.sigma_a, self.sigma_b))

    @property
    def unstable_length(self) -> Surd:
        return self.t_a + self.t_b

    def to_dict(self) -> Dict[str, object]:
        return {
            'side': self.side,
            'k': self.k,
            'l': self.l,
            'type': self.ptype,
            'A_pt': list(self.A_pt),
            'B_pt': list(self.B_pt),
            'guaranteed': self.guaranteed,
        }


@dataclass(frozen=True)
class Edge:
    """Aresta i -> j do multigrafo Γ rotulada pela translação (m, n)."""

    source: int
    target: int
    shift: LatticePoint


@dataclass
class TransitionGraph:
    """Multigrafo orientado Γ sobre as peças de uma preMp."""

    vertex_count: int
    edges: List[Edge] = field(default_factory=list)

    def adjacency(self) -> List[List[int]]:
        """Matriz de multiplicidades entre vértices."""
        matrix = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for edge in self.edges:
            matrix[edge.source][edge.target] += 1
        return matrix

    def to_digraph(self) -> nx.MultiDiGraph:
        """Γ como multigrafo networkx; cada aresta guarda sua translação em `shift`."""
        digraph = nx.MultiDiGraph()
        digraph.add_nodes_from(range(self.vertex_count))
        for edge in self.edges:
            digraph.add_edge(edge.source, edge.target, shift=edge.shift)
        return digraph

    def is_strongly_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        return nx.is_strongly_connected(self.to_digraph())

    def shift_for(self, source: int, target: int) -> Optional[LatticePoint]:
        """Translação única da aresta source -> target (None se ausente)."""
        shifts = [e.shift for e in self.edges if e.source == source and e.target == target]
        if len(shifts) != 1:
            return None
        return shifts[0]
