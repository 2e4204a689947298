"""
Serviço de geometria de reticulado em coordenadas adaptadas.

Um Frame fixa duas direções (k1, 1) e (k2, 1) de inclinação irracional em
Q(sqrt(D)). Todo ponto do plano se escreve v = c1 (k1, 1) + c2 (k2, 1); os
paralelogramos de Markov viram retângulos alinhados aos eixos (c1, c2) e os
testes de interseção viram aritmética exata de intervalos.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple, Union

from src.models.matrix import EigenData, MatZ2, eigen_data, fixpoints
from src.models.surd import Surd, coerce
from src.utils.errors import MismatchedRadicandError, RationalSlopeError
from src.utils.logger import Logger

logger = Logger(__name__)

Scalar = Union[int, Fraction, Surd]
LatticePoint = Tuple[int, int]
FramePoint = Tuple[Surd, Surd]


def _floor(x: Scalar) -> int:
    if isinstance(x, Surd):
        return x.floor()
    return int(Fraction(x).__floor__())


def _ceil(x: Scalar) -> int:
    return -_floor(-x)


@dataclass(frozen=True)
class LatticeHit:
    """Ponto de reticulado (m, n) com suas coordenadas no frame."""

    m: int
    n: int
    c1: Surd
    c2: Surd

    @property
    def vector(self) -> LatticePoint:
        return (self.m, self.n)


class Frame:
    """Coordenadas (c1, c2) relativas às direções (k1, 1) e (k2, 1)."""

    def __init__(self, k1: Surd, k2: Surd):
        for k in (k1, k2):
            if not isinstance(k, Surd) or k.is_rational:
                raise RationalSlopeError(f"Direção com inclinação racional: {k}")
        if k1.D != k2.D:
            raise MismatchedRadicandError(f"Direções em corpos diferentes: {k1.D} e {k2.D}")
        if k1 == k2:
            raise RationalSlopeError("Direções coincidentes")
        self.k1 = k1
        self.k2 = k2
        self.D = k1.D
        self.delta = k1 - k2

    def __repr__(self) -> str:
        return f"Frame({self.k1}, {self.k2})"

    def coords(self, x: Scalar, y: Scalar) -> FramePoint:
        """Coordenadas no frame do ponto padrão (x, y)."""
        c1 = (x - self.k2 * y) / self.delta
        c2 = (self.k1 * y - x) / self.delta
        return coerce(c1, self.D), coerce(c2, self.D)

    def point(self, c1: Scalar, c2: Scalar) -> Tuple[Surd, Surd]:
        """Ponto padrão (x, y) com coordenadas (c1, c2)."""
        return (
            coerce(c1 * self.k1 + c2 * self.k2, self.D),
            coerce(c1 + c2, self.D),
        )

    def lattice_coords(self, vector: LatticePoint) -> FramePoint:
        return self.coords(vector[0], vector[1])

    @property
    def cell_area(self) -> Surd:
        """Área padrão do retângulo unitário do frame, |k1 - k2|."""
        return abs(self.delta)

    def lattice_with_c1(self, value: Scalar) -> Optional[LatticePoint]:
        """Único vetor do reticulado com c1 = value, se existir."""
        X = coerce(value * self.delta, self.D)
        y = -X.b / self.k2.b
        x = X.a + self.k2.a * y
        if y.denominator != 1 or x.denominator != 1:
            return None
        return (int(x), int(y))

    def lattice_with_c2(self, value: Scalar) -> Optional[LatticePoint]:
        """Único vetor do reticulado com c2 = value, se existir."""
        Y = coerce(value * self.delta, self.D)
        y = Y.b / self.k1.b
        x = self.k1.a * y - Y.a
        if y.denominator != 1 or x.denominator != 1:
            return None
        return (int(x), int(y))

    def lattice_in_box(
        self,
        lo1: Scalar,
        hi1: Scalar,
        lo2: Scalar,
        hi2: Scalar,
        closed: bool = False,
    ) -> Iterator[LatticeHit]:
        """
        Enumera os pontos de Z^2 com c1 em (lo1, hi1) e c2 em (lo2, hi2).

        Percorre as linhas y = n (y = c1 + c2) e, em cada linha, o intervalo
        exato de x; `closed` inclui as bordas.
        """
        lo1, hi1, lo2, hi2 = (coerce(v, self.D) for v in (lo1, hi1, lo2, hi2))
        if lo1 > hi1 or lo2 > hi2:
            return
        for n in range(_ceil(lo1 + lo2), _floor(hi1 + hi2) + 1):
            a = max(lo1, n - hi2)
            b = min(hi1, n - lo2)
            if a > b:
                continue
            xa = a * self.delta + n * self.k2
            xb = b * self.delta + n * self.k2
            for m in range(_ceil(min(xa, xb)), _floor(max(xa, xb)) + 1):
                c1, c2 = self.coords(m, n)
                if closed:
                    inside = lo1 <= c1 <= hi1 and lo2 <= c2 <= hi2
                else:
                    inside = lo1 < c1 < hi1 and lo2 < c2 < hi2
                if inside:
                    yield LatticeHit(m, n, c1, c2)

    def points_in_box(
        self,
        lo1: Scalar,
        hi1: Scalar,
        lo2: Scalar,
        hi2: Scalar,
        offset: Tuple[Fraction, Fraction] = (Fraction(0), Fraction(0)),
        closed: bool = True,
    ) -> List[FramePoint]:
        """Pontos de offset + Z^2 na caixa, em coordenadas do frame."""
        o1, o2 = self.coords(offset[0], offset[1])
        return [
            (hit.c1 + o1, hit.c2 + o2)
            for hit in self.lattice_in_box(lo1 - o1, hi1 - o1, lo2 - o2, hi2 - o2, closed=closed)
        ]


@lru_cache(maxsize=64)
def frame_for(k1: Surd, k2: Surd) -> Frame:
    """Frame memoizado para um par de direções."""
    return Frame(k1, k2)


@lru_cache(maxsize=64)
def matrix_frame(A: MatZ2) -> Tuple[EigenData, Frame]:
    """Dados espectrais de A e o frame (κ, κ_s) das direções instável e estável."""
    eig = eigen_data(A)
    return eig, frame_for(eig.kappa, eig.kappa_s)


def fixpoint_lattice_in_box(
    A: MatZ2,
    lo1: Scalar,
    hi1: Scalar,
    lo2: Scalar,
    hi2: Scalar,
) -> List[FramePoint]:
    """
    Pontos do reticulado de pontos fixos (A - I)^(-1) Z^2 numa caixa fechada
    do frame de A, percorrendo cada classe f + Z^2.
    """
    _, frame = matrix_frame(A)
    points: List[FramePoint] = []
    for f in fixpoints(A):
        points.extend(frame.points_in_box(lo1, hi1, lo2, hi2, offset=f, closed=True))
    return sorted(points, key=lambda p: (float(p[0]), float(p[1])))


def fixpoint_lattice_bruteforce(
    A: MatZ2,
    lo1: Scalar,
    hi1: Scalar,
    lo2: Scalar,
    hi2: Scalar,
    include_lattice: bool = True,
) -> int:
    """
    Oráculo: conta pontos fixos elevados na caixa varrendo um retângulo
    padrão que contém a caixa (sem a enumeração por linhas).

    Com include_lattice=False a classe de Z^2 (ponto fixo na origem) é omitida.
    """
    _, frame = matrix_frame(A)
    corners = [frame.point(c1, c2) for c1 in (lo1, hi1) for c2 in (lo2, hi2)]
    xs = [float(x) for x, _ in corners]
    ys = [float(y) for _, y in corners]
    count = 0
    for fx, fy in fixpoints(A):
        if not include_lattice and fx == 0 and fy == 0:
            continue
        for m in range(int(min(xs)) - 2, int(max(xs)) + 3):
            for n in range(int(min(ys)) - 2, int(max(ys)) + 3):
                c1, c2 = frame.coords(fx + m, fy + n)
                if lo1 <= c1 <= hi1 and lo2 <= c2 <= hi2:
                    count += 1
    return count


__all__ = [
    'Frame',
    'LatticeHit',
    'frame_for',
    'matrix_frame',
    'fixpoint_lattice_in_box',
    'fixpoint_lattice_bruteforce',
]
