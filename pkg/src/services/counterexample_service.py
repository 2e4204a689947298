"""
Serviço do contraexemplo à codificação ingênua.

Três paralelogramos pequenos junto ao ponto fixo na origem com
ÂP₁ ∩ P₂ ≠ ∅ e ÂP₂ ∩ P₃ ≠ ∅ mas Â²P₁ ∩ P₃ = ∅; as peças são
cilindros do refinamento iterado de uma preMp de tipo vértice.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Set

from src.models.matrix import MatZ2, require_hyperbolic
from src.models.partition import PlanarParallelogram, TorusPartition
from src.services.coding_service import Word, closure_codes, cylinder_pieces, naive_codes
from src.services.lattice_service import Frame, matrix_frame
from src.services.partition_service import enumerate_vertex_premps
from src.utils.errors import ConstructionWindowTooSmallError
from src.utils.logger import Logger

logger = Logger(__name__)

HALF = Fraction(1, 2)
DEFAULT_MAX_DEPTH = 8
PROBES = (Fraction(7, 8), Fraction(3, 4), Fraction(1, 2))


@dataclass(frozen=True)
class CounterexampleFixture:
    """Π₁, Π₂, Π₃ no frame de A, a preMp base e a profundidade usada."""

    A: MatZ2
    base: TorusPartition
    depth: int
    p1: PlanarParallelogram
    p2: PlanarParallelogram
    p3: PlanarParallelogram
    checks: Dict[str, bool]

    @property
    def holds(self) -> bool:
        return all(self.checks.values())


def _in_square(frame: Frame, rect: PlanarParallelogram, strict: bool = False) -> bool:
    """Os quatro vértices no quadrado K = [-1/2, 1/2]^2 (aberto se strict)."""
    for u in (rect.u0, rect.u1):
        for s in (rect.s0, rect.s1):
            for coordinate in frame.point(u, s):
                if strict and not -HALF < coordinate < HALF:
                    return False
                if not strict and not -HALF <= coordinate <= HALF:
                    return False
    return True


def torus_touch(frame: Frame, a: PlanarParallelogram, b: PlanarParallelogram) -> bool:
    """Fechos de a e de algum b + w se intersectam."""
    box = (a.u0 - b.u1, a.u1 - b.u0, a.s0 - b.s1, a.s1 - b.s0)
    return any(True for _ in frame.lattice_in_box(*box, closed=True))


def torus_overlap(frame: Frame, a: PlanarParallelogram, b: PlanarParallelogram) -> bool:
    """Interiores de a e de algum b + w se intersectam."""
    box = (a.u0 - b.u1, a.u1 - b.u0, a.s0 - b.s1, a.s1 - b.s0)
    return any(True for _ in frame.lattice_in_box(*box))


def _base_partition(A: MatZ2) -> TorusPartition:
    entries = enumerate_vertex_premps(A, sides=('+u',))
    base = next((e for e in entries if e.guaranteed), None)
    if base is None:
        raise ConstructionWindowTooSmallError(f"Sem preMp garantida para {A.to_text()}")
    return base.geometry


def _attempt(A: MatZ2, base: TorusPartition, depth: int) -> Optional[CounterexampleFixture]:
    eig, frame = matrix_frame(A)
    lam, mu = eig.lambda_u, eig.lambda_s
    zero = frame.coords(0, 0)
    at_origin = cylinder_pieces(zero, base, A, -depth, depth)

    p1 = next((r for r in at_origin if r.u1 == 0 and r.s0 < 0 < r.s1), None)
    p2 = next((r for r in at_origin if r.u0 == 0 and r.s0 == 0), None)
    if p1 is None or p2 is None:
        return None
    if not all(_in_square(frame, r) for r in (p1, p1.scaled(lam, mu), p1.scaled(lam * lam, mu * mu), p2)):
        return None

    image2 = p2.scaled(lam, mu)
    s_mid = (p2.s0 + p2.s1) / 2
    for fraction in PROBES:
        y = (lam * p2.u1 * fraction, mu * s_mid)
        for p3 in cylinder_pieces(y, base, A, -depth, depth):
            if p3.u0 <= 0 or not _in_square(frame, p3, strict=True):
                continue
            if p3.intersection(image2) is None:
                continue
            checks = {
                'A_p1_meets_p2': torus_touch(frame, p1.scaled(lam, mu), p2),
                'A_p2_meets_p3': torus_overlap(frame, image2, p3),
                'A2_p1_misses_p3': not torus_touch(frame, p1.scaled(lam * lam, mu * mu), p3),
            }
            if all(checks.values()):
                return CounterexampleFixture(A, base, depth, p1, p2, p3, checks)
    return None


def build_counterexample(A: Optional[MatZ2] = None, max_depth: int = DEFAULT_MAX_DEPTH) -> CounterexampleFixture:
    """
    Constrói Π₁ ⊂ K′, Π₂ ⊂ K″ e Π₃ ⊂ int K″ refinando a janela até que as
    três peças caibam no quadrado K.

    Args:
        A: Matriz hiperbólica com λ, μ > 0 (padrão: [[2,1],[1,1]])
        max_depth: Maior janela [-m, m] de refinamento tentada

    Raises:
        NotHyperbolicError: Se A não é hiperbólica
        ConstructionWindowTooSmallError: Se nenhuma janela até max_depth serve
    """
    A = A or MatZ2(2, 1, 1, 1)
    require_hyperbolic(A)
    eig, _ = matrix_frame(A)
    if not (eig.lambda_u > 0 and eig.lambda_s > 0):
        raise ValueError(f"{A.to_text()} precisa de autovalores positivos")
    base = _base_partition(A)
    for depth in range(1, max_depth + 1):
        fixture = _attempt(A, base, depth)
        if fixture is not None:
            logger.info(f"Contraexemplo para {A.to_text()} com janela [-{depth}, {depth}]")
            return fixture
        logger.debug(f"Janela [-{depth}, {depth}] pequena demais")
    raise ConstructionWindowTooSmallError(f"Nenhuma janela até {max_depth} produz Π₁, Π₂, Π₃")


def origin_codings(fixture: CounterexampleFixture, n_from: int = -1, n_to: int = 1) -> Dict[str, Set[Word]]:
    """Códigos da origem pela regra do fecho e pela regra ingênua."""
    _, frame = matrix_frame(fixture.A)
    origin = frame.coords(0, 0)
    closure = {b.word for b in closure_codes(origin, fixture.base, fixture.A, n_from, n_to)}
    naive = naive_codes(origin, fixture.base, fixture.A, n_from, n_to)
    return {'closure': closure, 'naive': naive}


def fixture_pieces(fixture: CounterexampleFixture) -> List[PlanarParallelogram]:
    return [fixture.p1, fixture.p2, fixture.p3]


__all__ = [
    'CounterexampleFixture',
    'build_counterexample',
    'origin_codings',
    'fixture_pieces',
    'torus_touch',
    'torus_overlap',
]
