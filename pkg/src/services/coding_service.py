"""
Serviço de codificação de pontos do toro por partições de Markov.

Para uma strMp P e o automorfismo Â, um ponto x recebe as palavras
(a_n) com x ∈ clos(⋂ Â^(-n) P°_{a_n}); a codificação ingênua só exige
Â^n x ∈ P_{a_n} para cada n separadamente. A decodificação reconstrói o
retângulo aninhado de uma janela seguindo as translações das arestas de Γ.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Set, Tuple, Union

from src.models.matrix import MatZ2
from src.models.partition import PlanarParallelogram, TorusPartition, TransitionGraph
from src.models.surd import Surd, coerce
from src.services.lattice_service import Frame, matrix_frame
from src.services.partition_service import markov_dynamics
from src.services.refinement_service import transition_graph
from src.utils.errors import InvalidGraphError
from src.utils.logger import Logger

logger = Logger(__name__)

Scalar = Union[int, Fraction, Surd]
LatticePoint = Tuple[int, int]
FramePoint = Tuple[Surd, Surd]
Word = Tuple[int, ...]


@dataclass(frozen=True)
class CodeBranch:
    """Palavra de uma janela com as translações de cada símbolo e a região puxada de volta."""

    word: Word
    shifts: Tuple[LatticePoint, ...]
    region: PlanarParallelogram


def _powers(A: MatZ2, n: int) -> Tuple[Surd, Surd]:
    eig, _ = matrix_frame(A)
    return eig.lambda_u ** n, eig.lambda_s ** n


def _candidates(
    partition: TorusPartition,
    A: MatZ2,
    point: FramePoint,
    n: int,
) -> Iterator[Tuple[int, LatticePoint, PlanarParallelogram]]:
    """
    Pares (j, v) com Â^n x no fecho de Π_j + v, junto com Â^(-n)(Π_j + v)
    no mesmo levantamento de x.
    """
    frame = partition.frame
    lam_n, mu_n = _powers(A, n)
    xu, xs = point[0] * lam_n, point[1] * mu_n
    for j, piece in enumerate(partition.pieces):
        box = (xu - piece.u1, xu - piece.u0, xs - piece.s1, xs - piece.s0)
        for hit in frame.lattice_in_box(*box, closed=True):
            lifted = piece.translated(hit.c1, hit.c2)
            yield j, hit.vector, lifted.scaled(1 / lam_n, 1 / mu_n)


def closure_codes(
    point: FramePoint,
    partition: TorusPartition,
    A: MatZ2,
    n_from: int,
    n_to: int,
) -> List[CodeBranch]:
    """
    Todas as palavras (a_n), n_from <= n <= n_to, com
    x ∈ clos(⋂ Â^(-n) P°_{a_n}).

    Busca em profundidade: cada símbolo acrescenta um retângulo puxado de
    volta e o ramo sobrevive enquanto a interseção tiver interior.
    """
    if n_from > n_to:
        raise ValueError(f"Janela vazia: [{n_from}, {n_to}]")
    levels = [list(_candidates(partition, A, point, n)) for n in range(n_from, n_to + 1)]
    branches: List[CodeBranch] = []

    def extend(depth: int, word: Word, shifts: Tuple[LatticePoint, ...], region: Optional[PlanarParallelogram]):
        if depth == len(levels):
            branches.append(CodeBranch(word, shifts, region))
            return
        for j, vector, rect in levels[depth]:
            narrowed = rect if region is None else region.intersection(rect)
            if narrowed is None:
                continue
            extend(depth + 1, word + (j,), shifts + (vector,), narrowed)

    extend(0, (), (), None)
    branches.sort(key=lambda b: (b.word, b.shifts))
    return branches


def naive_codes(
    point: FramePoint,
    partition: TorusPartition,
    A: MatZ2,
    n_from: int,
    n_to: int,
) -> Set[Word]:
    """Palavras com Â^n x ∈ P_{a_n} para cada n, sem exigir interior comum."""
    symbols = []
    for n in range(n_from, n_to + 1):
        symbols.append(sorted({j for j, _, _ in _candidates(partition, A, point, n)}))
    return set(itertools.product(*symbols))


def cylinder_pieces(
    point: FramePoint,
    partition: TorusPartition,
    A: MatZ2,
    n_from: int,
    n_to: int,
) -> List[PlanarParallelogram]:
    """Peças do refinamento iterado ∨ Â^(-n) P cujo fecho contém o ponto."""
    return sorted(
        {branch.region for branch in closure_codes(point, partition, A, n_from, n_to)},
        key=lambda r: (r.u0, r.s0),
    )


def torus_point(partition: TorusPartition, x: Sequence[Scalar]) -> FramePoint:
    """Coordenadas no frame de um ponto padrão do toro."""
    return partition.frame.coords(x[0], x[1])


def torus_image(A: MatZ2, x: Sequence[Scalar], D: int) -> Tuple[Surd, Surd]:
    """Âx reduzido a [0, 1)^2."""
    y = A.apply((coerce(x[0], D), coerce(x[1], D)))
    return tuple(v - v.floor() for v in y)


def encode_point(
    x: Sequence[Scalar],
    partition: TorusPartition,
    A: MatZ2,
    N: int,
) -> List[Word]:
    """
    Palavras de comprimento 2N + 1 (n = -N..N) admissíveis para x pela
    regra do fecho; ponto genérico tem exatamente uma.

    Args:
        x: Ponto em coordenadas padrão
        partition: strMp de Â
        A: Matriz hiperbólica (a dinâmica usada é ±A com λ > 0)
        N: Raio da janela
    """
    dynamics = markov_dynamics(A)
    point = torus_point(partition, x)
    words = sorted({b.word for b in closure_codes(point, partition, dynamics, -N, N)})
    if len(words) > 1:
        logger.debug(f"Ponto {x} com {len(words)} códigos na janela [-{N}, {N}]")
    return words


def window_shifts(word: Word, center: int, graph: TransitionGraph, A: MatZ2) -> List[LatticePoint]:
    """
    Translações v_n com v_center = 0 e v_{n+1} = A v_n + w(a_n -> a_{n+1}).

    Raises:
        InvalidGraphError: Se algum par consecutivo não tem aresta única em Γ
    """
    if not 0 <= center < len(word):
        raise ValueError(f"Centro {center} fora da janela de comprimento {len(word)}")
    shifts: List[Optional[LatticePoint]] = [None] * len(word)
    shifts[center] = (0, 0)
    A_inv = A.inverse()

    def edge_shift(i: int) -> LatticePoint:
        w = graph.shift_for(word[i], word[i + 1])
        if w is None:
            raise InvalidGraphError(f"Par {word[i]} -> {word[i + 1]} sem aresta única em Γ")
        return w

    for i in range(center, len(word) - 1):
        v = A.apply(shifts[i])
        w = edge_shift(i)
        shifts[i + 1] = (v[0] + w[0], v[1] + w[1])
    for i in range(center, 0, -1):
        w = edge_shift(i - 1)
        v = shifts[i]
        shifts[i - 1] = A_inv.apply((v[0] - w[0], v[1] - w[1]))
    return shifts


def decode(
    word: Word,
    partition: TorusPartition,
    A: MatZ2,
    center: Optional[int] = None,
    graph: Optional[TransitionGraph] = None,
) -> Optional[PlanarParallelogram]:
    """
    Retângulo aninhado ⋂ Â^(-n)(Π_{a_n} + v_n) da janela, no levantamento
    em que o símbolo central é Π_{a_center}; None se o interior é vazio.
    """
    dynamics = markov_dynamics(A)
    center = len(word) // 2 if center is None else center
    graph = graph or transition_graph(partition, dynamics)
    frame = partition.frame
    region: Optional[PlanarParallelogram] = None
    for i, (symbol, v) in enumerate(zip(word, window_shifts(word, center, graph, dynamics))):
        lam_n, mu_n = _powers(dynamics, i - center)
        vu, vs = frame.lattice_coords(v)
        rect = partition.pieces[symbol].translated(vu, vs).scaled(1 / lam_n, 1 / mu_n)
        region = rect if region is None else region.intersection(rect)
        if region is None:
            return None
    return region


def torus_contains(frame: Frame, rect: PlanarParallelogram, point: FramePoint) -> bool:
    """Algum transladado rect + w contém o ponto (fecho)."""
    u, s = point
    return any(
        True for _ in frame.lattice_in_box(u - rect.u1, u - rect.u0, s - rect.s1, s - rect.s0, closed=True)
    )


def check_shift_equivariance(
    x: Sequence[Scalar],
    partition: TorusPartition,
    A: MatZ2,
    N: int,
) -> bool:
    """
    π∘σ = Â∘π na janela: o código de Âx em [-N, N-1] é o código de x
    em [-N+1, N].
    """
    dynamics = markov_dynamics(A)
    y = torus_image(dynamics, x, partition.frame.D)
    words_x = {w[1:] for w in encode_point(x, partition, A, N)}
    words_y = {w[:-1] for w in encode_point(y, partition, A, N)}
    return words_x == words_y


def window_u_diameter_bound(partition: TorusPartition, A: MatZ2, N: int) -> Surd:
    """Cota diam/|λ|^N para o comprimento instável de um retângulo decodificado."""
    eig, _ = matrix_frame(A)
    widest = max(piece.u_len for piece in partition.pieces)
    return widest / abs(eig.lambda_u) ** N


__all__ = [
    'CodeBranch',
    'closure_codes',
    'naive_codes',
    'cylinder_pieces',
    'torus_point',
    'torus_image',
    'encode_point',
    'window_shifts',
    'decode',
    'torus_contains',
    'check_shift_equivariance',
    'window_u_diameter_bound',
]
