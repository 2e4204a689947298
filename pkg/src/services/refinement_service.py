"""
Serviço de refinamento de partições pré-Markov.

O multigrafo Γ, os refinamentos (i) ÂP_i ∩ P_j e (ii) Â^(-1)P_i ∩ P_j, e o
predicado de fechamento de admissibilidade sobre cadeias de arestas.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple

from src.models.matrix import MatZ2
from src.models.partition import Edge, PlanarParallelogram, TorusPartition, TransitionGraph
from src.services.lattice_service import matrix_frame
from src.services.validator_service import PartitionValidator
from src.utils.errors import ConditionIViolationError
from src.utils.logger import Logger

logger = Logger(__name__)

DIRECTIONS = ('forward', 'backward')


def require_condition_one(partition: TorusPartition, A: MatZ2) -> None:
    """Levanta ConditionIViolationError quando a partição não é preMp para Â."""
    result = PartitionValidator().validate(partition, 'preMp', A)
    if not result.is_valid:
        raise ConditionIViolationError(
            f"Partição não é preMp para {A.to_text()}: {'; '.join(result.errors)}"
        )


def _scales(A: MatZ2, direction: str):
    eig, _ = matrix_frame(A)
    if direction == 'forward':
        return eig.lambda_u, eig.lambda_s
    if direction == 'backward':
        return 1 / eig.lambda_u, 1 / eig.lambda_s
    raise ValueError(f"Direção desconhecida: {direction}")


def _overlaps(partition: TorusPartition, A: MatZ2, direction: str) -> List[Tuple[Edge, PlanarParallelogram]]:
    """Pares (aresta i -> j por w, peça (ÂΠ_i ∩ (Π_j + w)) - w) em ordem determinística."""
    lam, mu = _scales(A, direction)
    frame = partition.frame
    found = []
    for i, piece in enumerate(partition.pieces):
        image = piece.scaled(lam, mu)
        for j, target in enumerate(partition.pieces):
            box = (
                image.u0 - target.u1, image.u1 - target.u0,
                image.s0 - target.s1, image.s1 - target.s0,
            )
            for hit in frame.lattice_in_box(*box):
                overlap = image.intersection(target.translated(hit.c1, hit.c2))
                if overlap is None:
                    continue
                found.append((Edge(i, j, hit.vector), overlap.translated(-hit.c1, -hit.c2)))
    found.sort(key=lambda pair: (pair[0].source, pair[0].target, pair[0].shift))
    return found


def transition_graph(partition: TorusPartition, A: MatZ2) -> TransitionGraph:
    """
    Multigrafo Γ: uma aresta i -> j rotulada por (m, n) para cada translação
    com int(AΠ_i ∩ (Π_j + (m, n))) != ∅.

    Raises:
        ConditionIViolationError: Se a partição não satisfaz a condição I
    """
    require_condition_one(partition, A)
    edges = [edge for edge, _ in _overlaps(partition, A, 'forward')]
    logger.debug(f"Γ com {len(partition)} vértices e {len(edges)} arestas")
    return TransitionGraph(len(partition), edges)


def refine(partition: TorusPartition, A: MatZ2, direction: str = 'forward') -> TorusPartition:
    """
    Refinamento (i) (forward: ÂP_i ∩ P_j) ou (ii) (backward: Â^(-1)P_i ∩ P_j).

    As peças saem na ordem das arestas de Γ, de modo que a peça k
    corresponde à k-ésima aresta.

    Raises:
        ConditionIViolationError: Se a partição não satisfaz a condição I
    """
    require_condition_one(partition, A)
    pieces = tuple(piece for _, piece in _overlaps(partition, A, direction))
    refined = TorusPartition(pieces, 'strMp', partition.frame)
    logger.debug(f"Refinamento {direction}: {len(partition)} -> {len(refined)} peças")
    return refined


def refine_iterated(partition: TorusPartition, A: MatZ2, directions: Sequence[str]) -> TorusPartition:
    """Aplica os refinamentos na ordem dada."""
    for direction in directions:
        partition = refine(partition, A, direction)
    return partition


def admissibility_failures(partition: TorusPartition, A: MatZ2) -> List[str]:
    """
    Verifica o passo principal: para arestas i -> j (w1) e j -> h (w2),
    Â²P_i° ∩ ÂP_j° ∩ P_h° != ∅, isto é, A(AΠ_i ∩ (Π_j + w1)) encontra
    Π_h + A w1 + w2 com interior não vazio.
    """
    eig, _ = matrix_frame(A)
    frame = partition.frame
    overlaps = _overlaps(partition, A, 'forward')
    by_source = {}
    for edge, _ in overlaps:
        by_source.setdefault(edge.source, []).append(edge)

    failures = []
    for first, _ in overlaps:
        region = partition.pieces[first.source].scaled(eig.lambda_u, eig.lambda_s)
        w1_u, w1_s = frame.lattice_coords(first.shift)
        region = region.intersection(partition.pieces[first.target].translated(w1_u, w1_s))
        image = region.scaled(eig.lambda_u, eig.lambda_s)
        for second in by_source.get(first.target, []):
            v_u, v_s = frame.lattice_coords(A.apply(first.shift))
            w2_u, w2_s = frame.lattice_coords(second.shift)
            target = partition.pieces[second.target].translated(v_u + w2_u, v_s + w2_s)
            if image.intersection(target) is None:
                failures.append(
                    f"Cadeia {first.source} -> {first.target} -> {second.target} "
                    f"({first.shift}, {second.shift}) sem interseção"
                )
    return failures


__all__ = [
    'DIRECTIONS',
    'require_condition_one',
    'transition_graph',
    'refine',
    'refine_iterated',
    'admissibility_failures',
]
