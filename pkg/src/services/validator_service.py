"""
Serviço de validação de partições do toro.

Todas as verificações são predicados exatos em aritmética de surds sobre o
conjunto finito de translações relevantes; violações viram entradas do
relatório, nunca exceções.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

from src.models.matrix import MatZ2, fixpoints
from src.models.partition import PlanarParallelogram, TorusPartition
from src.services.lattice_service import matrix_frame
from src.utils.logger import Logger

FixPoint = Tuple[Fraction, Fraction]


@dataclass
class ValidationResult:
    """Resultado da validação."""
    is_valid: bool
    errors: List[str]
    warnings: List[str]
    checks: Dict[str, bool] = field(default_factory=dict)


@dataclass
class BoundaryFixpoints:
    """Pontos fixos (representantes em [0,1)^2) sobre a fronteira estável/instável."""
    stable: Set[FixPoint]
    unstable: Set[FixPoint]

    @property
    def vertices(self) -> Set[FixPoint]:
        return self.stable & self.unstable


class PartitionValidator:
    """Validador de qMp, preMp e strMp."""

    def __init__(self):
        """Inicializa o serviço."""
        self.logger = Logger(__name__)

    def validate(
        self,
        partition: TorusPartition,
        kind: Optional[str] = None,
        matrix: Optional[MatZ2] = None,
        vertex: bool = False,
        edge: bool = False,
    ) -> ValidationResult:
        """
        Valida uma partição.

        Args:
            partition: Partição a validar
            kind: 'qMp', 'preMp' ou 'strMp' (padrão: o da própria partição)
            matrix: A que define as condições I e II
            vertex: Exige a condição III (ponto fixo em lado estável e instável)
            edge: Exige pontos fixos distintos nos segmentos estável e instável

        Returns:
            ValidationResult com as verificações individuais em `checks`
        """
        kind = kind or partition.kind
        errors: List[str] = []
        warnings: List[str] = []
        checks: Dict[str, bool] = {}

        checks['multi_piece'] = self._validate_piece_count(partition, errors)
        checks['shape'] = self._validate_shapes(partition, errors)
        checks['disjoint'] = self._validate_disjoint(partition, errors)
        checks['area'] = self._validate_area(partition, errors)

        if kind in ('preMp', 'strMp') or vertex or edge:
            if matrix is None:
                errors.append(f"{kind} exige a matriz A")
                checks['matrix'] = False
            elif not self._validate_frame(partition, matrix, errors):
                checks['matrix'] = False
            else:
                checks['matrix'] = True
                if kind in ('preMp', 'strMp'):
                    checks['condition_I'] = self._validate_condition_one(partition, matrix, errors)
                if kind == 'strMp':
                    checks['condition_II'] = self._validate_condition_two(partition, matrix, errors)
                if vertex or edge:
                    boundary = boundary_fixpoints(partition, matrix)
                    if vertex:
                        checks['condition_III'] = bool(boundary.vertices)
                        if not boundary.vertices:
                            errors.append("Condição III: nenhum ponto fixo em lado estável e instável")
                    if edge:
                        distinct = any(f != g for f in boundary.stable for g in boundary.unstable)
                        checks['edge_fixpoints'] = distinct
                        if not distinct:
                            errors.append("Tipo aresta: faltam pontos fixos distintos nos segmentos")

        for message in errors:
            self.logger.warning(f"Validação {kind}: {message}")
        return ValidationResult(len(errors) == 0, errors, warnings, checks)

    def _validate_piece_count(self, partition: TorusPartition, errors: List[str]) -> bool:
        if len(partition) == 0:
            errors.append("Partição sem peças")
            return False
        if len(partition) == 1:
            errors.append("Uma única peça não forma qMp (argumento do canto)")
            return False
        return True

    def _validate_shapes(self, partition: TorusPartition, errors: List[str]) -> bool:
        """Projeção injetiva: nenhum w != 0 com int(Π) ∩ int(Π + w) != ∅."""
        frame = partition.frame
        ok = True
        for i, piece in enumerate(partition.pieces):
            for hit in frame.lattice_in_box(-piece.u_len, piece.u_len, -piece.s_len, piece.s_len):
                if hit.vector != (0, 0):
                    errors.append(f"Peça {i} não é injetiva no toro: translação {hit.vector}")
                    ok = False
        return ok

    def _validate_disjoint(self, partition: TorusPartition, errors: List[str]) -> bool:
        frame = partition.frame
        ok = True
        pieces = partition.pieces
        for i in range(len(pieces)):
            for j in range(i + 1, len(pieces)):
                a, b = pieces[i], pieces[j]
                for hit in frame.lattice_in_box(a.u0 - b.u1, a.u1 - b.u0, a.s0 - b.s1, a.s1 - b.s0):
                    errors.append(f"Interiores de Π_{i} e Π_{j} + {hit.vector} se intersectam")
                    ok = False
        return ok

    def _validate_area(self, partition: TorusPartition, errors: List[str]) -> bool:
        area = partition.area()
        if area != 1:
            errors.append(f"Área total {area} != 1")
            return False
        return True

    def _validate_frame(self, partition: TorusPartition, matrix: MatZ2, errors: List[str]) -> bool:
        eig, _ = matrix_frame(matrix)
        if partition.frame.k1 != eig.kappa or partition.frame.k2 != eig.kappa_s:
            errors.append(f"Frame da partição não é o de {matrix.to_text()}")
            return False
        return True

    def _validate_condition_one(self, partition: TorusPartition, matrix: MatZ2, errors: List[str]) -> bool:
        """
        Lados contrativos de AΠ_i sobre lados contrativos de algum Π_j + w e
        lados expansivos de Π_i sobre lados expansivos de algum AΠ_j + w.
        """
        eig, _ = matrix_frame(matrix)
        frame = partition.frame
        pieces = partition.pieces
        images = [p.scaled(eig.lambda_u, eig.lambda_s) for p in pieces]
        ok = True

        for i, image in enumerate(images):
            for u_side in (image.u0, image.u1):
                if not _stable_side_covered(frame, u_side, image.s0, image.s1, pieces):
                    errors.append(f"Condição I: lado estável u = {u_side} de AΠ_{i} fora da fronteira")
                    ok = False
        for i, piece in enumerate(pieces):
            for s_side in (piece.s0, piece.s1):
                if not _unstable_side_covered(frame, s_side, piece.u0, piece.u1, images):
                    errors.append(f"Condição I: lado instável s = {s_side} de Π_{i} fora de AΠ")
                    ok = False
        return ok

    def _validate_condition_two(self, partition: TorusPartition, matrix: MatZ2, errors: List[str]) -> bool:
        """No máximo uma translação w com int(AΠ_i ∩ (Π_j + w)) != ∅ por par."""
        eig, _ = matrix_frame(matrix)
        frame = partition.frame
        ok = True
        for i, piece in enumerate(partition.pieces):
            image = piece.scaled(eig.lambda_u, eig.lambda_s)
            for j, target in enumerate(partition.pieces):
                shifts = [
                    hit.vector
                    for hit in frame.lattice_in_box(
                        image.u0 - target.u1, image.u1 - target.u0,
                        image.s0 - target.s1, image.s1 - target.s0,
                    )
                ]
                if len(shifts) > 1:
                    errors.append(f"Condição II: AΠ_{i} encontra Π_{j} em {len(shifts)} translações {shifts}")
                    ok = False
        return ok


def _stable_side_covered(frame, u_side, s0, s1, pieces) -> bool:
    for target in pieces:
        for u_target in (target.u0, target.u1):
            w = frame.lattice_with_c1(u_side - u_target)
            if w is None:
                continue
            _, ws = frame.lattice_coords(w)
            if target.s0 + ws <= s0 and s1 <= target.s1 + ws:
                return True
    return False


def _unstable_side_covered(frame, s_side, u0, u1, images) -> bool:
    for image in images:
        for s_target in (image.s0, image.s1):
            w = frame.lattice_with_c2(s_side - s_target)
            if w is None:
                continue
            wu, _ = frame.lattice_coords(w)
            if image.u0 + wu <= u0 and u1 <= image.u1 + wu:
                return True
    return False


def boundary_fixpoints(partition: TorusPartition, matrix: MatZ2) -> BoundaryFixpoints:
    """Pontos fixos de Â sobre lados estáveis e sobre lados instáveis das peças."""
    frame = partition.frame
    stable: Set[FixPoint] = set()
    unstable: Set[FixPoint] = set()
    for f in fixpoints(matrix):
        for piece in partition.pieces:
            for u, s in frame.points_in_box(piece.u0, piece.u1, piece.s0, piece.s1, offset=f):
                if u == piece.u0 or u == piece.u1:
                    stable.add(f)
                if s == piece.s0 or s == piece.s1:
                    unstable.add(f)
    return BoundaryFixpoints(stable, unstable)


def validate_partition(
    partition: TorusPartition,
    kind: Optional[str] = None,
    matrix: Optional[MatZ2] = None,
    vertex: bool = False,
    edge: bool = False,
) -> ValidationResult:
    """Atalho funcional para PartitionValidator().validate."""
    return PartitionValidator().validate(partition, kind, matrix, vertex, edge)


def piece_is_injective(frame, piece: PlanarParallelogram) -> bool:
    return all(
        hit.vector == (0, 0)
        for hit in frame.lattice_in_box(-piece.u_len, piece.u_len, -piece.s_len, piece.s_len)
    )


__all__ = [
    'ValidationResult',
    'BoundaryFixpoints',
    'PartitionValidator',
    'boundary_fixpoints',
    'validate_partition',
    'piece_is_injective',
]
