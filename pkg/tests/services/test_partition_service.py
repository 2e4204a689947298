"""Testes para a construção e enumeração de preMps."""
from fractions import Fraction

import pytest
from pytest_check import check

from src.models.matrix import MatZ2
from src.services import partition_service
from src.services.lattice_service import fixpoint_lattice_bruteforce, matrix_frame
from src.services.partition_service import (
    ClassCount,
    build_qmp,
    centralizer_generator,
    check_nesting,
    count_classes,
    edge_type_box,
    edge_type_shifts,
    enumerate_vertex_premps,
    markov_dynamics,
    t_configuration,
    type_agreement,
)
from src.services.validator_service import validate_partition
from src.utils.errors import DegenerateArcError, InvariantViolationError, NotHyperbolicError


def _guaranteed(A):
    entries = enumerate_vertex_premps(A, sides=('+u',))
    return sorted((e for e in entries if e.guaranteed), key=lambda e: e.position)


def test_t_configuration_golden(golden):
    """Testa a receita da configuração T e a qMp de duas peças."""
    _, frame = matrix_frame(golden)
    cfg = t_configuration(frame)
    qmp = build_qmp(cfg)
    with check:
        assert len(qmp) == 2
    with check:
        assert qmp.area() == 1
    with check:
        assert validate_partition(qmp, 'qMp').is_valid
    again = t_configuration(frame)
    with check:
        assert (again.t_a, again.t_b) == (cfg.t_a, cfg.t_b)


def test_t_configuration_degenerate_arc(golden):
    """Testa P fora do interior de J."""
    _, frame = matrix_frame(golden)
    with pytest.raises(DegenerateArcError):
        t_configuration(frame, J=(Fraction(0), Fraction(1, 2)))


def test_count_classes_formula(golden, matrix_3211):
    """Testa 2·(soma do período) classes, 2·(comprimento) ilhas."""
    with check:
        assert count_classes(golden, cross_check=False) == ClassCount(2, 2, 0)
    with check:
        assert count_classes(matrix_3211, cross_check=False) == ClassCount(6, 4, 2)
    with check:
        assert count_classes(matrix_3211.inverse(), cross_check=False) == ClassCount(6, 4, 2)
    with pytest.raises(NotHyperbolicError):
        count_classes(MatZ2(1, 1, 0, 1))


@pytest.mark.slow
def test_count_classes_cross_check(golden, matrix_3211):
    """Testa a verificação cruzada pela enumeração e pelo centralizador."""
    golden_count = count_classes(golden, cross_check=True)
    with check:
        assert golden_count.verified and golden_count.shift == 1
    count = count_classes(matrix_3211, cross_check=True)
    with check:
        assert (count.total, count.island, count.parquet) == (6, 4, 2)
    with check:
        assert count.verified and count.shift == 3


def test_count_classes_cross_check_bounded(golden):
    """Testa que a verificação é omitida acima do limite de entradas."""
    assert count_classes(golden, cross_check=True, max_entries=1) == ClassCount(2, 2, 0)


@pytest.mark.slow
def test_count_classes_cross_check_disagrees(golden, monkeypatch):
    """Testa que uma enumeração discordante levanta InvariantViolationError."""
    monkeypatch.setattr(partition_service, 'shift_offset', lambda entries, M: 2)
    with pytest.raises(InvariantViolationError):
        count_classes(golden, cross_check=True)


def test_centralizer_generator(golden, matrix_3211, golden_squared):
    """Testa B com B^2 = A para o gato e a comutação em outros casos."""
    B = centralizer_generator(golden)
    assert B == MatZ2(1, 1, 1, 0)
    assert B @ B == golden
    for A in (matrix_3211, golden_squared, MatZ2(4, 1, 3, 1)):
        C = centralizer_generator(A)
        assert A @ C == C @ A


def test_golden_entries_are_islands(golden):
    """Testa que b = 1 força o tipo ilha em todas as entradas."""
    entries = _guaranteed(golden)
    assert entries
    assert all(e.ptype == 'island' for e in entries)


def test_type_sequence_3211(matrix_3211):
    """Testa o padrão P, I, I ao longo da sequência."""
    entries = _guaranteed(matrix_3211)
    pattern = ''.join('I' if e.ptype == 'island' else 'P' for e in entries)
    assert 'PII' in pattern
    assert 'PP' not in pattern


def test_entries_pass_validation(matrix_3211):
    """Testa que cada entrada garantida é preMp com a condição III."""
    dynamics = markov_dynamics(matrix_3211)
    for entry in _guaranteed(matrix_3211):
        assert validate_partition(entry.geometry, 'preMp', dynamics, vertex=True).is_valid


def test_nesting(golden, matrix_3211):
    """Testa I^u crescente e I^s decrescente."""
    assert check_nesting(_guaranteed(golden))
    assert check_nesting(_guaranteed(matrix_3211))


def test_type_agreement(matrix_3211):
    """Testa que fórmula, comparação geométrica e conectividade concordam."""
    for entry in _guaranteed(matrix_3211)[:6]:
        verdicts = type_agreement(entry)
        with check:
            assert verdicts['formula'] == verdicts['geometric'] == verdicts['connectivity']


def test_other_classes(golden):
    """Testa as quatro classes largas."""
    entries = enumerate_vertex_premps(golden)
    sides = {e.side for e in entries}
    assert sides == {'+u', '-u', '+s', '-s'}
    for entry in entries:
        if entry.guaranteed:
            assert validate_partition(entry.geometry, 'preMp', markov_dynamics(golden), vertex=True).is_valid


def test_edge_type_golden(golden, golden_premp):
    """Testa que com um único ponto fixo só resta a própria preMp."""
    assert edge_type_shifts(golden, golden_premp) == [golden_premp.geometry]


def test_edge_type_golden_squared(golden_squared):
    """Testa a contagem de deslocamentos contra os pontos do reticulado na caixa."""
    base = _guaranteed(golden_squared)[0]
    shifts = edge_type_shifts(golden_squared, base)
    expected = fixpoint_lattice_bruteforce(golden_squared, *edge_type_box(base), include_lattice=False)
    assert shifts[0] == base.geometry
    assert len(shifts) - 1 == expected
    dynamics = markov_dynamics(golden_squared)
    for partition in shifts[1:]:
        assert validate_partition(partition, 'preMp', dynamics, edge=True).is_valid
