"""Testes para a hierarquia de erros."""
import pytest

from src.utils.errors import (
    ConditionIViolationError,
    DivisionByZeroError,
    InvariantViolationError,
    NotHyperbolicError,
    ParseError,
    ToruxError,
)


@pytest.mark.parametrize('error, code', [
    (ParseError, 2),
    (NotHyperbolicError, 3),
    (InvariantViolationError, 4),
    (ConditionIViolationError, 1),
    (ToruxError, 1),
])
def test_exit_codes(error, code):
    """Testa o código de saída de cada erro."""
    assert error.exit_code == code


def test_builtin_bases():
    """Testa as bases nativas."""
    assert issubclass(DivisionByZeroError, ZeroDivisionError)
    assert issubclass(ParseError, ValueError)
    assert issubclass(InvariantViolationError, AssertionError)
