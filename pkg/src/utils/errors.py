"""Módulo de exceções da aplicação."""


class ToruxError(Exception):
    """Erro base do torux."""

    exit_code = 1


class DivisionByZeroError(ToruxError, ZeroDivisionError):
    """Divisão por zero em Q(sqrt(D))."""


class MismatchedRadicandError(ToruxError, ValueError):
    """Operação entre surds com radicandos diferentes."""


class InvalidDeterminantError(ToruxError, ValueError):
    """Matriz com determinante diferente de +1/-1."""


class NotHyperbolicError(ToruxError, ValueError):
    """Matriz não hiperbólica."""

    exit_code = 3


class RationalInputError(ToruxError, ValueError):
    """Entrada racional onde se espera irracional quadrático."""


class ParseError(ToruxError, ValueError):
    """Texto de entrada mal formado."""

    exit_code = 2


class NotConjugateError(ToruxError, ValueError):
    """Matrizes não conjugadas."""


class ParityViolationError(ToruxError, ValueError):
    """B e t com paridades diferentes."""


class DiscriminantMismatchError(ToruxError, ValueError):
    """Discriminante incompatível com traço e determinante."""


class DetGNotOneError(ToruxError, ValueError):
    """Diagrama exige det(g) = 1."""


class RationalSlopeError(ToruxError, ValueError):
    """Direção com inclinação racional."""


class DegenerateArcError(ToruxError, ValueError):
    """Arco que não contém o ponto no interior."""


class ConditionIViolationError(ToruxError, ValueError):
    """Partição que não satisfaz a condição I."""


class InvalidGraphError(ToruxError, ValueError):
    """Grafo de transição inválido."""


class OutOfRangeError(ToruxError, ValueError):
    """Valor fora do intervalo permitido."""


class ConstructionWindowTooSmallError(ToruxError, ValueError):
    """Refinamento insuficiente para a construção."""


class InvariantViolationError(ToruxError, AssertionError):
    """Verificação exata de pós-condição falhou."""

    exit_code = 4


__all__ = [
    'ToruxError',
    'DivisionByZeroError',
    'MismatchedRadicandError',
    'InvalidDeterminantError',
    'NotHyperbolicError',
    'RationalInputError',
    'ParseError',
    'NotConjugateError',
    'ParityViolationError',
    'DiscriminantMismatchError',
    'DetGNotOneError',
    'RationalSlopeError',
    'DegenerateArcError',
    'ConditionIViolationError',
    'InvalidGraphError',
    'OutOfRangeError',
    'ConstructionWindowTooSmallError',
    'InvariantViolationError',
]
