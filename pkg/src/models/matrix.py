"""
Módulo de matrizes inteiras 2x2 com determinante +1/-1.

Reúne hiperbolicidade, dados espectrais exatos (autovalores, inclinações das
direções instável e estável), pontos fixos do automorfismo do toro e os
geradores C1, C2, C3 de GL(2, Z).
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from src.models.surd import Surd, is_square
from src.utils.errors import (
    InvalidDeterminantError,
    InvariantViolationError,
    NotHyperbolicError,
    ParseError,
)

_MATRIX_PATTERN = re.compile(r'^\s*(-?\d+)\s*,\s*(-?\d+)\s*;\s*(-?\d+)\s*,\s*(-?\d+)\s*$')

Entry = Union[int, Fraction, Surd]
Vector = Tuple[Entry, Entry]


@dataclass(frozen=True, slots=True)
class MatZ2:
    """Matriz inteira ((a, b), (c, d)) com det = +1 ou -1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise InvalidDeterminantError(
                f"Determinante {self.det} não é +1/-1 para {self.to_text()}"
            )

    @classmethod
    def parse(cls, text: str) -> 'MatZ2':
        """Lê o formato "a,b;c,d" (linhas separadas por ponto e vírgula)."""
        match = _MATRIX_PATTERN.match(text)
        if not match:
            raise ParseError(f"Matriz mal formada: {text!r} (esperado 'a,b;c,d')")
        return cls(*(int(g) for g in match.groups()))

    @classmethod
    def identity(cls) -> 'MatZ2':
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def discriminant(self) -> int:
        """D = t^2 - 4 det."""
        return self.trace * self.trace - 4 * self.det

    def __matmul__(self, other: 'MatZ2') -> 'MatZ2':
        if not isinstance(other, MatZ2):
            return NotImplemented
        return MatZ2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> 'MatZ2':
        return MatZ2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> 'MatZ2':
        """Inversa inteira (adjunta dividida por det = +1/-1)."""
        k = self.det
        return MatZ2(self.d * k, -self.b * k, -self.c * k, self.a * k)

    def power(self, n: int) -> 'MatZ2':
        """A^n para n inteiro (negativo usa a inversa)."""
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = MatZ2.identity()
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __pow__(self, n: int) -> 'MatZ2':
        return self.power(n)

    def apply(self, vector: Vector) -> Vector:
        """Aplica a matriz a um vetor coluna (x, y)."""
        x, y = vector
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def mobius(self, x: Entry) -> Entry:
        """Ação de Möbius T(C)(x) = (a x + b) / (c x + d)."""
        return (self.a * x + self.b) / (self.c * x + self.d)

    def to_rows(self) -> List[List[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def to_text(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class EigenData:
    """Dados espectrais exatos de uma matriz hiperbólica."""

    lambda_u: Surd
    lambda_s: Surd
    kappa: Surd
    kappa_s: Surd
    D: int


C1 = MatZ2(1, 1, 0, 1)
C2 = MatZ2(0, 1, 1, 0)
C3 = MatZ2(-1, 0, 0, 1)

GENERATORS = {'C1': C1, 'C2': C2, 'C3': C3}


def generators() -> Tuple[MatZ2, MatZ2, MatZ2]:
    """Retorna (C1, C2, C3)."""
    return C1, C2, C3


def evaluate_word(word: Iterable[Tuple[str, int]]) -> MatZ2:
    """Avalia uma palavra [(gerador, expoente), ...] como produto da esquerda para a direita."""
    result = MatZ2.identity()
    for name, exponent in word:
        try:
            generator = GENERATORS[name]
        except KeyError:
            raise ParseError(f"Gerador desconhecido: {name}") from None
        result = result @ generator.power(exponent)
    return result


def is_hyperbolic(A: MatZ2) -> bool:
    """True se D = t^2 - 4 det é positivo e não quadrado."""
    if A.det not in (1, -1):
        raise InvalidDeterminantError(f"Determinante inválido: {A.det}")
    D = A.discriminant
    return D > 0 and not is_square(D)


def require_hyperbolic(A: MatZ2) -> None:
    if not is_hyperbolic(A):
        raise NotHyperbolicError(f"Matriz não hiperbólica: {A.to_text()}")


def eigen_data(A: MatZ2) -> EigenData:
    """
    Calcula autovalores e inclinações exatas.

    Args:
        A: Matriz hiperbólica

    Returns:
        EigenData com lambda_u (|λ| > 1), lambda_s, kappa = (λ - d)/c e kappa_s

    Raises:
        NotHyperbolicError: Se A não é hiperbólica
    """
    require_hyperbolic(A)
    D = A.discriminant
    root = Surd.sqrt(D)
    plus = (root + A.trace) / 2
    minus = (-root + A.trace) / 2
    lam, mu = (plus, minus) if abs(plus) > 1 else (minus, plus)
    if A.c == 0:
        raise InvariantViolationError(f"c = 0 em matriz hiperbólica {A.to_text()}")
    kappa = (lam - A.d) / A.c
    kappa_s = (mu - A.d) / A.c

    checks = [
        (lam * mu == A.det, "λμ = det"),
        (lam + mu == A.trace, "λ + μ = traço"),
        (A.apply((kappa, 1)) == (lam * kappa, lam), "A(κ,1) = λ(κ,1)"),
        (A.apply((kappa_s, 1)) == (mu * kappa_s, mu), "A(κs,1) = μ(κs,1)"),
        (A.c * kappa * kappa + (A.d - A.a) * kappa - A.b == 0, "equação de κ"),
        (abs(mu) < 1, "|μ| < 1"),
    ]
    for ok, label in checks:
        if not ok:
            raise InvariantViolationError(f"Falha em {label} para {A.to_text()}")
    return EigenData(lambda_u=lam, lambda_s=mu, kappa=kappa, kappa_s=kappa_s, D=D)


def fixpoint_det(A: MatZ2) -> int:
    """det(A - I) (número de pontos fixos, a menos do sinal)."""
    return (A.a - 1) * (A.d - 1) - A.b * A.c


def fixpoints(A: MatZ2) -> List[Tuple[Fraction, Fraction]]:
    """
    Lista os pontos fixos de Â em [0, 1)^2.

    Os pontos fixos são (A - I)^(-1) n mod Z^2; basta percorrer n numa caixa
    |det(A - I)| x |det(A - I)|.
    """
    require_hyperbolic(A)
    det = fixpoint_det(A)
    if det == 0:
        raise InvariantViolationError("A - I singular em matriz hiperbólica")
    m = abs(det)
    # adj(A - I) = [[d-1, -b], [-c, a-1]]
    found = set()
    for n1, n2 in itertools.product(range(m), repeat=2):
        x = Fraction((A.d - 1) * n1 - A.b * n2, det)
        y = Fraction(-A.c * n1 + (A.a - 1) * n2, det)
        found.add((x - (x.numerator // x.denominator), y - (y.numerator // y.denominator)))
    return sorted(found)


def fixpoint_count(A: MatZ2) -> Tuple[int, List[Tuple[Fraction, Fraction]]]:
    """
    Conta os pontos fixos de Â e devolve seus representantes.

    Returns:
        (|det(A - I)|, pontos fixos em [0,1)^2)
    """
    points = fixpoints(A)
    count = abs(fixpoint_det(A))
    if len(points) != count:
        raise InvariantViolationError(
            f"Contagem de pontos fixos inconsistente: {len(points)} != {count}"
        )
    return count, points


__all__ = [
    'MatZ2',
    'EigenData',
    'C1',
    'C2',
    'C3',
    'GENERATORS',
    'generators',
    'evaluate_word',
    'is_hyperbolic',
    'require_hyperbolic',
    'eigen_data',
    'fixpoint_det',
    'fixpoints',
    'fixpoint_count',
]
