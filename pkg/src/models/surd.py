"""
Módulo de aritmética exata no corpo quadrático real Q(sqrt(D)).

Um Surd representa o valor a + b*sqrt(D) com a, b racionais e D inteiro
positivo que não é quadrado perfeito. Operações entre radicandos diferentes
são rejeitadas; o radicando não é reduzido à forma livre de quadrados.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Literal, Union

from src.utils.errors import DivisionByZeroError, MismatchedRadicandError, ParseError

RationalLike = Union[int, Fraction]
Operand = Union['Surd', int, Fraction]

_TEXT_PATTERN = re.compile(
    r'^\s*(-?\d+)/(\d+)\s*([+-])\s*(\d+)/(\d+)\*sqrt\((\d+)\)\s*$'
)


def is_square(n: int) -> bool:
    """Retorna True se n é um quadrado perfeito não negativo."""
    return n >= 0 and isqrt(n) ** 2 == n


def _fraction_sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True, eq=False, slots=True)
class Surd:
    """Elemento exato a + b*sqrt(D) de Q(sqrt(D))."""

    a: Fraction
    b: Fraction
    D: int

    def __post_init__(self):
        object.__setattr__(self, 'a', Fraction(self.a))
        object.__setattr__(self, 'b', Fraction(self.b))
        if not isinstance(self.D, int) or self.D <= 0 or is_square(self.D):
            raise ValueError(f"Radicando inválido (precisa ser positivo e não quadrado): {self.D}")

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, D: int) -> 'Surd':
        """Construtor sem validação para uso interno."""
        obj = object.__new__(cls)
        object.__setattr__(obj, 'a', a)
        object.__setattr__(obj, 'b', b)
        object.__setattr__(obj, 'D', D)
        return obj

    @classmethod
    def rational(cls, value: RationalLike, D: int) -> 'Surd':
        """Cria o Surd racional value + 0*sqrt(D)."""
        return cls(Fraction(value), Fraction(0), D)

    @classmethod
    def sqrt(cls, D: int) -> 'Surd':
        """Retorna sqrt(D)."""
        return cls(Fraction(0), Fraction(1), D)

    @classmethod
    def parse(cls, text: str) -> 'Surd':
        """Lê a forma textual canônica "p/r + q/r*sqrt(D)"."""
        match = _TEXT_PATTERN.match(text)
        if not match:
            raise ParseError(f"Surd mal formado: {text!r}")
        p, r, op, q, r2, D = match.groups()
        b = Fraction(int(q), int(r2))
        return cls(Fraction(int(p), int(r)), b if op == '+' else -b, int(D))

    # Coerção

    def _coerce(self, other: Operand) -> 'Surd':
        if isinstance(other, Surd):
            if other.D != self.D:
                raise MismatchedRadicandError(
                    f"Radicandos diferentes: {self.D} e {other.D}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Surd._raw(Fraction(other), Fraction(0), self.D)
        return NotImplemented

    # Aritmética

    def __add__(self, other: Operand) -> 'Surd':
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Surd._raw(self.a + o.a, self.b + o.b, self.D)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> 'Surd':
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Surd._raw(self.a - o.a, self.b - o.b, self.D)

    def __rsub__(self, other: Operand) -> 'Surd':
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: Operand) -> 'Surd':
        if isinstance(other, (int, Fraction)):
            return Surd._raw(self.a * other, self.b * other, self.D)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Surd._raw(
            self.a * o.a + self.b * o.b * self.D,
            self.a * o.b + self.b * o.a,
            self.D,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> 'Surd':
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZeroError("Divisão por zero")
            return Surd._raw(self.a / other, self.b / other, self.D)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Operand) -> 'Surd':
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self) -> 'Surd':
        return Surd._raw(-self.a, -self.b, self.D)

    def __pos__(self) -> 'Surd':
        return self

    def __abs__(self) -> 'Surd':
        return -self if self.sign() < 0 else self

    def __pow__(self, exponent: int) -> 'Surd':
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Surd._raw(Fraction(1), Fraction(0), self.D)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> 'Surd':
        """Retorna 1/x; levanta DivisionByZeroError para x = 0."""
        n = self.norm()
        if n == 0:
            raise DivisionByZeroError("Inverso de zero")
        return Surd._raw(self.a / n, -self.b / n, self.D)

    # Estrutura do corpo

    def conjugate(self) -> 'Surd':
        """Conjugado de Galois a - b*sqrt(D)."""
        return Surd._raw(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        """Norma a^2 - b^2*D (racional)."""
        return self.a * self.a - self.b * self.b * self.D

    def trace(self) -> Fraction:
        """Traço 2a."""
        return 2 * self.a

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_radicand(self, D: int) -> 'Surd':
        """Reexpressa o valor sobre o radicando D (D*self.D precisa ser quadrado)."""
        if D == self.D:
            return self
        if self.b == 0:
            return Surd(self.a, Fraction(0), D)
        product = self.D * D
        if not is_square(product):
            raise MismatchedRadicandError(
                f"sqrt({self.D}) não pertence a Q(sqrt({D}))"
            )
        # sqrt(self.D) = (sqrt(self.D * D) / D) * sqrt(D)
        return Surd(self.a, self.b * Fraction(isqrt(product), D), D)

    # Ordem

    def sign(self) -> int:
        """Sinal exato do valor real (-1, 0, +1)."""
        sa = _fraction_sign(self.a)
        sb = _fraction_sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # sinais opostos: decide pelo maior entre a^2 e b^2*D (nunca iguais)
        return sa if self.a * self.a > self.b * self.b * self.D else sb

    def floor(self) -> int:
        """Maior inteiro n com n <= x, sem ponto flutuante."""
        a, b = self.a, self.b
        if b == 0:
            return math.floor(a)
        r = a.denominator * b.denominator
        p = a.numerator * b.denominator
        q = b.numerator * a.denominator
        s = isqrt(q * q * self.D)
        # q*sqrt(D) é irracional, logo está estritamente entre s e s+1 em módulo
        floor_q_root = s if q > 0 else -s - 1
        return (p + floor_q_root) // r

    def ceil(self) -> int:
        return -((-self).floor())

    def _compare(self, other: Operand) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"Comparação não suportada com {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other: Operand) -> bool:
        return self._compare(other) < 0

    def __le__(self, other: Operand) -> bool:
        return self._compare(other) <= 0

    def __gt__(self, other: Operand) -> bool:
        return self._compare(other) > 0

    def __ge__(self, other: Operand) -> bool:
        return self._compare(other) >= 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Surd):
            if other.D != self.D:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    # Conversões

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def to_text(self) -> str:
        """Forma canônica "p/r + q/r*sqrt(D)"."""
        r = math.lcm(self.a.denominator, self.b.denominator)
        p = self.a.numerator * (r // self.a.denominator)
        q = self.b.numerator * (r // self.b.denominator)
        op = '+' if q >= 0 else '-'
        return f"{p}/{r} {op} {abs(q)}/{r}*sqrt({self.D})"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Surd({self.to_text()!r})"


ArithOp = Literal['add', 'sub', 'mul', 'div']


def arith(x: Surd, y: Surd, op: ArithOp) -> Surd:
    """Operação de corpo entre dois Surds do mesmo radicando."""
    if x.D != y.D:
        raise MismatchedRadicandError(f"Radicandos diferentes: {x.D} e {y.D}")
    if op == 'add':
        return x + y
    if op == 'sub':
        return x - y
    if op == 'mul':
        return x * y
    if op == 'div':
        return x / y
    raise ValueError(f"Operação desconhecida: {op}")


def sign(x: Surd) -> int:
    """Sinal exato de x."""
    return x.sign()


def floor(x: Surd) -> int:
    """Parte inteira exata de x."""
    return x.floor()


def galois_conjugate(x: Surd) -> Surd:
    """Conjugado de Galois de x."""
    return x.conjugate()


def coerce(value: Operand, D: int) -> Surd:
    """Converte inteiro/fração em Surd sobre D; Surds passam intactos."""
    if isinstance(value, Surd):
        if value.D != D:
            raise MismatchedRadicandError(f"Radicandos diferentes: {value.D} e {D}")
        return value
    return Surd._raw(Fraction(value), Fraction(0), D)


__all__ = [
    'Surd',
    'arith',
    'sign',
    'floor',
    'galois_conjugate',
    'coerce',
    'is_square',
]
