"""Modelos de frações contínuas periódicas."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Literal, Sequence, Tuple

from src.utils.errors import InvariantViolationError


def primitive_word(word: Sequence[int]) -> Tuple[int, ...]:
    """Menor palavra w tal que word = w^k."""
    n = len(word)
    for size in range(1, n + 1):
        if n % size == 0 and tuple(word[:size]) * (n // size) == tuple(word):
            return tuple(word[:size])
    return tuple(word)


def minimal_rotation(word: Sequence[int]) -> Tuple[int, ...]:
    """Rotação lexicograficamente mínima."""
    word = tuple(word)
    return min(word[i:] + word[:i] for i in range(len(word)))


@dataclass(frozen=True)
class CFExpansion:
    """
    Fração contínua eventualmente periódica [a0; a1, ..., (p1, ..., pL)].

    Apenas a0 pode ser <= 0; todos os termos seguintes são >= 1.
    """

    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'preperiod', tuple(self.preperiod))
        object.__setattr__(self, 'period', tuple(self.period))
        if not self.period:
            raise InvariantViolationError("Período vazio")
        if any(t < 1 for t in self.period):
            raise InvariantViolationError(f"Termos periódicos precisam ser >= 1: {self.period}")
        if any(t < 1 for t in self.preperiod[1:]):
            raise InvariantViolationError(f"Termos após a0 precisam ser >= 1: {self.preperiod}")
        if not self.preperiod and self.period[0] < 1:
            raise InvariantViolationError("a0 periódico precisa ser >= 1")

    @classmethod
    def canonical(cls, preperiod: Sequence[int], period: Sequence[int]) -> 'CFExpansion':
        """Normaliza: período primitivo e pré-período mais curto possível."""
        pre = list(preperiod)
        per = list(primitive_word(period))
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = [per[-1]] + per[:-1]
        return cls(tuple(pre), tuple(per))

    @property
    def is_purely_periodic(self) -> bool:
        return not self.preperiod

    def term(self, n: int) -> int:
        """n-ésimo quociente parcial (indexação a partir de zero)."""
        if n < len(self.preperiod):
            return self.preperiod[n]
        return self.period[(n - len(self.preperiod)) % len(self.period)]

    def terms(self, n: int) -> List[int]:
        return [self.term(i) for i in range(n)]

    def tail(self, n: int) -> 'CFExpansion':
        """Expansão do quociente completo x_n."""
        if n <= len(self.preperiod):
            return CFExpansion.canonical(self.preperiod[n:], self.period)
        shift = (n - len(self.preperiod)) % len(self.period)
        return CFExpansion.canonical((), self.period[shift:] + self.period[:shift])

    def to_text(self) -> str:
        """Forma "[a0; a1, (p1, p2)]"."""
        periodic = '(' + ', '.join(str(t) for t in self.period) + ')'
        if not self.preperiod:
            return f"[{periodic}]"
        rest = [str(t) for t in self.preperiod[1:]] + [periodic]
        return f"[{self.preperiod[0]}; {', '.join(rest)}]"

    def __str__(self) -> str:
        return self.to_text()


Side = Literal['below', 'above']


@dataclass(frozen=True)
class Convergent:
    """Fração p/q com o lado de aproximação de ω."""

    p: int
    q: int
    side: Side

    def as_pair(self) -> Tuple[int, int]:
        return (self.p, self.q)

    def to_text(self) -> str:
        return f"{self.p}/{self.q}"
