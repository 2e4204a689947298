"""Modelos de conjugação: formas quadráticas binárias e testemunhas."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from src.models.matrix import MatZ2, evaluate_word

Word = Tuple[Tuple[str, int], ...]


@dataclass(frozen=True)
class QuadraticForm:
    """Forma A x^2 + B xy + C y^2."""

    A: int
    B: int
    C: int

    @property
    def disc(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def evaluate(self, x: int, y: int) -> int:
        return self.A * x * x + self.B * x * y + self.C * y * y

    def compose(self, h: MatZ2) -> 'QuadraticForm':
        """Forma z -> q(h z)."""
        p, r, s, t = h.a, h.b, h.c, h.d
        return QuadraticForm(
            self.A * p * p + self.B * p * s + self.C * s * s,
            2 * self.A * p * r + self.B * (p * t + r * s) + 2 * self.C * s * t,
            self.A * r * r + self.B * r * t + self.C * t * t,
        )

    def pullback(self, g: MatZ2) -> 'QuadraticForm':
        """Ação g*q: z -> q(g^-1 z)."""
        return self.compose(g.inverse())

    def scaled(self, k: int) -> 'QuadraticForm':
        return QuadraticForm(k * self.A, k * self.B, k * self.C)

    def to_text(self) -> str:
        return f"{self.A}x^2 + {self.B}xy + {self.C}y^2"


def simplify_word(word: List[Tuple[str, int]]) -> Word:
    """Funde potências adjacentes; C2 e C3 são involuções."""
    out: List[Tuple[str, int]] = []
    for name, exponent in word:
        if out and out[-1][0] == name:
            exponent += out.pop()[1]
        if name in ('C2', 'C3'):
            exponent %= 2
        if exponent:
            out.append((name, exponent))
    return tuple(out)


def invert_word(word: Word) -> Word:
    return simplify_word([(name, -exponent) for name, exponent in reversed(word)])


@dataclass(frozen=True)
class ConjugacyWitness:
    """Palavra em C1, C2, C3 cuja matriz C satisfaz B = C A C^-1."""

    word: Word
    matrix: MatZ2

    @classmethod
    def from_word(cls, word: List[Tuple[str, int]]) -> 'ConjugacyWitness':
        simplified = simplify_word(word)
        return cls(simplified, evaluate_word(simplified))

    @property
    def det(self) -> int:
        return self.matrix.det

    def word_tokens(self) -> List[str]:
        """Palavra como lista de fatores, ex.: ['C2', 'C1^-2']."""
        return [name if e == 1 else f"{name}^{e}" for name, e in self.word]

    def word_text(self) -> str:
        return ''.join(self.word_tokens()) or 'I'

    def then(self, other: 'ConjugacyWitness') -> 'ConjugacyWitness':
        """Produto self · other."""
        return ConjugacyWitness.from_word(list(self.word) + list(other.word))
