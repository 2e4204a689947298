"""Modelos de dinâmica simbólica: sequências, cilindros, subconjuntos de Markov e medidas."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.models.continued_fraction import primitive_word
from src.models.surd import Surd
from src.utils.errors import InvalidGraphError

PERRON_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SymbolSequence:
    """Sequência unilateral eventualmente periódica x_0 x_1 ... em {0, ..., k-1}."""

    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]
    alphabet_size: int = 2

    def __post_init__(self):
        object.__setattr__(self, 'preperiod', tuple(self.preperiod))
        object.__setattr__(self, 'period', tuple(self.period))
        if not self.period:
            raise ValueError("Período vazio")
        if any(not 0 <= s < self.alphabet_size for s in self.preperiod + self.period):
            raise ValueError(f"Símbolo fora do alfabeto de tamanho {self.alphabet_size}")

    @classmethod
    def canonical(cls, preperiod: Sequence[int], period: Sequence[int], alphabet_size: int = 2) -> 'SymbolSequence':
        """Período primitivo e pré-período mínimo."""
        pre = list(preperiod)
        per = list(primitive_word(period))
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = [per[-1]] + per[:-1]
        return cls(tuple(pre), tuple(per), alphabet_size)

    def symbol(self, n: int) -> int:
        if n < 0:
            raise IndexError("Sequência unilateral")
        if n < len(self.preperiod):
            return self.preperiod[n]
        return self.period[(n - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> Tuple[int, ...]:
        return tuple(self.symbol(i) for i in range(n))

    def shift(self) -> 'SymbolSequence':
        """σ(x)_n = x_{n+1}."""
        if self.preperiod:
            return SymbolSequence.canonical(self.preperiod[1:], self.period, self.alphabet_size)
        return SymbolSequence.canonical((), self.period[1:] + self.period[:1], self.alphabet_size)

    def to_dict(self) -> Dict[str, List[int]]:
        return {'preperiod': list(self.preperiod), 'period': list(self.period)}


@dataclass(frozen=True)
class CodingResult:
    """Código de um ponto; pontos diádicos têm um segundo diário."""

    sequence: SymbolSequence
    ambiguous: bool = False
    alternate: Optional[SymbolSequence] = None


@dataclass(frozen=True)
class Cylinder:
    """Conjunto cilíndrico {x : x_i = a para cada (i, a)}."""

    constraints: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        normalized = tuple(sorted((int(i), int(a)) for i, a in self.constraints))
        indices = [i for i, _ in normalized]
        if len(set(indices)) != len(indices):
            raise ValueError(f"Índices repetidos no cilindro: {indices}")
        if any(i < 0 for i in indices):
            raise ValueError("Índices de cilindro unilateral precisam ser >= 0")
        object.__setattr__(self, 'constraints', normalized)

    def __len__(self) -> int:
        return len(self.constraints)

    def contains(self, sequence: SymbolSequence) -> bool:
        return all(sequence.symbol(i) == a for i, a in self.constraints)


@dataclass(frozen=True)
class MeasureSpec:
    """Medida de Bernoulli com probabilidades racionais p_i."""

    probabilities: Tuple[Fraction, ...]

    def __post_init__(self):
        probs = tuple(Fraction(p) for p in self.probabilities)
        if any(p < 0 for p in probs):
            raise ValueError(f"Probabilidades negativas: {probs}")
        if sum(probs) != 1:
            raise ValueError(f"Probabilidades somam {sum(probs)} != 1")
        object.__setattr__(self, 'probabilities', probs)

    @classmethod
    def fair(cls, k: int = 2) -> 'MeasureSpec':
        return cls(tuple(Fraction(1, k) for _ in range(k)))

    @property
    def alphabet_size(self) -> int:
        return len(self.probabilities)


@dataclass(frozen=True)
class MarkovSubset:
    """Subconjunto de Markov: matriz k x k de multiplicidades de pares admissíveis."""

    admissible: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.admissible)
        k = len(rows)
        if k == 0 or any(len(row) != k for row in rows):
            raise InvalidGraphError("Matriz de admissibilidade precisa ser quadrada e não vazia")
        if any(v < 0 for row in rows for v in row):
            raise InvalidGraphError("Multiplicidades negativas")
        object.__setattr__(self, 'admissible', rows)

    @property
    def alphabet_size(self) -> int:
        return len(self.admissible)

    def is_admissible(self, word: Sequence[int]) -> bool:
        return all(self.admissible[a][b] > 0 for a, b in zip(word, word[1:]))

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.admissible]


@dataclass(frozen=True)
class MarkovMeasure:
    """Medida de Markov estacionária: transições racionais P e vetor π com πP = π."""

    transitions: Tuple[Tuple[Fraction, ...], ...]
    stationary: Tuple[Fraction, ...]


@dataclass(frozen=True)
class ComponentEntropy:
    """Componente fortemente conexa e seu raio espectral (diagnóstico)."""

    vertices: Tuple[int, ...]
    spectral_radius: float


@dataclass(frozen=True)
class EntropyCertificate:
    """λ certificado por det(M - λI) = 0 em Q(sqrt(D)) e confirmado por iteração de Perron."""

    lam: Surd
    size: int
    determinant_vanishes: bool
    perron_float: float
    ln: float
    log2: float
    components: Tuple[ComponentEntropy, ...] = ()

    @property
    def agrees(self) -> bool:
        return abs(self.perron_float - float(self.lam)) < PERRON_TOLERANCE

    @property
    def certified(self) -> bool:
        return self.determinant_vanishes and self.agrees
