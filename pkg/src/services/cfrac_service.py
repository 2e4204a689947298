"""
Serviço de frações contínuas de irracionais quadráticos.

Expansão com detecção exata de período, avaliação exata, as transformações
T1 (x + 1), T2 (1/x), T3 (-x) nos níveis surd e fração contínua, reduzidas e
melhores aproximações de um e de dois lados (com oráculos por força bruta).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.models.continued_fraction import (
    CFExpansion,
    Convergent,
    minimal_rotation,
    primitive_word,
)
from src.models.surd import Surd
from src.utils.errors import (
    DivisionByZeroError,
    InvariantViolationError,
    RationalInputError,
)
from src.utils.logger import Logger

logger = Logger(__name__)

DEFAULT_MAX_STEPS = 100000


def expand(x: Surd, max_steps: int = DEFAULT_MAX_STEPS) -> CFExpansion:
    """
    Expande x em fração contínua regular.

    O período é detectado pela primeira repetição exata de um quociente
    completo x_n, o que já fornece pré-período mínimo e período primitivo.

    Args:
        x: Irracional quadrático (b != 0)
        max_steps: Limite de segurança de iterações

    Returns:
        CFExpansion canônica

    Raises:
        RationalInputError: Se x é racional
    """
    if x.is_rational:
        raise RationalInputError(f"Expansão periódica exige irracional: {x}")
    seen: Dict[Surd, int] = {}
    terms: List[int] = []
    current = x
    while current not in seen:
        if len(terms) >= max_steps:
            raise InvariantViolationError(f"Período não encontrado em {max_steps} passos para {x}")
        seen[current] = len(terms)
        a = current.floor()
        terms.append(a)
        current = 1 / (current - a)
    start = seen[current]
    result = CFExpansion.canonical(terms[:start], terms[start:])
    logger.debug(f"expand({x}) = {result} em {len(terms)} passos")
    return result


def _word_matrix(terms: Sequence[int]) -> Tuple[int, int, int, int]:
    """Produto das matrizes ((a, 1), (1, 0)) dos termos."""
    P, P1, Q, Q1 = 1, 0, 0, 1
    for a in terms:
        P, P1, Q, Q1 = a * P + P1, P, a * Q + Q1, Q
    return P, P1, Q, Q1


def evaluate(cf: CFExpansion, radicand: Optional[int] = None) -> Surd:
    """
    Valor exato de uma fração contínua periódica.

    A cauda puramente periódica y satisfaz y = (P y + P')/(Q y + Q'); a raiz
    maior que 1 é tomada e o pré-período é aplicado como transformação de
    Möbius. O radicando natural é tr^2 - 4 det da matriz do período; com
    `radicand` o resultado é reexpresso sobre esse radicando.
    """
    P, P1, Q, Q1 = _word_matrix(cf.period)
    disc = (P + Q1) ** 2 - 4 * (P * Q1 - P1 * Q)
    y = (Surd.sqrt(disc) + (P - Q1)) / (2 * Q)
    A, A1, B, B1 = _word_matrix(cf.preperiod)
    value = (A * y + A1) / (B * y + B1)
    if radicand is not None:
        value = value.to_radicand(radicand)
    return value


def apply_T(i: int, x: Surd, exponent: int = 1) -> Surd:
    """
    Aplica T_i^exponent a um surd.

    T1(x) = x + 1, T2(x) = 1/x, T3(x) = -x.
    """
    if i == 1:
        return x + exponent
    if i in (2, 3):
        if exponent % 2 == 0:
            return x
        if i == 3:
            return -x
        if not x:
            raise DivisionByZeroError("T2 de zero")
        return 1 / x
    raise ValueError(f"Transformação desconhecida: T{i}")


def _unroll(cf: CFExpansion, n: int) -> Tuple[List[int], CFExpansion]:
    """Separa os n primeiros termos e a expansão da cauda."""
    return cf.terms(n), cf.tail(n)


def _rebuild(prefix: Sequence[int], tail: CFExpansion) -> CFExpansion:
    return CFExpansion.canonical(list(prefix) + list(tail.preperiod), tail.period)


def apply_T_cf(i: int, cf: CFExpansion) -> CFExpansion:
    """
    Aplica T_i diretamente sobre a expansão.

    T1 incrementa a0; T2 remove a0 = 0, prefixa 0 quando a0 > 0 e usa
    T3∘T2∘T3 quando a0 < 0; T3 usa a regra de dois casos sobre a1.
    """
    if i == 1:
        (a0,), tail = _unroll(cf, 1)
        return _rebuild([a0 + 1], tail)
    if i == 2:
        (a0,), tail = _unroll(cf, 1)
        if a0 == 0:
            return tail
        if a0 > 0:
            return _rebuild([0, a0], tail)
        return apply_T_cf(3, apply_T_cf(2, apply_T_cf(3, cf)))
    if i == 3:
        (a0, a1, a2), tail = _unroll(cf, 3)
        if a1 == 1:
            return _rebuild([-a0 - 1, a2 + 1], tail)
        return _rebuild([-a0 - 1, 1, a1 - 1, a2], tail)
    raise ValueError(f"Transformação desconhecida: T{i}")


def canonical_period(cf: CFExpansion) -> Tuple[int, ...]:
    """Rotação mínima da palavra primitiva do período."""
    return minimal_rotation(primitive_word(cf.period))


def finite_value(terms: Sequence[int]) -> Fraction:
    """Valor exato de [t0; t1, ..., tn] finita."""
    if not terms:
        raise ValueError("Fração contínua finita vazia")
    value = Fraction(terms[-1])
    for t in reversed(terms[:-1]):
        value = t + 1 / value
    return value


def _convergent_pairs(cf: CFExpansion, n: int) -> List[Tuple[int, int]]:
    p_prev, q_prev = 1, 0
    p_prev2, q_prev2 = 0, 1
    pairs = []
    for k in range(n):
        a = cf.term(k)
        p, q = a * p_prev + p_prev2, a * q_prev + q_prev2
        pairs.append((p, q))
        p_prev2, q_prev2, p_prev, q_prev = p_prev, q_prev, p, q
    return pairs


def _side(p: int, q: int, omega: Surd) -> str:
    return 'below' if (q * omega - p).sign() > 0 else 'above'


def convergents(cf: CFExpansion, n: int) -> List[Convergent]:
    """
    Primeiras n reduzidas p_k/q_k (k = 0..n-1).

    Usa a recorrência p_k = a_k p_{k-1} + p_{k-2} com p_{-1} = 1, q_{-1} = 0.
    """
    if n < 1:
        raise ValueError("n precisa ser >= 1")
    omega = evaluate(cf)
    return [Convergent(p, q, _side(p, q, omega)) for p, q in _convergent_pairs(cf, n)]


def convergent_pair(cf: CFExpansion, k: int) -> Tuple[int, int]:
    """(p_k, q_k), aceitando k = -1 -> (1, 0) e k = -2 -> (0, 1)."""
    if k == -1:
        return (1, 0)
    if k == -2:
        return (0, 1)
    return _convergent_pairs(cf, k + 1)[k]


def intermediate_fraction(cf: CFExpansion, k: int, l: int) -> Tuple[int, int]:
    """[b0, ..., b_k, l] = (l p_k + p_{k-1}) / (l q_k + q_{k-1}) como par (p, q)."""
    p_k, q_k = convergent_pair(cf, k)
    p_prev, q_prev = convergent_pair(cf, k - 1)
    return (l * p_k + p_prev, l * q_k + q_prev)


def _with_sides(pairs: List[Tuple[int, int]], omega: Surd) -> List[Convergent]:
    return [Convergent(p, q, _side(p, q, omega)) for p, q in sorted(pairs, key=lambda pq: (pq[1], pq[0]))]


def best_approx_one_sided(omega: Surd, q_max: int) -> List[Convergent]:
    """
    Melhores aproximações de um lado pela fórmula [b0, ..., b_{k-1}, l], 1 <= l <= b_k.

    O bloco k = 0 é [1], ..., [b0] (ou apenas [b0] quando b0 <= 0).
    Saída ordenada por denominador crescente.
    """
    cf = expand(omega)
    b0 = cf.term(0)
    pairs: List[Tuple[int, int]] = []
    if b0 >= 1:
        pairs.extend((l, 1) for l in range(1, b0 + 1))
    else:
        pairs.append((b0, 1))
    k = 1
    while True:
        p1, q1 = convergent_pair(cf, k - 1)
        p2, q2 = convergent_pair(cf, k - 2)
        if q1 + q2 > q_max:
            break
        for l in range(1, cf.term(k) + 1):
            q = l * q1 + q2
            if q > q_max:
                break
            pairs.append((l * p1 + p2, q))
        k += 1
    return _with_sides([pq for pq in pairs if pq[1] <= q_max], omega)


def best_approx_two_sided(omega: Surd, q_max: int) -> List[Convergent]:
    """Melhores aproximações de dois lados: as reduzidas com q <= q_max."""
    cf = expand(omega)
    pairs = []
    k = 0
    while True:
        p, q = convergent_pair(cf, k)
        if q > q_max:
            break
        pairs.append((p, q))
        k += 1
    return _with_sides(pairs, omega)


def best_approx_one_sided_oracle(omega: Surd, q_max: int) -> List[Convergent]:
    """
    Oráculo por força bruta da condição (0 < q' < q, q'ω - p' entre 0 e qω - p).

    Mantém o menor desvio positivo e o maior desvio negativo vistos. Em q = 1
    a condição é vazia; os candidatos são p em [min(1, floor ω), floor ω + 1].
    """
    pairs: List[Tuple[int, int]] = []
    base = omega.floor()
    pairs.extend((p, 1) for p in range(min(1, base), base + 2))
    min_positive = omega - base
    max_negative = omega - (base + 1)
    for q in range(2, q_max + 1):
        q_omega = q * omega
        p = q_omega.floor()
        below = q_omega - p
        above = q_omega - (p + 1)
        if below < min_positive:
            pairs.append((p, q))
            min_positive = below
        if above > max_negative:
            pairs.append((p + 1, q))
            max_negative = above
    return _with_sides(pairs, omega)


def best_approx_two_sided_oracle(omega: Surd, q_max: int) -> List[Convergent]:
    """
    Oráculo por força bruta: nenhum 0 < q' < q com |q'ω - p'| < |qω - p|.

    Em q = 1, floor ω é mantido e floor ω + 1 entra apenas se estiver mais perto.
    """
    base = omega.floor()
    pairs = [(base, 1)]
    below = omega - base
    above = (base + 1) - omega
    if above < below:
        pairs.append((base + 1, 1))
    best = min(below, above)
    for q in range(2, q_max + 1):
        q_omega = q * omega
        p = q_omega.floor()
        below = q_omega - p
        above = (p + 1) - q_omega
        nearest, distance = (p, below) if below < above else (p + 1, above)
        if distance < best:
            pairs.append((nearest, q))
            best = distance
    return _with_sides(pairs, omega)


__all__ = [
    'expand',
    'evaluate',
    'apply_T',
    'apply_T_cf',
    'canonical_period',
    'finite_value',
    'convergents',
    'convergent_pair',
    'intermediate_fraction',
    'best_approx_one_sided',
    'best_approx_two_sided',
    'best_approx_one_sided_oracle',
    'best_approx_two_sided_oracle',
]
