"""
Serviço de conjugação em GL(2, Z) e SL(2, Z).

A decisão usa o período da fração contínua de κ_A; as testemunhas são
construídas por redução determinística de κ ao representante puramente
periódico (passos z -> 1/(z - a0), matriz C2·C1^(-a0)) seguida de alinhamento
de rotação. As formas quadráticas de Gauss servem de verificação cruzada.
"""
from __future__ import annotations

from typing import List, Tuple

from src.models.conjugacy import ConjugacyWitness, QuadraticForm, invert_word
from src.models.matrix import MatZ2, eigen_data, require_hyperbolic
from src.models.surd import Surd
from src.services.cfrac_service import canonical_period, expand
from src.utils.errors import (
    DetGNotOneError,
    DiscriminantMismatchError,
    InvalidDeterminantError,
    InvariantViolationError,
    NotConjugateError,
    ParityViolationError,
)
from src.utils.logger import Logger

logger = Logger(__name__)

Step = List[Tuple[str, int]]


def period_of(A: MatZ2) -> Tuple[int, ...]:
    """Período canônico da expansão de κ_A."""
    return canonical_period(expand(eigen_data(A).kappa))


def are_conjugate_gl(A: MatZ2, B: MatZ2) -> bool:
    """
    Decide se A e B são conjugadas em GL(2, Z).

    Exige traço e determinante iguais além do mesmo período canônico (o
    período sozinho não distingue A de A^2).
    """
    require_hyperbolic(A)
    require_hyperbolic(B)
    if A.trace != B.trace or A.det != B.det:
        return False
    return period_of(A) == period_of(B)


def _step(z: Surd) -> Tuple[Surd, Step]:
    a0 = z.floor()
    return 1 / (z - a0), [('C2', 1), ('C1', -a0)]


def _advance(z: Surd, steps: int) -> Tuple[Surd, Step]:
    """Aplica `steps` passos; a palavra devolvida é S_n ··· S_1."""
    word: Step = []
    for _ in range(steps):
        z, step = _step(z)
        word = step + word
    return z, word


def _reduce_to_periodic(x: Surd) -> Tuple[Surd, Step]:
    cf = expand(x)
    return _advance(x, len(cf.preperiod))


def find_conjugator(A: MatZ2, B: MatZ2, period_shift: int = 0) -> ConjugacyWitness:
    """
    Constrói C com B = C A C^-1.

    Args:
        A: Matriz hiperbólica
        B: Matriz hiperbólica conjugada a A
        period_shift: Períodos completos extras percorridos (autoconjugações)

    Returns:
        ConjugacyWitness verificada exatamente

    Raises:
        NotConjugateError: Se A e B não são conjugadas em GL(2, Z)
    """
    if not are_conjugate_gl(A, B):
        raise NotConjugateError(f"{A.to_text()} e {B.to_text()} não são conjugadas")
    y_a, word_a = _reduce_to_periodic(eigen_data(A).kappa)
    y_b, word_b = _reduce_to_periodic(eigen_data(B).kappa)
    period_a = expand(y_a).period
    period_b = expand(y_b).period
    length = len(period_a)
    rotation = next(
        (r for r in range(length) if period_a[r:] + period_a[:r] == period_b),
        None,
    )
    if rotation is None:
        raise InvariantViolationError(f"Períodos {period_a} e {period_b} não alinham")
    y_rotated, word_r = _advance(y_a, rotation + length * period_shift)
    if y_rotated != y_b:
        raise InvariantViolationError("Alinhamento de rotação não reproduz κ_B")

    witness = ConjugacyWitness.from_word(list(invert_word(tuple(word_b))) + word_r + word_a)
    C = witness.matrix
    if C @ A @ C.inverse() != B:
        raise InvariantViolationError(
            f"Testemunha {witness.word_text()} não conjuga {A.to_text()} em {B.to_text()}"
        )
    logger.debug(f"Conjugador de {A.to_text()} para {B.to_text()}: {witness.word_text()}")
    return witness


def self_conjugator(A: MatZ2, shifts: int = 1) -> ConjugacyWitness:
    """Autoconjugação obtida deslocando o período `shifts` vezes; det = (-1)^(L·shifts)."""
    return find_conjugator(A, A, period_shift=shifts)


def are_conjugate_sl(A: MatZ2, B: MatZ2) -> bool:
    """
    Decide conjugação em SL(2, Z).

    Período de comprimento ímpar: basta a conjugação em GL. Período par: o
    centralizador não tem elementos de det -1, logo uma testemunha decide.
    """
    if not are_conjugate_gl(A, B):
        return False
    witness = find_conjugator(A, B)
    if witness.det == 1:
        return True
    return len(period_of(A)) % 2 == 1


def find_sl_conjugator(A: MatZ2, B: MatZ2) -> ConjugacyWitness:
    """Testemunha com det = 1 (compõe com uma autoconjugação de det -1 quando preciso)."""
    witness = find_conjugator(A, B)
    if witness.det == 1:
        return witness
    if len(period_of(A)) % 2 == 0:
        raise NotConjugateError(
            f"{A.to_text()} e {B.to_text()} não são conjugadas em SL(2, Z)"
        )
    combined = witness.then(self_conjugator(A, 1))
    C = combined.matrix
    if combined.det != 1 or C @ A @ C.inverse() != B:
        raise InvariantViolationError("Composição com autoconjugação falhou")
    return combined


def to_form(X: MatZ2) -> QuadraticForm:
    """f(X) = c x^2 + (t - 2a) xy - b y^2."""
    form = QuadraticForm(X.c, X.trace - 2 * X.a, -X.b)
    if form.disc != X.trace ** 2 - 4 * X.det:
        raise InvariantViolationError(f"disc(f(X)) != t^2 - 4 det para {X.to_text()}")
    return form


def from_form(q: QuadraticForm, t: int, det: int) -> MatZ2:
    """
    Único X com traço t, determinante det e f(X) = q.

    Raises:
        DiscriminantMismatchError: Se disc(q) != t^2 - 4 det
        ParityViolationError: Se B e t têm paridades diferentes
    """
    if det not in (1, -1):
        raise InvalidDeterminantError(f"Determinante inválido: {det}")
    if (t - q.B) % 2:
        raise ParityViolationError(f"B = {q.B} e t = {t} com paridades diferentes")
    if q.disc != t * t - 4 * det:
        raise DiscriminantMismatchError(f"disc {q.disc} != {t * t - 4 * det}")
    a = (t - q.B) // 2
    X = MatZ2(a, -q.C, q.A, t - a)
    if to_form(X) != q:
        raise InvariantViolationError("from_form não inverte to_form")
    return X


def check_diagram(g: MatZ2, X: MatZ2) -> bool:
    """Compara f(g X g^-1) com g*(f(X)) para det(g) = 1."""
    if g.det != 1:
        raise DetGNotOneError(f"det(g) = {g.det}")
    return to_form(g @ X @ g.inverse()) == to_form(X).pullback(g)


def diagram_with_sign(g: MatZ2, X: MatZ2) -> bool:
    """Diagnóstico para qualquer g: f(g X g^-1) = det(g)·g*(f(X))."""
    return to_form(g @ X @ g.inverse()) == to_form(X).pullback(g).scaled(g.det)


__all__ = [
    'period_of',
    'are_conjugate_gl',
    'find_conjugator',
    'self_conjugator',
    'are_conjugate_sl',
    'find_sl_conjugator',
    'to_form',
    'from_form',
    'check_diagram',
    'diagram_with_sign',
]
