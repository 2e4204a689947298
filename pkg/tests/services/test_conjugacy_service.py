"""Testes para o serviço de conjugação."""
import random

import pytest
from pytest_check import check

from src.models.conjugacy import QuadraticForm
from src.models.matrix import C1, C2, C3, MatZ2
from src.services.conjugacy_service import (
    are_conjugate_gl,
    are_conjugate_sl,
    check_diagram,
    diagram_with_sign,
    find_conjugator,
    find_sl_conjugator,
    from_form,
    period_of,
    self_conjugator,
    to_form,
)
from src.utils.errors import (
    DetGNotOneError,
    DiscriminantMismatchError,
    NotConjugateError,
    ParityViolationError,
)


def test_period_of(golden, matrix_3211):
    """Testa o período canônico."""
    assert period_of(golden) == (1,)
    assert period_of(matrix_3211) == (1, 2)


def test_gl_conjugacy_examples(golden, matrix_3211):
    """Testa a decisão em GL(2, Z)."""
    with check:
        assert are_conjugate_gl(golden, MatZ2(1, 1, 1, 2))
    with check:
        assert are_conjugate_gl(golden, golden)
    with check:
        assert not are_conjugate_gl(golden, matrix_3211)
    with check:
        assert not are_conjugate_gl(golden, golden @ golden)


def test_self_conjugator_golden(golden):
    """Testa A = (C2 C1^-1) A (C2 C1^-1)^-1."""
    witness = self_conjugator(golden)
    C = witness.matrix
    assert C == C2 @ C1.inverse()
    assert witness.word_text() == "C2C1^-1"
    assert witness.det == -1
    assert C @ golden @ C.inverse() == golden


def test_find_conjugator_examples(golden):
    """Testa testemunhas curtas."""
    assert find_conjugator(golden, golden).word_text() == "I"
    B = C2 @ golden @ C2.inverse()
    witness = find_conjugator(golden, B)
    assert witness.word_text() == "C2"
    with pytest.raises(NotConjugateError):
        find_conjugator(golden, MatZ2(3, 2, 1, 1))


def test_witness_random(random_hyperbolic):
    """Testa que a testemunha conjuga matrizes conjugadas aleatórias."""
    rng = random.Random(23)
    words = [C1, C2, C3, C1.inverse()]
    for A in random_hyperbolic(rng, 25):
        g = MatZ2.identity()
        for _ in range(rng.randint(1, 5)):
            g = g @ rng.choice(words)
        B = g @ A @ g.inverse()
        assert are_conjugate_gl(A, B)
        C = find_conjugator(A, B).matrix
        assert C @ A @ C.inverse() == B


def test_equivalence_relation():
    """Testa simetria e transitividade via testemunhas."""
    A = MatZ2(3, 2, 1, 1)
    B = C1 @ A @ C1.inverse()
    C = C2 @ B @ C2
    with check:
        assert are_conjugate_gl(B, A)
    with check:
        assert are_conjugate_gl(A, C)
    X = find_conjugator(A, C).matrix
    assert X @ A @ X.inverse() == C


def test_sl_conjugacy_odd_period(golden):
    """Testa período ímpar: GL basta para SL."""
    B = C3 @ golden @ C3.inverse()
    assert are_conjugate_sl(golden, B)
    witness = find_sl_conjugator(golden, B)
    assert witness.det == 1
    assert witness.matrix @ golden @ witness.matrix.inverse() == B
    assert are_conjugate_sl(golden, golden)


def test_sl_conjugacy_even_period(matrix_3211):
    """Testa período par com testemunha de det -1: não conjugadas em SL."""
    B = C3 @ matrix_3211 @ C3.inverse()
    assert are_conjugate_gl(matrix_3211, B)
    assert find_conjugator(matrix_3211, B).det == -1
    assert not are_conjugate_sl(matrix_3211, B)
    with pytest.raises(NotConjugateError):
        find_sl_conjugator(matrix_3211, B)


def test_sl_even_period_bruteforce(matrix_3211):
    """Testa por busca exaustiva que nenhum C de det 1 com entradas pequenas conjuga."""
    B = C3 @ matrix_3211 @ C3.inverse()
    for a in range(-12, 13):
        for b in range(-12, 13):
            for c in range(-12, 13):
                if a == 0 or (b * c + 1) % a:
                    continue
                C = MatZ2(a, b, c, (b * c + 1) // a)
                assert C @ matrix_3211 != B @ C


def test_to_form(golden):
    """Testa f(X) = c x^2 + (t - 2a) xy - b y^2."""
    q = to_form(golden)
    assert q == QuadraticForm(1, -1, -1)
    assert q.disc == 5
    companion = MatZ2(0, 1, -1, 3)
    assert to_form(companion) == QuadraticForm(-1, 3, -1)


def test_from_form(golden):
    """Testa a inversão e seus erros."""
    assert from_form(QuadraticForm(1, -1, -1), 3, 1) == golden
    with pytest.raises(ParityViolationError):
        from_form(QuadraticForm(1, 0, -2), 3, 1)
    with pytest.raises(DiscriminantMismatchError):
        from_form(QuadraticForm(1, 1, 1), 3, 1)


def test_form_round_trip(random_hyperbolic):
    """Testa from_form(to_form(X), t, det) = X."""
    rng = random.Random(41)
    for X in random_hyperbolic(rng, 60):
        q = to_form(X)
        assert q.disc == X.trace ** 2 - 4 * X.det
        assert from_form(q, X.trace, X.det) == X


def test_check_diagram(golden, random_hyperbolic):
    """Testa a comutatividade do diagrama para det g = 1."""
    assert check_diagram(MatZ2.identity(), golden)
    assert check_diagram(C1, golden)
    rng = random.Random(13)
    generators = [C1, C1.inverse(), C2 @ C3]
    for X in random_hyperbolic(rng, 40):
        g = MatZ2.identity()
        for _ in range(rng.randint(1, 6)):
            g = g @ rng.choice(generators)
        assert check_diagram(g, X)
    with pytest.raises(DetGNotOneError):
        check_diagram(C2, golden)


def test_diagram_with_sign(golden):
    """Testa o diagnóstico com o sinal de det g."""
    assert diagram_with_sign(C2, golden)
    assert diagram_with_sign(C3, MatZ2(3, 2, 1, 1))
