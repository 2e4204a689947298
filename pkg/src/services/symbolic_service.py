"""
Serviço de dinâmica simbólica.

Modelo da duplicação f(x) = 2x (códigos binários, arcos F_N, métrica ρ),
medidas de Bernoulli e de Markov em cilindros, o subconjunto de Markov do
multigrafo Γ e o certificado de entropia.
"""
from __future__ import annotations

import math
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import sympy

from src.models.matrix import MatZ2, eigen_data, require_hyperbolic
from src.models.partition import TransitionGraph
from src.models.surd import Surd, coerce
from src.models.symbolic import (
    CodingResult,
    ComponentEntropy,
    Cylinder,
    EntropyCertificate,
    MarkovMeasure,
    MarkovSubset,
    MeasureSpec,
    SymbolSequence,
)
from src.services.partition_service import enumerate_vertex_premps, markov_dynamics
from src.services.refinement_service import refine, transition_graph
from src.utils.errors import InvalidGraphError, OutOfRangeError
from src.utils.logger import Logger

logger = Logger(__name__)

PERRON_MAX_ITERATIONS = 100000
PERRON_STOP = 1e-14


def _require_unit_interval(x: Fraction) -> Fraction:
    x = Fraction(x)
    if not 0 <= x < 1:
        raise OutOfRangeError(f"x = {x} fora de [0, 1)")
    return x


def doubling_code(x: Fraction) -> CodingResult:
    """
    Código binário de x sob f(x) = 2x mod 1: a_n = 0 se f^n(x) ∈ [0, 1/2).

    Racionais diádicos têm dois diários; o canônico termina em zeros e o
    alternativo em uns (0 tem o alternativo 111... porque 0 ≡ 1 no círculo).

    Raises:
        OutOfRangeError: Se x não está em [0, 1)
    """
    x = _require_unit_interval(x)
    seen: Dict[Fraction, int] = {}
    digits: List[int] = []
    while x not in seen:
        seen[x] = len(digits)
        x *= 2
        digit = 1 if x >= 1 else 0
        digits.append(digit)
        x -= digit
    start = seen[x]
    sequence = SymbolSequence.canonical(digits[:start], digits[start:])

    if sequence.period != (0,):
        return CodingResult(sequence)
    pre = list(sequence.preperiod)
    if pre:
        alternate = SymbolSequence.canonical(pre[:-1] + [0], (1,))
    else:
        alternate = SymbolSequence.canonical((), (1,))
    return CodingResult(sequence, ambiguous=True, alternate=alternate)


def _binary_value(sequence: SymbolSequence) -> Fraction:
    """Σ x_n / 2^(n+1) sem redução módulo 1."""
    value = Fraction(0)
    for i, digit in enumerate(sequence.preperiod):
        value += Fraction(digit, 2 ** (i + 1))
    L = len(sequence.period)
    block = int(''.join(str(d) for d in sequence.period), 2)
    value += Fraction(block, 2 ** L - 1) / 2 ** len(sequence.preperiod)
    return value


def doubling_decode(sequence: SymbolSequence) -> Fraction:
    """π(x) = p(Σ x_n / 2^(n+1)) no círculo [0, 1)."""
    if sequence.alphabet_size != 2:
        raise ValueError("Decodificação binária exige alfabeto {0, 1}")
    return _binary_value(sequence) % 1


def doubling_map(x: Fraction) -> Fraction:
    return (2 * Fraction(x)) % 1


def doubling_orbit(x: Fraction, n: int) -> List[Fraction]:
    """x, f(x), ..., f^(n-1)(x)."""
    x = _require_unit_interval(x)
    orbit = []
    for _ in range(n):
        orbit.append(x)
        x = doubling_map(x)
    return orbit


def check_doubling_conjugacy(x: Fraction) -> bool:
    """decode(σ(code(x))) = 2x mod 1."""
    code = doubling_code(x).sequence
    return doubling_decode(code.shift()) == doubling_map(x)


def arc_F_N(prefix: Sequence[int]) -> Tuple[Fraction, Fraction]:
    """
    Arco fechado F_N = [i/2^(N+1), (i+1)/2^(N+1)] dos pontos cujo código
    começa por a_0 ... a_N.
    """
    if not prefix:
        return Fraction(0), Fraction(1)
    if any(d not in (0, 1) for d in prefix):
        raise ValueError(f"Prefixo não binário: {prefix}")
    i = int(''.join(str(d) for d in prefix), 2)
    width = Fraction(1, 2 ** len(prefix))
    return i * width, (i + 1) * width


def check_arc_nesting(prefix: Sequence[int]) -> bool:
    """F_0 ⊃ F_1 ⊃ ... ⊃ F_N, cada um com comprimento exato 1/2^(n+1)."""
    previous = (Fraction(0), Fraction(1))
    for n in range(1, len(prefix) + 1):
        lo, hi = arc_F_N(prefix[:n])
        if hi - lo != Fraction(1, 2 ** n):
            return False
        if not (previous[0] <= lo and hi <= previous[1]):
            return False
        previous = (lo, hi)
    return True


def rho(x: SymbolSequence, y: SymbolSequence) -> Fraction:
    """ρ(x, y) = Σ d(x_n, y_n) / 2^(n+1) com d discreta, exato para sequências eventualmente periódicas."""
    pre = max(len(x.preperiod), len(y.preperiod))
    period = lcm(len(x.period), len(y.period))
    diff = [int(x.symbol(n) != y.symbol(n)) for n in range(pre + period)]
    return _binary_value(SymbolSequence(tuple(diff[:pre]), tuple(diff[pre:])))


def rho_window(x: Sequence[int], y: Sequence[int]) -> Fraction:
    """ρ restrita a janelas finitas de mesmo comprimento."""
    if len(x) != len(y):
        raise ValueError("Janelas de comprimentos diferentes")
    return sum((Fraction(1, 2 ** (n + 1)) for n, (a, b) in enumerate(zip(x, y)) if a != b), Fraction(0))


def cylinder_measure(cylinder: Cylinder, measure: MeasureSpec) -> Fraction:
    """μ(A) = Π p_{a_i} sobre as coordenadas fixadas."""
    result = Fraction(1)
    for _, symbol in cylinder.constraints:
        if not 0 <= symbol < measure.alphabet_size:
            raise ValueError(f"Símbolo {symbol} fora do alfabeto da medida")
        result *= measure.probabilities[symbol]
    return result


def shift_preimage(cylinder: Cylinder) -> Cylinder:
    """σ^(-1)(A): cada índice fixado avança uma posição."""
    return Cylinder(tuple((i + 1, a) for i, a in cylinder.constraints))


def check_shift_invariance(cylinder: Cylinder, measure: MeasureSpec) -> bool:
    return cylinder_measure(shift_preimage(cylinder), measure) == cylinder_measure(cylinder, measure)


def markov_from_graph(graph: TransitionGraph) -> MarkovSubset:
    """
    Subconjunto de Markov do shift de arestas: o par (e_p, e_q) é admissível
    quando o fim de e_p é o início de e_q.

    Raises:
        InvalidGraphError: Se o grafo não tem arestas ou tem extremos inválidos
    """
    edges = graph.edges
    if not edges:
        raise InvalidGraphError("Γ sem arestas")
    for edge in edges:
        if not (0 <= edge.source < graph.vertex_count and 0 <= edge.target < graph.vertex_count):
            raise InvalidGraphError(f"Aresta {edge} fora dos {graph.vertex_count} vértices")
    return MarkovSubset(tuple(
        tuple(int(p.target == q.source) for q in edges)
        for p in edges
    ))


def _solve_stationary(transitions: Sequence[Sequence[Fraction]]) -> Tuple[Fraction, ...]:
    """Resolve π(P - I) = 0, Σπ = 1 pelo núcleo exato de P^T - I."""
    k = len(transitions)
    P = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in transitions])
    basis = (P.T - sympy.eye(k)).nullspace()
    if len(basis) != 1:
        raise InvalidGraphError("Vetor estacionário não é único (cadeia redutível)")
    vector = basis[0] / sum(basis[0])
    return tuple(Fraction(int(v.p), int(v.q)) for v in vector)


def markov_measure(
    subset: MarkovSubset,
    transitions: Optional[Sequence[Sequence[Fraction]]] = None,
) -> MarkovMeasure:
    """
    Medida de Markov estacionária sobre o subconjunto.

    Sem `transitions`, usa P_ij = M_ij / Σ_j M_ij. Probabilidades de pares
    proibidos precisam ser zero.

    Raises:
        InvalidGraphError: Se P não é estocástica, dá peso a pares proibidos
            ou não tem vetor estacionário único
    """
    k = subset.alphabet_size
    if transitions is None:
        transitions = []
        for row in subset.admissible:
            total = sum(row)
            if total == 0:
                raise InvalidGraphError("Símbolo sem sucessor admissível")
            transitions.append([Fraction(v, total) for v in row])
    P = tuple(tuple(Fraction(v) for v in row) for row in transitions)
    if len(P) != k or any(len(row) != k for row in P):
        raise InvalidGraphError("Matriz de transição com dimensão errada")
    for i, row in enumerate(P):
        if sum(row) != 1 or any(v < 0 for v in row):
            raise InvalidGraphError(f"Linha {i} de P não é estocástica")
        if any(v > 0 and subset.admissible[i][j] == 0 for j, v in enumerate(row)):
            raise InvalidGraphError(f"Linha {i} de P dá peso a par proibido")
    stationary = _solve_stationary(P)
    return MarkovMeasure(P, stationary)


def markov_cylinder_measure(cylinder: Cylinder, measure: MarkovMeasure) -> Fraction:
    """Medida do cilindro com índices arbitrários: propaga π por P entre as coordenadas fixadas."""
    if not cylinder.constraints:
        return Fraction(1)
    P = measure.transitions
    k = len(P)
    vector = list(measure.stationary)
    index = cylinder.constraints[0][0]
    for position, symbol in cylinder.constraints:
        if not 0 <= symbol < k:
            raise ValueError(f"Símbolo {symbol} fora do alfabeto")
        for _ in range(position - index):
            vector = [sum(vector[i] * P[i][j] for i in range(k)) for j in range(k)]
        index = position
        vector = [v if j == symbol else Fraction(0) for j, v in enumerate(vector)]
    return sum(vector, Fraction(0))


def characteristic_vanishes(subset: MarkovSubset, lam: Surd) -> bool:
    """det(λI - M) = 0 exatamente: polinômio característico inteiro avaliado em Q(sqrt(D))."""
    coefficients = sympy.Matrix([list(row) for row in subset.admissible]).charpoly().all_coeffs()
    value = coerce(0, lam.D)
    for c in coefficients:
        value = value * lam + int(c)
    return not value


def perron_root(matrix: Sequence[Sequence[int]]) -> float:
    """Raio espectral por iteração de potência em M + I (não negativa)."""
    M = np.asarray(matrix, dtype=float)
    if M.size == 0:
        return 0.0
    shifted = M + np.eye(M.shape[0])
    v = np.ones(M.shape[0])
    estimate = 0.0
    for _ in range(PERRON_MAX_ITERATIONS):
        w = shifted @ v
        norm = np.linalg.norm(w)
        if norm == 0:
            return 0.0
        new_estimate = norm / np.linalg.norm(v)
        v = w / norm
        if abs(new_estimate - estimate) < PERRON_STOP:
            estimate = new_estimate
            break
        estimate = new_estimate
    return float(estimate - 1.0)


def strongly_connected_components(adjacency: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Componentes fortemente conexas, ordenadas pelo menor vértice."""
    if not adjacency:
        return []
    digraph = nx.from_numpy_array(np.asarray(adjacency, dtype=int), create_using=nx.DiGraph)
    return sorted(tuple(sorted(c)) for c in nx.strongly_connected_components(digraph))


def component_entropies(subset: MarkovSubset) -> List[ComponentEntropy]:
    """Raio espectral de cada componente fortemente conexa."""
    M = subset.admissible
    result = []
    for members in strongly_connected_components(M):
        block = [[M[i][j] for j in members] for i in members]
        result.append(ComponentEntropy(members, perron_root(block)))
    return result


def entropy(subset: MarkovSubset, lam: Surd) -> EntropyCertificate:
    """
    Certificado de entropia log|λ| do shift de Markov.

    Args:
        subset: Subconjunto de Markov (tipicamente o shift de arestas de Γ)
        lam: Autovalor candidato em Q(sqrt(D))

    Returns:
        EntropyCertificate com o teste exato de det(M - λI), a raiz de Perron
        em ponto flutuante e o diagnóstico por componente
    """
    components = component_entropies(subset)
    if len(components) > 1:
        largest = max(components, key=lambda c: c.spectral_radius)
        logger.warning(
            f"Subconjunto com {len(components)} componentes; maior raio {largest.spectral_radius:.12f}"
        )
    vanishes = characteristic_vanishes(subset, lam)
    perron = perron_root(subset.admissible)
    lam_float = abs(float(lam))
    certificate = EntropyCertificate(
        lam=lam,
        size=subset.alphabet_size,
        determinant_vanishes=vanishes,
        perron_float=perron,
        ln=math.log(lam_float),
        log2=math.log2(lam_float),
        components=tuple(components),
    )
    if not certificate.certified:
        logger.error(f"Certificado de entropia falhou: det zero = {vanishes}, Perron {perron} vs {lam_float}")
    return certificate


def largest_component_entropy(subset: MarkovSubset) -> float:
    """Entropia natural da componente de maior raio espectral."""
    radius = max(c.spectral_radius for c in component_entropies(subset))
    return math.log(radius) if radius > 0 else float('-inf')


def matrix_entropy(A: MatZ2) -> Tuple[EntropyCertificate, Dict[str, int]]:
    """
    Entropia de Â pela strMp refinada da primeira preMp garantida.

    Returns:
        (certificado, tamanhos: peças da preMp, peças da strMp, arestas)
    """
    require_hyperbolic(A)
    dynamics = markov_dynamics(A)
    base = next((e for e in enumerate_vertex_premps(A, sides=('+u',)) if e.guaranteed), None)
    if base is None:
        raise InvalidGraphError(f"Sem preMp garantida para {A.to_text()}")
    refined = refine(base.geometry, dynamics)
    graph = transition_graph(refined, dynamics)
    subset = markov_from_graph(graph)
    lam = abs(eigen_data(A).lambda_u)
    sizes = {'premp_pieces': len(base.geometry), 'strmp_pieces': len(refined), 'edges': len(graph.edges)}
    return entropy(subset, lam), sizes


__all__ = [
    'doubling_code',
    'doubling_decode',
    'doubling_map',
    'doubling_orbit',
    'check_doubling_conjugacy',
    'arc_F_N',
    'check_arc_nesting',
    'rho',
    'rho_window',
    'cylinder_measure',
    'shift_preimage',
    'check_shift_invariance',
    'markov_from_graph',
    'markov_measure',
    'markov_cylinder_measure',
    'characteristic_vanishes',
    'perron_root',
    'strongly_connected_components',
    'component_entropies',
    'entropy',
    'largest_component_entropy',
    'matrix_entropy',
]
