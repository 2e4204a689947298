"""
Serviço de construção e enumeração de partições pré-Markov.

Configurações T (ponto P, raio L, travessa I), o varrimento que produz a
qMp de duas peças, a sequência biinfinita de preMps de tipo vértice em cada
classe larga (±e_u, ±e_s), a tipagem ilha/parquet, a contagem de classes,
o gerador do centralizador e os deslocamentos de tipo aresta.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from src.models.continued_fraction import CFExpansion
from src.models.matrix import MatZ2, eigen_data, fixpoints, require_hyperbolic
from src.models.partition import (
    SIDES,
    PlanarParallelogram,
    TConfiguration,
    TorusPartition,
    VertexPreMp,
)
from src.models.surd import Surd, coerce
from src.services.cfrac_service import convergent_pair, expand, intermediate_fraction
from src.services.conjugacy_service import self_conjugator
from src.services.lattice_service import Frame, matrix_frame
from src.services.validator_service import validate_partition
from src.utils.config import Config
from src.utils.errors import (
    ConstructionWindowTooSmallError,
    DegenerateArcError,
    InvariantViolationError,
)
from src.utils.logger import Logger

logger = Logger(__name__)

LatticePoint = Tuple[int, int]
FLOOD_PATCH = 10


@lru_cache(maxsize=1)
def _config() -> Config:
    return Config()


@dataclass(frozen=True)
class Crossing:
    """Cruzamento do raio com o levantamento J + w no tempo t e parâmetro σ de J."""

    t: Surd
    sigma: Surd
    vector: LatticePoint


@dataclass(frozen=True)
class ClassCount:
    """Contagem de classes de preMps de tipo vértice."""

    total: int
    island: int
    parquet: int
    shift: Optional[int] = None
    verified: Optional[bool] = None


def _zero(frame: Frame) -> Surd:
    return coerce(0, frame.D)


def _box(leg_axis: int, leg_lo, leg_hi, cross_lo, cross_hi):
    if leg_axis == 0:
        return (leg_lo, leg_hi, cross_lo, cross_hi)
    return (cross_lo, cross_hi, leg_lo, leg_hi)


def _split(leg_axis: int, c1: Surd, c2: Surd) -> Tuple[Surd, Surd]:
    """(coordenada da perna, coordenada da travessa)."""
    return (c1, c2) if leg_axis == 0 else (c2, c1)


def _leg_range(leg_sign: int, length):
    return (0, length) if leg_sign > 0 else (-length, 0)


def crossings(
    frame: Frame,
    leg_axis: int,
    leg_sign: int,
    lo,
    hi,
    horizon,
) -> List[Crossing]:
    """
    Cruzamentos do raio t·ε·e_leg (0 < t < horizon) com os levantamentos J + w
    do arco J = (lo, hi) na direção transversal, ordenados por t.
    """
    leg_lo, leg_hi = _leg_range(leg_sign, horizon)
    found = []
    for hit in frame.lattice_in_box(*_box(leg_axis, leg_lo, leg_hi, -hi, -lo)):
        w_leg, w_cross = _split(leg_axis, hit.c1, hit.c2)
        found.append(Crossing(leg_sign * w_leg, -w_cross, hit.vector))
    return sorted(found, key=lambda c: c.t)


def t_configuration(
    frame: Frame,
    origin: Tuple[Fraction, Fraction] = (Fraction(0), Fraction(0)),
    leg_axis: int = 0,
    leg_sign: int = 1,
    J: Tuple[object, object] = (Fraction(-1, 2), Fraction(1, 2)),
) -> TConfiguration:
    """
    Constrói a configuração T a partir de um arco inicial J ⊂ W^transversal(P).

    Toma i mínimo com σ_i e σ_{i+1} em lados opostos de P, h o cruzamento
    mais próximo de P entre 1..i, e faz t_A = t_h, t_B = t_{i+1}.

    Args:
        frame: Frame das duas direções (irracionais)
        origin: Ponto P em coordenadas padrão
        leg_axis: Eixo do raio L (0 = primeira direção, 1 = segunda)
        leg_sign: Sentido do raio (+1 ou -1)
        J: Extremos do arco inicial, relativos a P, na direção transversal

    Raises:
        DegenerateArcError: Se P não está no interior de J
        ConstructionWindowTooSmallError: Se o horizonte de cruzamentos se esgota
    """
    if leg_axis not in (0, 1) or leg_sign not in (1, -1):
        raise ValueError(f"Raio inválido: eixo {leg_axis}, sentido {leg_sign}")
    lo, hi = coerce(J[0], frame.D), coerce(J[1], frame.D)
    if not lo < 0 < hi:
        raise DegenerateArcError(f"P precisa estar no interior de J = [{lo}, {hi}]")

    max_horizon = _config().get_limit('crossing_horizon')
    horizon = 1
    while True:
        found = crossings(frame, leg_axis, leg_sign, lo, hi, horizon)
        split = next(
            (j for j in range(len(found) - 1) if found[j].sigma.sign() != found[j + 1].sigma.sign()),
            None,
        )
        if split is not None:
            break
        if horizon >= max_horizon:
            raise ConstructionWindowTooSmallError(
                f"Sem cruzamentos em lados opostos até t = {horizon}"
            )
        horizon *= 2

    h = min(range(split + 1), key=lambda j: abs(found[j].sigma))
    a, b = found[h], found[split + 1]
    u0, s0 = frame.coords(origin[0], origin[1])
    cfg = TConfiguration(
        frame=frame,
        origin=(u0, s0),
        leg_axis=leg_axis,
        leg_sign=leg_sign,
        sigma_a=a.sigma,
        sigma_b=b.sigma,
        t_a=a.t,
        t_b=b.t,
        v_a=a.vector,
        v_b=b.vector,
    )
    problems = verify_t_configuration(cfg)
    if problems:
        raise InvariantViolationError("; ".join(problems))
    logger.debug(f"Configuração T: t_A = {a.t}, t_B = {b.t}, A = {a.vector}, B = {b.vector}")
    return cfg


def t_configuration_from_pair(frame: Frame, v_a: LatticePoint, v_b: LatticePoint) -> TConfiguration:
    """Configuração T na origem com raio +e_u cujos cruzamentos são v_a e v_b."""
    ua, sa = frame.lattice_coords(v_a)
    ub, sb = frame.lattice_coords(v_b)
    zero = _zero(frame)
    return TConfiguration(frame, (zero, zero), 0, 1, -sa, -sb, ua, ub, tuple(v_a), tuple(v_b))


def verify_t_configuration(cfg: TConfiguration) -> List[str]:
    """Problemas da configuração (lista vazia quando válida)."""
    problems: List[str] = []
    if not (0 < cfg.t_a < cfg.t_b):
        problems.append(f"Exige 0 < t_A < t_B: t_A = {cfg.t_a}, t_B = {cfg.t_b}")
        return problems
    if cfg.sigma_a.sign() == cfg.sigma_b.sign():
        problems.append("A e B do mesmo lado de P")
        return problems
    lo, hi = cfg.crossbar
    leg_lo, leg_hi = _leg_range(cfg.leg_sign, cfg.t_b)
    box = _box(cfg.leg_axis, leg_lo, leg_hi, -hi, -lo)
    for hit in cfg.frame.lattice_in_box(*box, closed=True):
        w_leg, _ = _split(cfg.leg_axis, hit.c1, hit.c2)
        t = cfg.leg_sign * w_leg
        if 0 < t < cfg.t_b and hit.vector != cfg.v_a:
            problems.append(f"Cruzamento extra de I em t = {t} por {hit.vector}")
    return problems


def _first_catastrophe(cfg: TConfiguration, base_lo: Surd, base_hi: Surd) -> Surd:
    """
    Primeiro t > 0 em que a base deslocada ε t e_leg encontra o interior de
    um levantamento de I; a base precisa estar contida nesse levantamento.
    """
    lo_i, hi_i = cfg.crossbar
    leg_lo, leg_hi = _leg_range(cfg.leg_sign, 2 * cfg.t_c)
    box = _box(cfg.leg_axis, leg_lo, leg_hi, base_lo - hi_i, base_hi - lo_i)
    best: Optional[Tuple[Surd, Surd]] = None
    for hit in cfg.frame.lattice_in_box(*box):
        w_leg, w_cross = _split(cfg.leg_axis, hit.c1, hit.c2)
        t = cfg.leg_sign * w_leg
        if best is None or t < best[0]:
            best = (t, w_cross)
    if best is None:
        raise InvariantViolationError("Varrimento sem catástrofe até 2 t_C")
    t_star, w_cross = best
    if not (w_cross + lo_i <= base_lo and base_hi <= w_cross + hi_i):
        raise InvariantViolationError(f"Base não contida no levantamento de I em t* = {t_star}")
    return t_star


def sweep_heights(cfg: TConfiguration) -> Tuple[Surd, Surd]:
    """Alturas t* das peças com base em [P, A] e em [P, B]."""
    zero = _zero(cfg.frame)
    heights = []
    for sigma in (cfg.sigma_a, cfg.sigma_b):
        heights.append(_first_catastrophe(cfg, min(zero, sigma), max(zero, sigma)))
    return heights[0], heights[1]


def _piece(cfg: TConfiguration, leg_a, leg_b, cross_a, cross_b) -> PlanarParallelogram:
    if cfg.leg_axis == 0:
        rect = PlanarParallelogram.from_bounds(leg_a, leg_b, cross_a, cross_b)
    else:
        rect = PlanarParallelogram.from_bounds(cross_a, cross_b, leg_a, leg_b)
    return rect.translated(*cfg.origin)


def build_qmp(cfg: TConfiguration) -> TorusPartition:
    """
    qMp de duas peças: as bases [P, A] e [P, B] da travessa varridas ao
    longo do raio até a primeira catástrofe.
    """
    zero = _zero(cfg.frame)
    pieces = []
    for sigma, height in zip((cfg.sigma_a, cfg.sigma_b), sweep_heights(cfg)):
        pieces.append(_piece(cfg, zero, cfg.leg_sign * height, zero, sigma))
    return TorusPartition(tuple(pieces), 'qMp', cfg.frame)


def formula_geometry(cfg: TConfiguration) -> TorusPartition:
    """Peças com alturas t_B (base PA) e t_A (base PB), sem varrimento."""
    zero = _zero(cfg.frame)
    pieces = (
        _piece(cfg, zero, cfg.leg_sign * cfg.t_b, zero, cfg.sigma_a),
        _piece(cfg, zero, cfg.leg_sign * cfg.t_a, zero, cfg.sigma_b),
    )
    return TorusPartition(pieces, 'qMp', cfg.frame)


def markov_dynamics(A: MatZ2) -> MatZ2:
    """±A com autovalor instável positivo."""
    eig = eigen_data(A)
    return A if eig.lambda_u > 0 else -A


def default_window(cf: CFExpansion) -> Tuple[int, int]:
    """Intervalo [0, k_stop) de índices k com folga de períodos completos."""
    periods = int(_config().get_section('enumeration').get('window_periods', 2))
    return (0, len(cf.preperiod) + periods * len(cf.period) + 3)


def _sequence_position(cf: CFExpansion, k: int, l: int) -> int:
    """Posição de (k, l) na sequência, contada a partir de (0, 1)."""
    return sum(cf.term(j + 1) for j in range(k)) + (l - 1)


def _vertex_entry(
    dynamics: MatZ2,
    frame: Frame,
    cf: CFExpansion,
    k: int,
    l: int,
) -> Optional[VertexPreMp]:
    v_a = convergent_pair(cf, k)
    v_b = intermediate_fraction(cf, k, l)
    cfg = t_configuration_from_pair(frame, v_a, v_b)
    if cfg.t_a <= 0 or cfg.t_b <= 0 or cfg.sigma_a.sign() == cfg.sigma_b.sign():
        logger.debug(f"(k, l) = ({k}, {l}) sem configuração T: {v_a}, {v_b}")
        return None

    notes = verify_t_configuration(cfg)
    if notes:
        geometry = formula_geometry(cfg)
    else:
        heights = sweep_heights(cfg)
        if heights != (cfg.t_b, cfg.t_a):
            notes.append(f"Alturas do varrimento {heights} diferem de (t_B, t_A)")
            geometry = formula_geometry(cfg)
        else:
            geometry = build_qmp(cfg)
    geometry = geometry.with_kind('preMp')

    validation = validate_partition(geometry, 'preMp', dynamics, vertex=True)
    notes.extend(validation.errors)
    ptype = 'island' if l == cf.term(k + 1) else 'parquet'
    return VertexPreMp(
        side='+u',
        k=k,
        l=l,
        position=_sequence_position(cf, k, l),
        A_pt=tuple(v_a),
        B_pt=tuple(v_b),
        geometry=geometry,
        ptype=ptype,
        t_a=cfg.t_a,
        t_b=cfg.t_b,
        sigma_a=cfg.sigma_a,
        sigma_b=cfg.sigma_b,
        guaranteed=not notes,
        notes=tuple(notes),
    )


def _derived(entry: VertexPreMp, side: str, geometry: TorusPartition, dynamics: MatZ2) -> VertexPreMp:
    validation = validate_partition(geometry, 'preMp', dynamics, vertex=True)
    negate = side.startswith('-')
    return VertexPreMp(
        side=side,
        k=entry.k,
        l=entry.l,
        position=entry.position,
        A_pt=(-entry.A_pt[0], -entry.A_pt[1]) if negate else entry.A_pt,
        B_pt=(-entry.B_pt[0], -entry.B_pt[1]) if negate else entry.B_pt,
        geometry=geometry,
        ptype=entry.ptype,
        t_a=entry.t_a,
        t_b=entry.t_b,
        sigma_a=entry.sigma_a,
        sigma_b=entry.sigma_b,
        guaranteed=entry.guaranteed and validation.is_valid,
        notes=entry.notes + tuple(validation.errors),
    )


def stable_class_geometry(entry: VertexPreMp) -> TorusPartition:
    """
    Translada a preMp da classe +e_u levando o extremo da travessa com σ < 0
    ao ponto fixo; o segmento estável passa a ser a perna no sentido +e_s.
    """
    sigma = entry.sigma_a if entry.sigma_a < 0 else entry.sigma_b
    return entry.geometry.translated(0, -sigma)


def enumerate_vertex_premps(
    A: MatZ2,
    window: Optional[Tuple[int, int]] = None,
    sides: Sequence[str] = SIDES,
) -> List[VertexPreMp]:
    """
    Enumera as entradas (k, l) da sequência de preMps de tipo vértice.

    Args:
        A: Matriz hiperbólica
        window: Intervalo [k_lo, k_hi) de índices de reduzidas
        sides: Classes largas desejadas ('+u', '+s', '-u', '-s')

    Returns:
        Entradas ordenadas por classe e posição; `guaranteed` marca as que
        passaram em todas as verificações exatas

    Raises:
        NotHyperbolicError: Se A não é hiperbólica
    """
    require_hyperbolic(A)
    eig, frame = matrix_frame(A)
    dynamics = markov_dynamics(A)
    cf = expand(eig.kappa)
    k_lo, k_hi = window or default_window(cf)

    base: List[VertexPreMp] = []
    for k in range(k_lo, k_hi):
        for l in range(1, cf.term(k + 1) + 1):
            entry = _vertex_entry(dynamics, frame, cf, k, l)
            if entry is not None:
                base.append(entry)

    first = next((e for e in base if e.guaranteed), None)
    if first is None:
        logger.warning(f"Nenhuma entrada garantida em k ∈ [{k_lo}, {k_hi}) para {A.to_text()}")
    else:
        logger.info(
            f"Sequência de {A.to_text()}: janela k ∈ [{k_lo}, {k_hi}), garantida a partir de k = {first.k}"
        )

    results: List[VertexPreMp] = []
    for side in sides:
        for entry in base:
            if side == '+u':
                results.append(entry)
            elif side == '-u':
                results.append(_derived(entry, side, entry.geometry.negated(), dynamics))
            elif side == '+s':
                results.append(_derived(entry, side, stable_class_geometry(entry), dynamics))
            elif side == '-s':
                results.append(_derived(entry, side, stable_class_geometry(entry).negated(), dynamics))
            else:
                raise ValueError(f"Classe desconhecida: {side}")
    return results


def check_nesting(entries: Sequence[VertexPreMp]) -> bool:
    """I^u cresce e I^s encolhe ao longo da sequência (entradas garantidas)."""
    ordered = sorted((e for e in entries if e.guaranteed), key=lambda e: e.position)
    for prev, cur in zip(ordered, ordered[1:]):
        lo_p, hi_p = prev.stable_segment
        lo_c, hi_c = cur.stable_segment
        if not prev.unstable_length < cur.unstable_length:
            return False
        if not (lo_p <= lo_c and hi_c <= hi_p):
            return False
    return True


def classify_type(entry: VertexPreMp) -> str:
    """Ilha se e somente se l = b_{k+1}."""
    return entry.ptype


def geometric_type(entry: VertexPreMp) -> str:
    """Ilha quando |PA| > |PB| na travessa."""
    return 'island' if abs(entry.sigma_a) > abs(entry.sigma_b) else 'parquet'


def adjacency_vectors(frame: Frame, piece: PlanarParallelogram) -> List[LatticePoint]:
    """Translações w != 0 para as quais Π e Π + w têm um lado em comum de comprimento positivo."""
    found = set()
    for du in (piece.u_len, -piece.u_len):
        w = frame.lattice_with_c1(du)
        if w is not None and abs(frame.lattice_coords(w)[1]) < piece.s_len:
            found.add(w)
    for ds in (piece.s_len, -piece.s_len):
        w = frame.lattice_with_c2(ds)
        if w is not None and abs(frame.lattice_coords(w)[0]) < piece.u_len:
            found.add(w)
    return sorted(found)


def subgroup_rank(vectors: Sequence[LatticePoint]) -> int:
    if not vectors:
        return 0
    x0, y0 = vectors[0]
    if any(x0 * y - y0 * x != 0 for x, y in vectors[1:]):
        return 2
    return 1


def flood_components(
    steps: Sequence[LatticePoint],
    basis: Tuple[LatticePoint, LatticePoint],
    size: int = FLOOD_PATCH,
) -> int:
    """
    Componentes conexas dos transladados m·v_A + n·v_B (0 <= m, n < size)
    ligados pelos passos de adjacência.
    """
    (a, c), (b, d) = basis
    det = a * d - b * c
    if det not in (1, -1):
        raise InvariantViolationError(f"Base {basis} não é base de Z^2")
    local_steps = []
    for x, y in steps:
        m = (d * x - b * y) * det
        n = (-c * x + a * y) * det
        local_steps.append((m, n))

    patch = nx.Graph()
    patch.add_nodes_from((m, n) for m in range(size) for n in range(size))
    for m, n in list(patch.nodes):
        for dm, dn in local_steps:
            if (m + dm, n + dn) in patch:
                patch.add_edge((m, n), (m + dm, n + dn))
    return nx.number_connected_components(patch)


def connectivity_type(entry: VertexPreMp, size: int = FLOOD_PATCH) -> Optional[str]:
    """
    Tipo pela conectividade dos transladados num retalho size x size:
    uma peça isolada e outra conexa (ilha) ou duas famílias de faixas (parquet).
    """
    frame = entry.geometry.frame
    labels = []
    for piece in entry.geometry.pieces:
        steps = adjacency_vectors(frame, piece)
        components = flood_components(steps, (entry.A_pt, entry.B_pt), size)
        rank = subgroup_rank(steps)
        if components == size * size and rank == 0:
            labels.append('islands')
        elif components == 1 and rank == 2:
            labels.append('ocean')
        elif rank == 1:
            labels.append('stripes')
        else:
            labels.append('unknown')
    labels.sort()
    if labels == ['islands', 'ocean']:
        return 'island'
    if labels == ['stripes', 'stripes']:
        return 'parquet'
    return None


def type_agreement(entry: VertexPreMp) -> Dict[str, Optional[str]]:
    """Os três critérios de tipo lado a lado."""
    return {
        'formula': classify_type(entry),
        'geometric': geometric_type(entry),
        'connectivity': connectivity_type(entry),
    }


def shift_offset(entries: Sequence[VertexPreMp], M: MatZ2) -> Optional[int]:
    """
    Deslocamento s tal que M leva a entrada na posição n à da posição n + s
    (verificado nas entradas garantidas cuja imagem cai na janela).
    """
    guaranteed = [e for e in entries if e.guaranteed]
    index = {(e.A_pt, e.B_pt): e.position for e in guaranteed}
    offsets = set()
    for entry in guaranteed:
        image = (M.apply(entry.A_pt), M.apply(entry.B_pt))
        if image in index:
            offsets.add(index[image] - entry.position)
    if len(offsets) != 1:
        logger.debug(f"Deslocamentos inconsistentes para {M.to_text()}: {offsets}")
        return None
    return offsets.pop()


def centralizer_generator(A: MatZ2, search_bound: Optional[int] = None) -> MatZ2:
    """
    Gerador B do centralizador: C(A) = {±B^n}.

    Parte da autoconjugação de um período e normaliza para autovalor
    instável λ_B > 1.

    Raises:
        NotHyperbolicError: Se A não é hiperbólica
        InvariantViolationError: Se alguma verificação exata falha
    """
    require_hyperbolic(A)
    bound = search_bound or _config().get_limit('search_bound')
    eig = eigen_data(A)
    B = self_conjugator(A, 1).matrix
    lam = B.c * eig.kappa + B.d
    if abs(lam) < 1:
        B = B.inverse()
        lam = 1 / lam
    if lam < 0:
        B = -B
        lam = -lam

    if A @ B != B @ A:
        raise InvariantViolationError(f"B = {B.to_text()} não comuta com A")
    if B.apply((eig.kappa, 1)) != (lam * eig.kappa, lam):
        raise InvariantViolationError("Direção instável de B difere de κ_A")
    power = B
    for m in range(1, bound + 1):
        if power == A or power == -A:
            logger.debug(f"Centralizador de {A.to_text()}: B = {B.to_text()}, A = ±B^{m}")
            return B
        power = power @ B
    raise InvariantViolationError(f"A != ±B^m para m <= {bound}")


def count_classes(A: MatZ2, cross_check: bool = False, max_entries: Optional[int] = None) -> ClassCount:
    """
    Número de classes de preMps de tipo vértice: 2·(soma do período),
    2·(comprimento do período) do tipo ilha.

    Com cross_check, enumera a classe +e_u, verifica que o gerador do
    centralizador desloca a sequência de S posições e que as posições
    módulo S trazem S classes, L delas ilhas. A verificação é omitida quando
    a janela passa de `max_entries` entradas (k, l).

    Raises:
        NotHyperbolicError: Se A não é hiperbólica
        InvariantViolationError: Se a enumeração contradiz a fórmula
    """
    require_hyperbolic(A)
    cf = expand(eigen_data(A).kappa)
    S = sum(cf.period)
    L = len(cf.period)
    formula = ClassCount(2 * S, 2 * L, 2 * (S - L))
    if not cross_check:
        return formula

    limit = max_entries or _config().get_limit('cross_check_entries')
    k_lo, k_hi = default_window(cf)
    cost = sum(cf.term(k + 1) for k in range(k_lo, k_hi))
    if cost > limit:
        logger.warning(f"Verificação cruzada de {A.to_text()} omitida: {cost} entradas (limite {limit})")
        return formula

    entries = [
        e for e in enumerate_vertex_premps(A, sides=('+u',))
        if e.guaranteed and e.k + 1 >= len(cf.preperiod)
    ]
    shift = shift_offset(entries, centralizer_generator(A))
    residues = {e.position % S for e in entries}
    islands = {e.position % S for e in entries if e.ptype == 'island'}
    if not (shift == S and len(residues) == S and len(islands) == L):
        raise InvariantViolationError(
            f"Verificação cruzada de {A.to_text()}: deslocamento {shift}, "
            f"{len(residues)} resíduos, {len(islands)} ilhas (esperado {S}, {S}, {L})"
        )
    return ClassCount(formula.total, formula.island, formula.parquet, shift, True)


def edge_type_shifts(A: MatZ2, base: VertexPreMp) -> List[TorusPartition]:
    """
    preMps obtidas da preMp de vértice `base` (classe +e_u) por deslocamento
    ao longo de e_u até um ponto do reticulado de pontos fixos.

    Cada ponto z = x e_u - y e_s desse reticulado com x no segmento instável
    e y na travessa dá a partição deslocada de -x e_u; a lista começa pela
    própria base e só contém partições que passam na validação.
    """
    require_hyperbolic(A)
    if base.side != '+u':
        raise ValueError("edge_type_shifts parte de uma entrada da classe +u")
    _, frame = matrix_frame(A)
    dynamics = markov_dynamics(A)
    lo, hi = base.stable_segment
    outputs = [base.geometry]
    for f in fixpoints(A):
        if f == (0, 0):
            continue
        for zu, _ in frame.points_in_box(0, base.unstable_length, -hi, -lo, offset=f):
            shifted = base.geometry.translated(-zu, 0)
            result = validate_partition(shifted, 'preMp', dynamics, edge=True)
            if result.is_valid:
                outputs.append(shifted)
            else:
                logger.warning(f"Deslocamento por {zu} rejeitado: {result.errors}")
    return outputs


def edge_type_box(base: VertexPreMp) -> Tuple[Surd, Surd, Surd, Surd]:
    """Caixa (u0, u1, s0, s1) onde os pontos do reticulado de pontos fixos são procurados."""
    lo, hi = base.stable_segment
    zero = coerce(0, lo.D)
    return (zero, base.unstable_length, -hi, -lo)


__all__ = [
    'Crossing',
    'ClassCount',
    'crossings',
    't_configuration',
    't_configuration_from_pair',
    'verify_t_configuration',
    'sweep_heights',
    'build_qmp',
    'formula_geometry',
    'markov_dynamics',
    'default_window',
    'enumerate_vertex_premps',
    'stable_class_geometry',
    'check_nesting',
    'classify_type',
    'geometric_type',
    'adjacency_vectors',
    'subgroup_rank',
    'flood_components',
    'connectivity_type',
    'type_agreement',
    'shift_offset',
    'centralizer_generator',
    'count_classes',
    'edge_type_shifts',
    'edge_type_box',
]
