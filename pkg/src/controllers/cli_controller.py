"""Controlador da linha de comando."""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from src.models.conjugacy import ConjugacyWitness, QuadraticForm
from src.models.matrix import MatZ2, eigen_data, fixpoint_count, is_hyperbolic
from src.models.partition import TorusPartition, VertexPreMp
from src.models.reports import (
    ApproximationReport,
    ClassCountReport,
    ClassifyReport,
    ComponentReport,
    ConjugacyReport,
    DoubleReport,
    EdgeReport,
    EntropyReport,
    EntryReport,
    ExactNumber,
    FormReport,
    GraphReport,
    MixReport,
    PartitionReport,
    PieceReport,
    PrempReport,
    Report,
    SequenceReport,
    WitnessReport,
)
from src.services import cfrac_service, conjugacy_service, mixing_service, partition_service
from src.services.refinement_service import refine, transition_graph
from src.services.render_service import RenderSpec, render_partition_svg, render_strip_svg, write_svg
from src.services.symbolic_service import doubling_code, doubling_orbit, matrix_entropy
from src.services.validator_service import validate_partition
from src.utils.config import Config
from src.utils.errors import NotConjugateError, NotHyperbolicError, ParseError, ToruxError
from src.utils.logger import Logger

logger = Logger(__name__)


def _matrix(text: str) -> MatZ2:
    return MatZ2.parse(text)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"Racional mal formado: {text!r}") from None


def _form(text: str) -> QuadraticForm:
    parts = text.split(',')
    try:
        A, B, C = (int(p) for p in parts)
    except ValueError:
        raise ParseError(f"Forma mal formada: {text!r} (esperado 'A,B,C')") from None
    return QuadraticForm(A, B, C)


def _witness(witness: ConjugacyWitness) -> WitnessReport:
    return WitnessReport(word=witness.word_text(), matrix=witness.matrix.to_rows(), det=witness.det)


def _partition(partition: TorusPartition, ptype: Optional[str] = None) -> PartitionReport:
    return PartitionReport(
        kind=partition.kind,
        type=ptype,
        pieces=[PieceReport(**piece.to_dict()) for piece in partition.pieces],
    )


def _entry(entry: VertexPreMp, with_partition: bool = False) -> EntryReport:
    return EntryReport(
        side=entry.side,
        k=entry.k,
        l=entry.l,
        type=entry.ptype,
        position=entry.position,
        A=list(entry.A_pt),
        B=list(entry.B_pt),
        guaranteed=entry.guaranteed,
        partition=_partition(entry.geometry, entry.ptype) if with_partition else None,
    )


def _first_guaranteed(A: MatZ2) -> VertexPreMp:
    entries = partition_service.enumerate_vertex_premps(A, sides=('+u',))
    entry = next((e for e in entries if e.guaranteed), None)
    if entry is None:
        raise ToruxError(f"Nenhuma preMp garantida na janela para {A.to_text()}")
    return entry


class CliController:
    """Executa os subcomandos e escreve o JSON em stdout."""

    def __init__(self, out: Optional[TextIO] = None, config: Optional[Config] = None):
        self.out = out or sys.stdout
        self.config = config or Config()
        self.handlers: Dict[str, Callable[[argparse.Namespace], Report]] = {
            'classify': self.classify,
            'conjugate': self.conjugate,
            'premp': self.premp,
            'entropy': self.entropy,
            'double': self.double,
            'mix': self.mix,
            'form': self.form,
            'graph': self.graph,
        }

    def run(self, args: argparse.Namespace) -> int:
        """
        Executa o subcomando.

        Returns:
            int: Código de saída (0 sucesso, 2 parse, 3 não hiperbólica, 4 invariante)
        """
        try:
            report = self.handlers[args.command](args)
        except ToruxError as e:
            logger.error(f"{type(e).__name__}: {e}")
            return e.exit_code
        self.out.write(report.to_json() + '\n')
        return 0

    def classify(self, args: argparse.Namespace) -> Report:
        if args.matrix2:
            return self.conjugate(args)
        A = _matrix(args.matrix)
        hyperbolic = is_hyperbolic(A)
        report = ClassifyReport(
            matrix=A.to_rows(),
            hyperbolic=hyperbolic,
            trace=A.trace,
            det=A.det,
            discriminant=A.discriminant,
        )
        if not hyperbolic:
            self.out.write(report.to_json() + '\n')
            raise NotHyperbolicError(f"Matriz não hiperbólica: {A.to_text()}")

        eig = eigen_data(A)
        cf = cfrac_service.expand(eig.kappa)
        report.lambda_u = ExactNumber.of(eig.lambda_u)
        report.lambda_s = ExactNumber.of(eig.lambda_s)
        report.kappa = ExactNumber.of(eig.kappa)
        report.cf = SequenceReport.of_cf(cf)
        report.cf_text = cf.to_text()
        report.period = list(cfrac_service.canonical_period(cf))
        report.fixpoint_count = fixpoint_count(A)[0]
        if args.approx:
            q_max = args.q_max or self.config.max_q
            one = cfrac_service.best_approx_one_sided(eig.kappa, q_max)
            two = cfrac_service.best_approx_two_sided(eig.kappa, q_max)
            report.one_sided = [ApproximationReport(p=c.p, q=c.q, side=c.side) for c in one]
            report.two_sided = [ApproximationReport(p=c.p, q=c.q, side=c.side) for c in two]
            report.oracle_agrees = (
                one == cfrac_service.best_approx_one_sided_oracle(eig.kappa, q_max)
                and two == cfrac_service.best_approx_two_sided_oracle(eig.kappa, q_max)
            )
        return report

    def conjugate(self, args: argparse.Namespace) -> Report:
        A, B = _matrix(args.matrix), _matrix(args.matrix2)
        gl = conjugacy_service.are_conjugate_gl(A, B)
        sl = conjugacy_service.are_conjugate_sl(A, B) if gl else False
        period = list(conjugacy_service.period_of(A))
        report = ConjugacyReport(
            matrices=[A.to_rows(), B.to_rows()],
            period=period,
            periods=[period, list(conjugacy_service.period_of(B))],
            gl_conjugate=gl,
            sl_conjugate=sl,
        )
        witness = None
        if gl:
            witness = conjugacy_service.find_conjugator(A, B)
            report.gl_witness = _witness(witness)
        if sl:
            try:
                witness = conjugacy_service.find_sl_conjugator(A, B)
                report.sl_witness = _witness(witness)
            except NotConjugateError:
                report.sl_witness = None
        if witness is not None:
            report.witness_word = witness.word_tokens()
            report.witness_matrix = witness.matrix.to_rows()
        return report

    def premp(self, args: argparse.Namespace) -> Report:
        A = _matrix(args.matrix)
        report = PrempReport(matrix=A.to_rows())
        if args.count or not (args.list or args.render or args.edge_type):
            counts = partition_service.count_classes(A, cross_check=args.cross_check)
            report.counts = ClassCountReport(
                total=counts.total,
                island=counts.island,
                parquet=counts.parquet,
                shift=counts.shift,
                verified=counts.verified,
            )

        entries: List[VertexPreMp] = []
        if args.list:
            entries = [
                e for e in partition_service.enumerate_vertex_premps(A, sides=(args.side,))
                if e.guaranteed
            ][:args.list]
            report.entries = [_entry(e, with_partition=args.pieces) for e in entries]

        if args.edge_type:
            base = _first_guaranteed(A)
            report.edge_type = [_partition(p) for p in partition_service.edge_type_shifts(A, base)]

        if args.render:
            spec = RenderSpec.from_config(config=self.config)
            if entries:
                content = render_strip_svg(entries, spec)
            else:
                base = _first_guaranteed(A)
                content = render_partition_svg(base.geometry, spec)
            report.svg = str(write_svg(Path(args.render), content))
        return report

    def entropy(self, args: argparse.Namespace) -> Report:
        A = _matrix(args.matrix)
        certificate, sizes = matrix_entropy(A)
        return EntropyReport(
            matrix=A.to_rows(),
            lambda_u=ExactNumber.of(certificate.lam),
            ln=certificate.ln,
            log2=certificate.log2,
            determinant_vanishes=certificate.determinant_vanishes,
            perron_float=certificate.perron_float,
            certified=certificate.certified,
            sizes=sizes,
            components=[
                ComponentReport(vertices=list(c.vertices), spectral_radius=c.spectral_radius)
                for c in certificate.components
            ],
        )

    def double(self, args: argparse.Namespace) -> Report:
        x = _fraction(args.x)
        result = doubling_code(x)
        sequence = result.sequence
        return DoubleReport(
            x=str(x),
            steps=args.steps,
            orbit=[str(v) for v in doubling_orbit(x, args.steps)],
            code=list(sequence.prefix(args.steps)),
            sequence=SequenceReport(**sequence.to_dict()),
            ambiguous=result.ambiguous,
            alternate=SequenceReport(**result.alternate.to_dict()) if result.alternate else None,
        )

    def mix(self, args: argparse.Namespace) -> Report:
        A = _matrix(args.matrix)
        result = mixing_service.measure_mixing(A, grid=args.grid, iterations=args.iters)
        frames = None
        if args.frames:
            paths = mixing_service.render_frames(A, Path(args.frames), grid=result.grid, iterations=result.iterations)
            frames = [str(p) for p in paths]
        return MixReport(
            matrix=A.to_rows(),
            grid=result.grid,
            iterations=result.iterations,
            mes_x=ExactNumber.of(result.mes_x),
            mes_y=ExactNumber.of(result.mes_y),
            overlap=ExactNumber.of(result.overlap),
            product=ExactNumber.of(result.product),
            deviation=result.deviation,
            mixed=result.mixed,
            frames=frames,
        )

    def form(self, args: argparse.Namespace) -> Report:
        if args.from_form:
            if args.trace is None or args.det is None:
                raise ParseError("--from-form exige --trace e --det")
            X = conjugacy_service.from_form(_form(args.from_form), args.trace, args.det)
        elif args.matrix:
            X = _matrix(args.matrix)
        else:
            raise ParseError("form exige uma matriz ou --from-form")
        q = conjugacy_service.to_form(X)
        return FormReport(
            matrix=X.to_rows(),
            form={'A': q.A, 'B': q.B, 'C': q.C},
            disc=q.disc,
            trace=X.trace,
            det=X.det,
        )

    def graph(self, args: argparse.Namespace) -> Report:
        A = _matrix(args.matrix)
        dynamics = partition_service.markov_dynamics(A)
        partition = _first_guaranteed(A).geometry
        if args.refine:
            partition = refine(partition, dynamics)
        graph = transition_graph(partition, dynamics)
        strict = validate_partition(partition.with_kind('strMp'), 'strMp', dynamics)
        return GraphReport(
            matrix=A.to_rows(),
            kind=partition.kind,
            vertices=graph.vertex_count,
            edges=[EdgeReport(source=e.source, target=e.target, shift=list(e.shift)) for e in graph.edges],
            adjacency=graph.adjacency(),
            strongly_connected=graph.is_strongly_connected(),
            condition_II=strict.checks.get('condition_II', False),
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='torux',
        description='Automorfismos hiperbólicos do toro em aritmética exata',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    classify = sub.add_parser('classify', help='κ, fração contínua e período; com duas matrizes, conjugação')
    classify.add_argument('matrix', metavar='MATRIX', help="Matriz 'a,b;c,d'")
    classify.add_argument('matrix2', metavar='MATRIX2', nargs='?', help='Segunda matriz (conjugação)')
    classify.add_argument('--approx', action='store_true', help='Melhores aproximações de κ')
    classify.add_argument('--q-max', type=int, default=None, help='Denominador máximo (padrão TORUX_MAX_Q)')

    conjugate = sub.add_parser('conjugate', help='Conjugação em GL(2,Z) e SL(2,Z) com testemunha')
    conjugate.add_argument('matrix', metavar='MATRIX')
    conjugate.add_argument('matrix2', metavar='MATRIX2')

    premp = sub.add_parser('premp', help='preMps de tipo vértice: contagem, lista, SVG, tipo aresta')
    premp.add_argument('matrix', metavar='MATRIX')
    premp.add_argument('--count', action='store_true')
    premp.add_argument('--cross-check', action='store_true', help='Confere a contagem pela enumeração da sequência')
    premp.add_argument('--list', type=int, default=0, metavar='N')
    premp.add_argument('--side', choices=['+u', '+s', '-u', '-s'], default='+u')
    premp.add_argument('--pieces', action='store_true', help='Inclui as peças de cada entrada')
    premp.add_argument('--render', metavar='PATH')
    premp.add_argument('--edge-type', action='store_true')

    entropy = sub.add_parser('entropy', help='Entropia com certificado exato')
    entropy.add_argument('matrix', metavar='MATRIX')

    double = sub.add_parser('double', help='Órbita e código da duplicação')
    double.add_argument('x', metavar='X', help="Racional em [0, 1), ex.: '1/3'")
    double.add_argument('steps', metavar='N', type=int, nargs='?', default=8)

    mix = sub.add_parser('mix', help='Demonstração de mistura')
    mix.add_argument('matrix', metavar='MATRIX')
    mix.add_argument('--grid', type=int, default=None)
    mix.add_argument('--iters', type=int, default=None)
    mix.add_argument('--frames', metavar='DIR', help='Grava os quadros PNG')

    form = sub.add_parser('form', help='Forma quadrática f(X) ou a matriz de uma forma')
    form.add_argument('matrix', metavar='MATRIX', nargs='?')
    form.add_argument('--from-form', metavar='A,B,C')
    form.add_argument('--trace', type=int)
    form.add_argument('--det', type=int)

    graph = sub.add_parser('graph', help='Multigrafo Γ da preMp base')
    graph.add_argument('matrix', metavar='MATRIX')
    graph.add_argument('--refine', action='store_true', help='Usa a strMp refinada')
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return CliController().run(args)


__all__ = ['CliController', 'build_parser', 'main']
