"""
Serviço de renderização SVG.

A conversão de coordenadas exatas para float acontece só aqui: as peças
de uma partição são projetadas no plano padrão, replicadas pelos
transladados inteiros que encontram a janela e desenhadas pelos templates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.models.partition import PlanarParallelogram, TorusPartition, VertexPreMp
from src.services.lattice_service import Frame
from src.templates.svg_template import SvgTemplate
from src.utils.config import Config
from src.utils.logger import Logger

logger = Logger(__name__)

Window = Tuple[float, float, float, float]
DEFAULT_PATCH: Window = (-1.5, -1.5, 1.5, 1.5)
STRIP_MARGIN = 10
STRIP_LABEL_HEIGHT = 24


@dataclass(frozen=True)
class RenderSpec:
    """Dimensões em pixels, janela (x0, y0, x1, y1) do plano e paleta."""

    width_px: int
    height_px: int
    patch: Window = DEFAULT_PATCH
    palette: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        x0, y0, x1, y1 = self.patch
        if not (x0 < x1 and y0 < y1):
            raise ValueError(f"Janela vazia: {self.patch}")
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("Dimensões precisam ser positivas")

    @classmethod
    def from_config(cls, patch: Optional[Window] = None, config: Optional[Config] = None) -> 'RenderSpec':
        config = config or Config()
        section = config.get_section('render')
        return cls(
            width_px=int(section.get('width_px', 800)),
            height_px=int(section.get('height_px', 800)),
            patch=tuple(patch) if patch else DEFAULT_PATCH,
            palette=config.get_palette(),
        )

    def piece_color(self, index: int) -> str:
        colors = self.palette.get('pieces') or ['#4c9f70', '#d1495b']
        return colors[index % len(colors)]

    def type_color(self, ptype: str) -> str:
        return self.palette.get(ptype, '#555555')


def piece_corners(frame: Frame, piece: PlanarParallelogram) -> List[Tuple[float, float]]:
    """Vértices padrão do paralelogramo, em ordem ao redor do contorno."""
    corners = [
        (piece.u0, piece.s0), (piece.u1, piece.s0), (piece.u1, piece.s1), (piece.u0, piece.s1),
    ]
    return [tuple(float(v) for v in frame.point(u, s)) for u, s in corners]


def lifted_polygons(
    partition: TorusPartition,
    window: Window,
) -> List[Tuple[int, List[Tuple[float, float]]]]:
    """(índice da peça, vértices) para cada transladado Π_i + (m, n) que encontra a janela."""
    x0, y0, x1, y1 = window
    found = []
    for index, piece in enumerate(partition.pieces):
        corners = piece_corners(partition.frame, piece)
        xs = [x for x, _ in corners]
        ys = [y for _, y in corners]
        for m in range(math.floor(x0 - max(xs)), math.ceil(x1 - min(xs)) + 1):
            for n in range(math.floor(y0 - max(ys)), math.ceil(y1 - min(ys)) + 1):
                if min(xs) + m > x1 or max(xs) + m < x0 or min(ys) + n > y1 or max(ys) + n < y0:
                    continue
                found.append((index, [(x + m, y + n) for x, y in corners]))
    return found


def _project(point: Tuple[float, float], window: Window, box: Tuple[float, float, float, float]) -> str:
    """Janela do plano -> caixa (left, top, w, h) em pixels, com y para cima."""
    x0, y0, x1, y1 = window
    left, top, w, h = box
    px = left + (point[0] - x0) / (x1 - x0) * w
    py = top + (y1 - point[1]) / (y1 - y0) * h
    return f"{px:.3f},{py:.3f}"


def _polygons(partition: TorusPartition, spec: RenderSpec, box, colors: Sequence[str]) -> List[Dict[str, str]]:
    return [
        {
            'points': ' '.join(_project(p, spec.patch, box) for p in corners),
            'fill': colors[index % len(colors)],
            'label': f"Π_{index}",
        }
        for index, corners in lifted_polygons(partition, spec.patch)
    ]


def render_partition_svg(
    partition: TorusPartition,
    spec: RenderSpec,
    title: Optional[str] = None,
    colors: Optional[Sequence[str]] = None,
) -> str:
    """Retalho do plano com os levantamentos das peças e os pontos do reticulado."""
    colors = list(colors or [spec.piece_color(i) for i in range(len(partition))])
    box = (0.0, 0.0, float(spec.width_px), float(spec.height_px))
    x0, y0, x1, y1 = spec.patch
    markers = []
    for m in range(math.ceil(x0), math.floor(x1) + 1):
        for n in range(math.ceil(y0), math.floor(y1) + 1):
            px, py = _project((m, n), spec.patch, box).split(',')
            markers.append({'x': px, 'y': py})
    data = {
        'width': spec.width_px,
        'height': spec.height_px,
        'title': title or f"{partition.kind} com {len(partition)} peças",
        'polygons': _polygons(partition, spec, box, colors),
        'markers': markers,
    }
    return SvgTemplate('partition.svg.j2').render(data)


def render_strip_svg(entries: Sequence[VertexPreMp], spec: RenderSpec, title: Optional[str] = None) -> str:
    """Painéis lado a lado de preMps consecutivas, com borda na cor do tipo (ilha/parquet)."""
    if not entries:
        raise ValueError("Faixa sem entradas")
    count = len(entries)
    panel_w = (spec.width_px - STRIP_MARGIN * (count + 1)) / count
    panel_h = spec.height_px - 2 * STRIP_MARGIN - STRIP_LABEL_HEIGHT
    if panel_w <= 0 or panel_h <= 0:
        raise ValueError(f"Dimensões {spec.width_px}x{spec.height_px} pequenas demais para {count} painéis")

    panels = []
    for i, entry in enumerate(entries):
        left = STRIP_MARGIN + i * (panel_w + STRIP_MARGIN)
        top = STRIP_MARGIN + STRIP_LABEL_HEIGHT
        box = (left, top, panel_w, panel_h)
        colors = [spec.type_color(entry.ptype), spec.piece_color(1)]
        panels.append({
            'x': f"{left:.3f}",
            'y': f"{top:.3f}",
            'w': f"{panel_w:.3f}",
            'h': f"{panel_h:.3f}",
            'label_x': f"{left:.3f}",
            'label_y': f"{top - 6:.3f}",
            'label': f"{'I' if entry.ptype == 'island' else 'P'} (k={entry.k}, l={entry.l})",
            'ptype': entry.ptype,
            'color': spec.type_color(entry.ptype),
            'polygons': _polygons(entry.geometry, spec, box, colors),
        })
    data = {
        'width': spec.width_px,
        'height': spec.height_px,
        'title': title or f"Sequência de {count} preMps",
        'panels': panels,
    }
    return SvgTemplate('strip.svg.j2').render(data)


def write_svg(path: Path, content: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding='utf-8')
    logger.info(f"SVG gravado em {path}")
    return path


__all__ = [
    'RenderSpec',
    'piece_corners',
    'lifted_polygons',
    'render_partition_svg',
    'render_strip_svg',
    'write_svg',
]
