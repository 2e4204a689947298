"""
Serviço da demonstração de mistura.

Rasteriza um gato X numa grade g x g, aplica Â^n aos centros das células
com aritmética inteira módulo 2g e mede mes(Â^n X ∩ Y) contra
mes(X)·mes(Y).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np
from matplotlib import image as mpimg

from src.models.matrix import MatZ2, require_hyperbolic
from src.utils.config import Config
from src.utils.logger import Logger

logger = Logger(__name__)

MIXING_TOLERANCE = 0.10
INT64_LIMIT = 2 ** 63


@dataclass(frozen=True)
class MixingResult:
    """Medidas da iteração n: mes(X), mes(Y) e mes(Â^n X ∩ Y)."""

    grid: int
    iterations: int
    mes_x: Fraction
    mes_y: Fraction
    overlap: Fraction

    @property
    def product(self) -> Fraction:
        return self.mes_x * self.mes_y

    @property
    def deviation(self) -> float:
        """|mes(Â^n X ∩ Y)/mes(Y) - mes(X)|."""
        return float(abs(self.overlap / self.mes_y - self.mes_x))

    @property
    def mixed(self) -> bool:
        return self.deviation <= MIXING_TOLERANCE


def cat_mask(grid: int) -> np.ndarray:
    """
    Silhueta de gato (cabeça, orelhas e corpo) amostrada nos centros das
    células; índice [i, j] = célula da coluna i e linha j.
    """
    centers = (2 * np.arange(grid) + 1) / (2 * grid)
    x, y = np.meshgrid(centers, centers, indexing='ij')
    head = (x - 0.5) ** 2 + (y - 0.62) ** 2 <= 0.16 ** 2
    body = ((x - 0.5) / 0.22) ** 2 + ((y - 0.3) / 0.17) ** 2 <= 1
    ears = np.zeros_like(head)
    for tip_x in (0.38, 0.62):
        within = (y >= 0.72) & (y <= 0.9)
        half = 0.08 * (1 - (y - 0.72) / 0.18)
        ears |= within & (np.abs(x - tip_x) <= half)
    return head | body | ears


def rect_mask(grid: int, rect: Sequence[float]) -> np.ndarray:
    """Células cujo centro está em [x0, x1) x [y0, y1)."""
    x0, y0, x1, y1 = rect
    if not (0 <= x0 < x1 <= 1 and 0 <= y0 < y1 <= 1):
        raise ValueError(f"Retângulo Y inválido: {rect}")
    centers = (2 * np.arange(grid) + 1) / (2 * grid)
    x, y = np.meshgrid(centers, centers, indexing='ij')
    return (x >= x0) & (x < x1) & (y >= y0) & (y < y1)


def _iterate_centers(A: MatZ2, mask: np.ndarray, iterations: int):
    """Centros (2i+1, 2j+1) das células de mask levados por A^n módulo 2g."""
    require_hyperbolic(A)
    modulus = 2 * mask.shape[0]
    a, b, c, d = (v % modulus for v in (A.a, A.b, A.c, A.d))
    # entradas < modulus: cada passo fica abaixo de 2·modulus^2
    dtype = np.int64 if 2 * modulus * modulus < INT64_LIMIT else object
    i, j = np.nonzero(mask)
    x = (2 * i + 1).astype(dtype)
    y = (2 * j + 1).astype(dtype)
    for _ in range(iterations):
        x, y = (a * x + b * y) % modulus, (c * x + d * y) % modulus
    return x.astype(np.int64), y.astype(np.int64)


def iterate_mask(A: MatZ2, mask: np.ndarray, iterations: int) -> np.ndarray:
    """Imagem Â^n do conjunto de células: marca a célula que contém cada centro levado."""
    x, y = _iterate_centers(A, mask, iterations)
    image = np.zeros_like(mask)
    image[x // 2, y // 2] = True
    return image


def _image_in_rect(A: MatZ2, mask: np.ndarray, iterations: int, rect: Sequence[Fraction]) -> int:
    """Número de centros de X cuja imagem exata cai em Y."""
    modulus = 2 * mask.shape[0]
    x, y = _iterate_centers(A, mask, iterations)
    x0, y0, x1, y1 = (math.ceil(v * modulus) for v in rect)
    inside = (x >= x0) & (x < x1) & (y >= y0) & (y < y1)
    return int(np.count_nonzero(inside))


def measure_mixing(
    A: MatZ2,
    grid: Optional[int] = None,
    iterations: Optional[int] = None,
    rect: Optional[Sequence[float]] = None,
) -> MixingResult:
    """
    Estima mes(Â^n X ∩ Y) contando os centros de X cujas imagens caem em Y.

    Args:
        A: Matriz hiperbólica
        grid: Lado da grade (padrão mixing.grid)
        iterations: n (padrão mixing.iters)
        rect: Y = (x0, y0, x1, y1) (padrão mixing.y_rect)
    """
    config = Config()
    section = config.get_section('mixing')
    grid = grid or int(section.get('grid', 512))
    iterations = int(section.get('iters', 3)) if iterations is None else iterations
    rect = [Fraction(str(v)) for v in (rect or config.get_y_rect())]
    if grid < 2:
        raise ValueError(f"Grade pequena demais: {grid}")

    x_mask = cat_mask(grid)
    cells = grid * grid
    mes_x = Fraction(int(np.count_nonzero(x_mask)), cells)
    x0, y0, x1, y1 = rect
    if not (0 <= x0 < x1 <= 1 and 0 <= y0 < y1 <= 1):
        raise ValueError(f"Retângulo Y inválido: {rect}")
    mes_y = (x1 - x0) * (y1 - y0)
    overlap = Fraction(_image_in_rect(A, x_mask, iterations, rect), cells)
    result = MixingResult(grid, iterations, mes_x, mes_y, overlap)
    logger.info(
        f"Mistura {A.to_text()} n = {iterations}: mes(X) = {float(mes_x):.4f}, "
        f"mes(Â^n X ∩ Y)/mes(Y) = {float(overlap / mes_y):.4f}"
    )
    return result


def render_frames(
    A: MatZ2,
    directory: Path,
    grid: Optional[int] = None,
    iterations: Optional[int] = None,
) -> List[Path]:
    """Grava X, ÂX, ..., Â^n X como PNG (um arquivo por iteração)."""
    config = Config()
    section = config.get_section('mixing')
    grid = grid or int(section.get('grid', 512))
    iterations = int(section.get('iters', 3)) if iterations is None else iterations
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    mask = cat_mask(grid)
    paths = []
    for n in range(iterations + 1):
        frame = iterate_mask(A, mask, n) if n else mask
        path = directory / f"frame_{n:02d}.png"
        # imagem com a linha 0 no topo: transpor e inverter o eixo y
        mpimg.imsave(path, np.flipud(frame.T).astype(float), cmap='Greys', vmin=0.0, vmax=1.0)
        paths.append(path)
    logger.debug(f"{len(paths)} quadros em {directory}")
    return paths


__all__ = [
    'MIXING_TOLERANCE',
    'MixingResult',
    'cat_mask',
    'rect_mask',
    'iterate_mask',
    'measure_mixing',
    'render_frames',
]
