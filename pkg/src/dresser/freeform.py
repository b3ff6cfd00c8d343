"""Free-form brush-stroke masks for the inpainting training task.

Masks are unions of random polyline strokes with circular caps, in the style
of the sketch-mask generators used by gated-convolution inpainting models.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from PIL import Image, ImageDraw

# Brush geometry is specified at this reference resolution and scaled
# proportionally for other sizes.
_REF_HEIGHT = 256


@dataclass(frozen=True)
class BrushParams:
    strokes: tuple[int, int] = (1, 5)          # inclusive stroke count range
    vertices: tuple[int, int] = (4, 9)         # inclusive vertices per stroke
    width_px: tuple[float, float] = (6.0, 16.0)  # brush width at 256-height scale
    segment_px: tuple[float, float] = (12.0, 40.0)  # segment length at 256-height scale
    angle_jitter: float = 1.2                  # radians of random turn per vertex
    fraction: tuple[float, float] = (0.05, 0.5)  # allowed masked-area fraction
    max_attempts: int = 20

    def __post_init__(self):
        if self.strokes[0] < 0 or self.strokes[1] < self.strokes[0]:
            raise ValueError("invalid stroke count range")
        if self.vertices[0] < 2:
            raise ValueError("strokes need at least 2 vertices")
        if not (0.0 <= self.fraction[0] < self.fraction[1] <= 1.0):
            raise ValueError("invalid fraction bounds")


def _stroke_layer(h: int, w: int, rng: np.random.Generator, params: BrushParams,
                  scale: float) -> np.ndarray:
    """Rasterize one polyline brush stroke with circular caps."""
    canvas = Image.new("L", (w, h), 0)
    draw = ImageDraw.Draw(canvas)
    n_vert = int(rng.integers(params.vertices[0], params.vertices[1] + 1))
    width = max(1.0, float(rng.uniform(*params.width_px)) * scale)
    x = float(rng.uniform(0, w))
    y = float(rng.uniform(0, h))
    angle = float(rng.uniform(0, 2 * np.pi))
    r = width / 2.0
    draw.ellipse([x - r, y - r, x + r, y + r], fill=1)
    for _ in range(n_vert - 1):
        angle += float(rng.uniform(-params.angle_jitter, params.angle_jitter))
        length = float(rng.uniform(*params.segment_px)) * scale
        nx = float(np.clip(x + length * np.cos(angle), 0, w - 1))
        ny = float(np.clip(y + length * np.sin(angle), 0, h - 1))
        draw.line([x, y, nx, ny], fill=1, width=max(1, int(round(width))))
        draw.ellipse([nx - r, ny - r, nx + r, ny + r], fill=1)
        x, y = nx, ny
    return np.asarray(canvas, dtype=np.uint8)


def make_freeform_mask(height: int, width: int, params: BrushParams | None = None,
                       rng: np.random.Generator | None = None) -> np.ndarray:
    """Sample a binary H x W mask of random brush strokes.

    Deterministic for a given generator state. The masked fraction is kept
    within params.fraction unless the sampled stroke count is zero, in which
    case an all-zero mask is returned.
    """
    params = params or BrushParams()
    rng = rng if rng is not None else np.random.default_rng()
    scale = height / _REF_HEIGHT
    n_strokes = int(rng.integers(params.strokes[0], params.strokes[1] + 1))
    if n_strokes == 0:
        return np.zeros((height, width), dtype=np.uint8)

    lo, hi = params.fraction
    best, best_err = None, np.inf
    for _ in range(params.max_attempts):
        mask = np.zeros((height, width), dtype=np.uint8)
        budget = n_strokes
        while budget > 0:
            candidate = mask | _stroke_layer(height, width, rng, params, scale)
            if candidate.mean() > hi and mask.any():
                break  # drop the stroke that would overshoot
            mask = candidate
            budget -= 1
        frac = mask.mean()
        if lo <= frac <= hi:
            return mask
        err = max(lo - frac, frac - hi)
        if err < best_err:
            best, best_err = mask, err
        # still below the floor: allow extra strokes on the next attempt
        n_strokes += 1
    return best
