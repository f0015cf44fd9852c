"""Deterministic phase-and-brightness rendering of complex fields.

The mapping is the usual complex-plane coloring: hue encodes the phase
(one full color cycle per 2 pi) and brightness encodes the probability
density, optionally gamma adjusted for display. Output is a binary
portable pixmap (P6, 8-bit RGB), chosen because it is dependency free
and byte reproducible. Image rows run top to bottom with +y up, so the
scale bar's corner offset is measured from the bottom-left pixel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import PhysicsDomainError
from .fields import ComplexField

SCALE_BAR_THICKNESS_PX = 2
SCALE_BAR_MARGIN_PX = 8


@dataclass(frozen=True)
class ImageSpec:
    """Rendering parameters.

    width and height default to the field's grid size; setting them to
    anything else selects nearest-neighbor resampling. gamma_display
    is applied as value = (intensity / max)^(1 / gamma_display), with 1
    meaning linear probability. The scale bar, when enabled, is a white
    horizontal bar of the given physical length near the bottom-left
    corner.
    """

    width: Optional[int] = None
    height: Optional[int] = None
    gamma_display: float = 1.0
    scale_bar: bool = False
    scale_bar_length: float = 0.0

    def __post_init__(self) -> None:
        if self.gamma_display <= 0:
            raise PhysicsDomainError(
                f"gamma must be positive, got {self.gamma_display}"
            )
        for name in ("width", "height"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise PhysicsDomainError(f"{name} must be >= 1, got {value}")
        if self.scale_bar and self.scale_bar_length <= 0:
            raise PhysicsDomainError(
                "scale_bar requires a positive scale_bar_length"
            )


def _hsv_to_rgb(hue: np.ndarray, value: np.ndarray) -> np.ndarray:
    """Full-saturation HSV to RGB, standard six-sector formula."""
    h6 = (hue % 1.0) * 6.0
    sector = np.floor(h6).astype(int) % 6
    frac = h6 - np.floor(h6)
    p = np.zeros_like(value)
    q = value * (1.0 - frac)
    t = value * frac
    rgb = np.empty(hue.shape + (3,))
    tables = [
        (value, t, p),
        (q, value, p),
        (p, value, t),
        (p, q, value),
        (t, p, value),
        (value, p, q),
    ]
    for s, (r, g, b) in enumerate(tables):
        mask = sector == s
        rgb[mask, 0] = r[mask]
        rgb[mask, 1] = g[mask]
        rgb[mask, 2] = b[mask]
    return rgb


def render_field(field: ComplexField, spec: ImageSpec = ImageSpec()) -> bytes:
    """Render a field to P6 pixmap bytes; pure function of its inputs."""
    n = field.grid.samples_per_side
    width = spec.width or n
    height = spec.height or n

    # Nearest-neighbor source indices; identity when size matches grid.
    cols = np.minimum(((np.arange(width) + 0.5) * n / width).astype(int), n - 1)
    rows_top_down = np.arange(height)
    y_from_bottom = height - 1 - rows_top_down
    rows = np.minimum(((y_from_bottom + 0.5) * n / height).astype(int), n - 1)
    amp = field.amplitudes[np.ix_(rows, cols)]

    intensity = np.abs(amp) ** 2
    peak = float(np.max(np.abs(field.amplitudes) ** 2))
    if peak == 0.0:
        value = np.zeros_like(intensity)
    else:
        value = (intensity / peak) ** (1.0 / spec.gamma_display)
    hue = (np.angle(amp) + math.pi) / (2.0 * math.pi)
    rgb = _hsv_to_rgb(hue, value)
    pixels = np.clip(np.rint(rgb * 255.0), 0, 255).astype(np.uint8)

    if spec.scale_bar:
        meters_per_px = 2.0 * field.grid.half_extent / width
        bar_px = int(round(spec.scale_bar_length / meters_per_px))
        bar_px = max(1, min(bar_px, width - SCALE_BAR_MARGIN_PX))
        col0 = SCALE_BAR_MARGIN_PX
        for offset in range(SCALE_BAR_THICKNESS_PX):
            row = height - 1 - (SCALE_BAR_MARGIN_PX + offset)
            if 0 <= row < height:
                pixels[row, col0 : col0 + bar_px] = 255

    header = f"P6\n{width} {height}\n255\n".encode("ascii")
    return header + pixels.tobytes()


def write_image(data: bytes, path: str) -> None:
    with open(path, "wb") as fh:
        fh.write(data)
