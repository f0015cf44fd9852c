"""Shared numerical oracles for the test suite.

These are deliberately independent of the library internals: the rotation
oracle works on raw intensity arrays, and the solid-angle oracle works on
raw Bloch points, so they can cross-check the physics modules without
sharing code paths with them.
"""

import numpy as np


def rotate_resample(image, angle):
    """Return the image content rotated counterclockwise by angle (bilinear).

    Pixels sampled from outside the frame contribute zero, so only compare
    images whose support is well inside the grid.
    """
    n = image.shape[0]
    idx = np.arange(n) + 0.5 - n / 2.0
    x, y = np.meshgrid(idx, idx)
    ca, sa = np.cos(-angle), np.sin(-angle)
    xs = ca * x - sa * y
    ys = sa * x + ca * y
    fx = xs + n / 2.0 - 0.5
    fy = ys + n / 2.0 - 0.5
    x0 = np.floor(fx).astype(int)
    y0 = np.floor(fy).astype(int)
    wx = fx - x0
    wy = fy - y0
    out = np.zeros_like(image, dtype=float)
    for dy in (0, 1):
        for dx in (0, 1):
            xi = x0 + dx
            yi = y0 + dy
            valid = (xi >= 0) & (xi < n) & (yi >= 0) & (yi < n)
            w = (wx if dx else 1 - wx) * (wy if dy else 1 - wy)
            out[valid] += w[valid] * image[yi[valid], xi[valid]]
    return out


def loop_solid_angle(points):
    """Signed solid angle enclosed by a closed loop of Bloch points.

    points: (N, 3) array tracing the loop; the last point should coincide
    with the first (a duplicate closing point is tolerated but not required).
    Uses the spherical shoelace about the loop's own mean-normal pole, which
    is robust for the near-planar circles the tests generate.
    """
    p = np.asarray(points, dtype=float)
    if np.allclose(p[0], p[-1]):
        p = p[:-1]
    p = p / np.linalg.norm(p, axis=1, keepdims=True)
    cross = np.cross(p, np.roll(p, -1, axis=0))
    pole = cross.sum(axis=0)
    pole = pole / np.linalg.norm(pole)
    # Orthonormal frame about the pole for azimuth bookkeeping.
    trial = np.array([1.0, 0.0, 0.0])
    if abs(pole @ trial) > 0.9:
        trial = np.array([0.0, 1.0, 0.0])
    e1 = trial - (trial @ pole) * pole
    e1 = e1 / np.linalg.norm(e1)
    e2 = np.cross(pole, e1)
    phi = np.arctan2(p @ e2, p @ e1)
    cos_theta = p @ pole
    # Per-segment azimuth increments, each wrapped into (-pi, pi]; needs the
    # loop sampled finely enough that no single hop exceeds half a turn.
    seg = np.diff(np.append(phi, phi[0]))
    seg = (seg + np.pi) % (2.0 * np.pi) - np.pi
    cos_mid = 0.5 * (cos_theta + np.roll(cos_theta, -1))
    return float(np.sum((1.0 - cos_mid) * seg))
