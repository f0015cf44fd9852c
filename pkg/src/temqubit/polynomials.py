"""Generalized Laguerre and physicists' Hermite polynomials, plus the
normalization constant of the Laguerre-Gauss mode family.

Evaluation uses the stable three-term recurrences and supports scalar
or numpy-array arguments. The supported envelope is n <= 32, which is
far above anything the simulator requests; beyond it an
UnsupportedRangeError is raised rather than returning silently
degraded values.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import UnsupportedRangeError

MAX_INDEX = 32


def _check_index(n: int) -> None:
    if n < 0:
        raise UnsupportedRangeError(f"polynomial index must be >= 0, got {n}")
    if n > MAX_INDEX:
        raise UnsupportedRangeError(
            f"polynomial index {n} beyond supported envelope (n <= {MAX_INDEX})"
        )


def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial L_n^alpha(x).

    Recurrence: L_k = ((2k - 1 + alpha - x) L_{k-1} - (k - 1 + alpha) L_{k-2}) / k,
    seeded with L_0 = 1 and L_1 = 1 + alpha - x.
    """
    _check_index(n)
    if alpha <= -1:
        raise UnsupportedRangeError(f"alpha must exceed -1, got {alpha}")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    cur = 1.0 + alpha - x
    for k in range(2, n + 1):
        prev, cur = cur, ((2 * k - 1 + alpha - x) * cur - (k - 1 + alpha) * prev) / k
    return cur if cur.ndim else float(cur)


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x) via H_k = 2x H_{k-1} - 2(k-1) H_{k-2}."""
    _check_index(n)
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    cur = 2.0 * x
    for k in range(2, n + 1):
        prev, cur = cur, 2.0 * x * cur - 2.0 * (k - 1) * prev
    return cur if cur.ndim else float(cur)


def lg_norm(n: int, l: int, waist: float) -> float:
    """Unit-norm constant N for the ring-mode profile.

    N * (sqrt(2) r / w)^|l| * L_n^|l|(2 r^2 / w^2) * exp(-r^2 / w^2) * exp(i l phi)
    integrates to one over the transverse plane when
    N = sqrt(2 n! / (pi (n + |l|)!)) / w. The factorial ratio is
    accumulated through log-gamma so large indices cannot overflow.
    """
    _check_index(n)
    _check_index(abs(l))
    if waist <= 0:
        raise UnsupportedRangeError(f"waist must be positive, got {waist}")
    log_ratio = math.lgamma(n + 1) - math.lgamma(n + abs(l) + 1)
    return math.sqrt(2.0 / math.pi) * math.exp(0.5 * log_ratio) / waist
