import os

import numpy as np
import pytest

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIXTURE_DIR = os.path.join(REPO_ROOT, "fixtures")


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def fold_index(i: int, n: int) -> int:
    """Symmetric (edge-repeating) reflection of an out-of-range index."""
    while not 0 <= i < n:
        i = -1 - i if i < 0 else 2 * n - 1 - i
    return i


def dense_blur_matrix(h: int, w: int, kernel: np.ndarray) -> np.ndarray:
    """Explicit (hw x hw) matrix of convolution with symmetric padding."""
    size = kernel.shape[0]
    r = size // 2
    mat = np.zeros((h * w, h * w))
    for i in range(h):
        for j in range(w):
            row = i * w + j
            for a in range(-r, r + 1):
                for b in range(-r, r + 1):
                    col = fold_index(i + a, h) * w + fold_index(j + b, w)
                    mat[row, col] += kernel[r - a, r - b]
    return mat


def dense_decimate_matrix(h: int, w: int, factor: int, offset: int = 0) -> np.ndarray:
    """Explicit selector matrix keeping every factor-th sample."""
    oh = (h - 1 - offset) // factor + 1
    ow = (w - 1 - offset) // factor + 1
    mat = np.zeros((oh * ow, h * w))
    for i in range(oh):
        for j in range(ow):
            mat[i * ow + j, (offset + i * factor) * w + (offset + j * factor)] = 1.0
    return mat


def transition_width(profile: np.ndarray, low: float, high: float) -> float:
    """10%-90% transition width of a monotone edge profile, in pixels."""
    lo_level = low + 0.1 * (high - low)
    hi_level = low + 0.9 * (high - low)
    xs = np.arange(len(profile), dtype=float)
    x_lo = np.interp(lo_level, profile, xs)
    x_hi = np.interp(hi_level, profile, xs)
    return float(x_hi - x_lo)
