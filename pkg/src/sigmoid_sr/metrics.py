"""Image quality metrics: PSNR and SSIM with border-cropping conventions.

Super-resolution comparisons conventionally exclude a border ring (the
upscaling factor wide) before scoring; ``MetricParams.crop_border`` controls
that here and defaults to 3 to match 3x experiments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .imageops import as_plane

__all__ = ["MetricParams", "psnr", "ssim"]


@dataclass
class MetricParams:
    """Scoring conventions.

    ``ssim_mode`` is "windowed" (mean of per-window scores over sliding
    windows, the usual mean-SSIM) or "global" (one evaluation over the whole
    cropped region). Windows are uniform by default; ``ssim_gaussian=True``
    switches to the 11x11 sigma=1.5 Gaussian weighting.
    """

    crop_border: int = 3
    dynamic_range: float = 255.0
    k1: float = 0.01
    k2: float = 0.03
    ssim_window: int = 8
    ssim_mode: str = "windowed"
    ssim_gaussian: bool = False

    @property
    def c1(self) -> float:
        return (self.k1 * self.dynamic_range) ** 2

    @property
    def c2(self) -> float:
        return (self.k2 * self.dynamic_range) ** 2

    def validate(self):
        if self.crop_border < 0:
            raise ValueError(f"crop_border must be >= 0, got {self.crop_border}")
        if self.dynamic_range <= 0:
            raise ValueError(f"dynamic_range must be positive, got {self.dynamic_range}")
        if self.ssim_window < 1:
            raise ValueError(f"ssim_window must be >= 1, got {self.ssim_window}")
        if self.ssim_mode not in ("global", "windowed"):
            raise ValueError(f"ssim_mode must be 'global' or 'windowed', got {self.ssim_mode!r}")


def _cropped_pair(ref, test, params: MetricParams):
    ref, test = as_plane(ref), as_plane(test)
    if ref.shape != test.shape:
        raise ValueError(f"dimension mismatch: {ref.shape} vs {test.shape}")
    c = params.crop_border
    if c:
        if min(ref.shape) <= 2 * c:
            raise ValueError(f"images {ref.shape} too small for crop_border {c}")
        ref, test = ref[c:-c, c:-c], test[c:-c, c:-c]
    return ref, test


def psnr(ref: np.ndarray, test: np.ndarray, params: MetricParams | None = None) -> float:
    """Peak signal-to-noise ratio in dB over the cropped region.

    Identical images give ``math.inf``.
    """
    params = params or MetricParams()
    params.validate()
    ref, test = _cropped_pair(ref, test, params)
    mse = float(np.mean((ref - test) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(params.dynamic_range ** 2 / mse)


def _window_moments(x: np.ndarray, y: np.ndarray, size: int):
    """Per-window means and (population) variances/covariance over all
    fully-inside sliding windows, via integral images."""

    def sums(a):
        s = np.cumsum(np.cumsum(a, axis=0), axis=1)
        s = np.pad(s, ((1, 0), (1, 0)))
        return (s[size:, size:] - s[:-size, size:]
                - s[size:, :-size] + s[:-size, :-size])

    n = float(size * size)
    mx = sums(x) / n
    my = sums(y) / n
    vx = sums(x * x) / n - mx * mx
    vy = sums(y * y) / n - my * my
    cxy = sums(x * y) / n - mx * my
    return mx, my, vx, vy, cxy


def _gaussian_moments(x: np.ndarray, y: np.ndarray, size: int, sigma: float = 1.5):
    from scipy.signal import convolve2d as conv

    ax = np.arange(size, dtype=np.float64) - (size - 1) / 2.0
    g = np.exp(-(ax ** 2) / (2.0 * sigma ** 2))
    w = np.outer(g, g)
    w /= w.sum()

    def smooth(a):
        return conv(a, w, mode="valid")

    mx, my = smooth(x), smooth(y)
    vx = smooth(x * x) - mx * mx
    vy = smooth(y * y) - my * my
    cxy = smooth(x * y) - mx * my
    return mx, my, vx, vy, cxy


def ssim(ref: np.ndarray, test: np.ndarray, params: MetricParams | None = None) -> float:
    """Structural similarity over the cropped region.

    Uses the covariance form (2*mx*my + c1)(2*cov + c2) /
    ((mx^2 + my^2 + c1)(vx + vy + c2)) with population moments, so
    ssim(a, a) = 1 exactly and the score is symmetric in its arguments.
    """
    params = params or MetricParams()
    params.validate()
    ref, test = _cropped_pair(ref, test, params)

    if params.ssim_mode == "global":
        mx, my = float(ref.mean()), float(test.mean())
        dx, dy = ref - mx, test - my
        vx = float((dx * dx).mean())
        vy = float((dy * dy).mean())
        cxy = float((dx * dy).mean())
    else:
        size = params.ssim_window
        if min(ref.shape) < size:
            raise ValueError(
                f"cropped images {ref.shape} smaller than ssim window {size}; "
                "use ssim_mode='global'"
            )
        if params.ssim_gaussian:
            mx, my, vx, vy, cxy = _gaussian_moments(ref, test, size)
        else:
            mx, my, vx, vy, cxy = _window_moments(ref, test, size)

    c1, c2 = params.c1, params.c2
    score = ((2.0 * mx * my + c1) * (2.0 * cxy + c2)
             / ((mx * mx + my * my + c1) * (vx + vy + c2)))
    return float(np.mean(score))
