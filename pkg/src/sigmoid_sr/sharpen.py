"""Patch-wise sigmoid sharpening.

A small patch of a natural image looks like an intensity ramp. Normalizing
the patch to (0, 1), pushing the values through a logistic-shaped remap, and
restoring the original range steepens that ramp: edges get narrower without
ringing, flat regions stay put. Overlapped patches are blended back with a
Hann-weighted average to hide block seams.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .imageops import as_plane

__all__ = [
    "SigmoidParams",
    "normalize_patch",
    "sigmoid_remap",
    "requantize",
    "sharpen_patch",
    "window_weights",
    "sharpen_image",
]

# Blend weights never drop to exactly zero; patch corners of the Hann
# profile are floored here so every pixel keeps a positive total weight.
WEIGHT_FLOOR = 1e-3


@dataclass
class SigmoidParams:
    """Knobs of the patch-wise sigmoid transform.

    Attributes:
        sharpness: remap exponent; >1 sharpens, <1 blurs, 1 is the identity.
        shift: offset displacing the remap midpoint; 0 keeps edges in place.
        patch_size: patch side length in LR pixels (>= 2).
        stride: patch stride in LR pixels (>= 1, <= patch_size).
        scale: LR->HR pixel ratio; the transform runs on HR-space patches of
            side patch_size*scale at stride stride*scale.
        eps: range guard widening each patch's [min, max] so normalized
            values avoid exactly 0 and 1; in raw intensity units.
        blend: "hann" for windowed averaging of overlaps, "mean" for a
            plain average.
    """

    sharpness: float = 2.0
    shift: float = 0.0
    patch_size: int = 3
    stride: int = 1
    scale: int = 1
    eps: float = 0.01
    blend: str = "hann"

    def validate(self):
        if self.sharpness <= 0:
            raise ValueError(f"sharpness must be positive, got {self.sharpness}")
        if self.eps <= 0:
            raise ValueError(f"eps must be positive, got {self.eps}")
        if self.patch_size < 2:
            raise ValueError(f"patch_size must be >= 2, got {self.patch_size}")
        if not 1 <= self.stride <= self.patch_size:
            raise ValueError(
                f"stride must be in [1, patch_size], got {self.stride} vs {self.patch_size}"
            )
        if self.scale < 1:
            raise ValueError(f"scale must be >= 1, got {self.scale}")
        if self.blend not in ("hann", "mean"):
            raise ValueError(f"blend must be 'hann' or 'mean', got {self.blend!r}")

    @property
    def side(self) -> int:
        """Patch side in HR pixels."""
        return self.patch_size * self.scale

    @property
    def step(self) -> int:
        """Patch stride in HR pixels."""
        return self.stride * self.scale


def normalize_patch(patch: np.ndarray, eps: float = 0.01):
    """Map patch intensities into (0, 1) against an eps-widened range.

    Returns:
        (normalized, lo, hi) where lo = min - eps, hi = max + eps and
        normalized = (patch - lo) / (hi - lo). The guard keeps every value
        strictly inside (0, 1), even for constant patches.
    """
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    patch = np.asarray(patch, dtype=np.float64)
    lo = float(patch.min()) - eps
    hi = float(patch.max()) + eps
    return (patch - lo) / (hi - lo), lo, hi


def sigmoid_remap(y, sharpness: float, shift: float = 0.0):
    """Remap normalized intensities y in (0, 1) through the two-parameter
    logistic form 1 / (1 + (1/y - 1)^sharpness * e^shift).

    Strictly increasing in y; sharpness=1, shift=0 is the identity.
    Accepts scalars or arrays.

    Raises:
        ValueError: if sharpness <= 0 or any y is outside (0, 1).
    """
    if sharpness <= 0:
        raise ValueError(f"sharpness must be positive, got {sharpness}")
    y = np.asarray(y, dtype=np.float64)
    if np.any(y <= 0.0) or np.any(y >= 1.0):
        raise ValueError("normalized values must lie strictly in (0, 1)")
    odds = 1.0 / y - 1.0
    out = 1.0 / (1.0 + np.power(odds, sharpness) * np.exp(shift))
    return float(out) if out.ndim == 0 else out


def requantize(yp, lo: float, hi: float):
    """Restore remapped values to the original intensity range: yp*(hi-lo)+lo.

    Exact inverse of :func:`normalize_patch` for untouched values.
    """
    if not hi > lo:
        raise ValueError(f"need hi > lo, got [{lo}, {hi}]")
    return np.asarray(yp, dtype=np.float64) * (hi - lo) + lo


def sharpen_patch(patch: np.ndarray, params: SigmoidParams) -> np.ndarray:
    """Sharpen one patch: normalize, sigmoid-remap, restore the range.

    Preserves the intensity ordering of pixels within the patch and never
    leaves [min - eps, max + eps] of the original values.
    """
    params.validate()
    y, lo, hi = normalize_patch(patch, params.eps)
    return requantize(sigmoid_remap(y, params.sharpness, params.shift), lo, hi)


def window_weights(side: int, blend: str = "hann") -> np.ndarray:
    """Blend weights for one patch: separable Hann profile, floored so no
    weight is ever zero. ``blend="mean"`` gives uniform weights instead."""
    if side < 1:
        raise ValueError(f"side must be >= 1, got {side}")
    if blend == "mean":
        return np.ones((side, side))
    if blend != "hann":
        raise ValueError(f"blend must be 'hann' or 'mean', got {blend!r}")
    i = np.arange(side, dtype=np.float64)
    w = 0.5 - 0.5 * np.cos(2.0 * np.pi * (i + 0.5) / side)
    return np.maximum(np.outer(w, w), WEIGHT_FLOOR)


def _patch_origins(dim: int, side: int, step: int) -> np.ndarray:
    """Patch origins covering [0, dim): a regular grid plus a final origin
    clamped to dim - side so the last patch stays full-size in bounds."""
    origins = np.arange(0, dim - side + 1, step)
    if origins[-1] != dim - side:
        origins = np.append(origins, dim - side)
    return origins


def sharpen_image(p: np.ndarray, params: SigmoidParams) -> np.ndarray:
    """Sharpen a whole plane with overlapped patch-wise sigmoid remapping.

    The plane is tiled with HR-space patches of side patch_size*scale at
    stride stride*scale (final row/column clamped to the border). Each patch
    is sharpened independently; overlapping results are combined by a
    weight-normalized sum using :func:`window_weights`.

    Raises:
        ValueError: if the image is smaller than one patch.
    """
    params.validate()
    p = as_plane(p)
    side, step = params.side, params.step
    h, w = p.shape
    if h < side or w < side:
        raise ValueError(f"image {p.shape} smaller than patch side {side}")

    rows = _patch_origins(h, side, step)
    cols = _patch_origins(w, side, step)
    windows = np.lib.stride_tricks.sliding_window_view(p, (side, side))
    patches = windows[np.ix_(rows, cols)]  # (nr, nc, side, side)

    lo = patches.min(axis=(2, 3), keepdims=True) - params.eps
    hi = patches.max(axis=(2, 3), keepdims=True) + params.eps
    y = (patches - lo) / (hi - lo)
    odds = 1.0 / y - 1.0
    yp = 1.0 / (1.0 + np.power(odds, params.sharpness) * np.exp(params.shift))
    sharp = yp * (hi - lo) + lo

    weights = window_weights(side, params.blend)
    acc = np.zeros_like(p)
    wacc = np.zeros_like(p)
    # Origins are unique, so each (rows+u, cols+v) index grid hits distinct
    # cells and fancy-indexed += accumulates safely.
    for u in range(side):
        ru = rows + u
        for v in range(side):
            cell = np.ix_(ru, cols + v)
            acc[cell] += weights[u, v] * sharp[:, :, u, v]
            wacc[cell] += weights[u, v]
    return acc / wacc
