"""Pixel-level primitives: color conversion, blur, decimation, resampling, noise.

All single-channel images ("planes") are 2-D float64 arrays carrying
intensities on a nominal [0, 255] scale. Values stay real-valued through the
whole pipeline; quantization to 8-bit happens only at file I/O (see
``image_io``) and when assembling a :class:`ColorImage`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import convolve2d as _convolve2d_raw

__all__ = [
    "ColorImage",
    "DegradationModel",
    "as_plane",
    "quantize_u8",
    "rgb_to_ycbcr",
    "ycbcr_to_rgb",
    "gaussian_kernel",
    "convolve2d",
    "decimate",
    "bicubic_resize",
    "add_gaussian_noise",
    "degrade",
]


def as_plane(p) -> np.ndarray:
    """Validate and return a 2-D float64 intensity plane.

    Raises:
        ValueError: if the array is not 2-D, is empty, or contains
            non-finite values.
    """
    arr = np.asarray(p, dtype=np.float64)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError(f"expected a non-empty 2-D plane, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("plane contains NaN or Inf")
    return arr


def quantize_u8(p: np.ndarray) -> np.ndarray:
    """Quantize a real-valued plane to uint8: clamp to [0, 255], then round
    half away from zero."""
    clipped = np.clip(np.asarray(p, dtype=np.float64), 0.0, 255.0)
    return np.floor(clipped + 0.5).astype(np.uint8)


@dataclass
class ColorImage:
    """3-channel 8-bit image plus a color-space tag ("rgb" or "ycbcr")."""

    data: np.ndarray  # (height, width, 3) uint8
    space: str = "rgb"

    def __post_init__(self):
        self.data = np.asarray(self.data)
        if self.data.ndim != 3 or self.data.shape[2] != 3:
            raise ValueError(f"expected (h, w, 3) samples, got {self.data.shape}")
        if self.data.dtype != np.uint8:
            raise ValueError(f"expected uint8 samples, got {self.data.dtype}")
        if self.space not in ("rgb", "ycbcr"):
            raise ValueError(f"unknown color space {self.space!r}")

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def height(self) -> int:
        return self.data.shape[0]

    def planes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """The three channels as float64 planes."""
        d = self.data.astype(np.float64)
        return d[:, :, 0], d[:, :, 1], d[:, :, 2]


# ITU-R BT.601 full-range coefficients (the usual "Y/Cb/Cr on [0,255]"
# convention of SR codebases).
def rgb_to_ycbcr(img: ColorImage) -> ColorImage:
    """Convert a full-range RGB image to YCbCr (BT.601).

    Raises:
        ValueError: if the input is not tagged "rgb".
    """
    if img.space != "rgb":
        raise ValueError(f"expected an rgb image, got {img.space!r}")
    r, g, b = img.planes()
    y = 0.299 * r + 0.587 * g + 0.114 * b
    cb = -0.168736 * r - 0.331264 * g + 0.5 * b + 128.0
    cr = 0.5 * r - 0.418688 * g - 0.081312 * b + 128.0
    return ColorImage(np.stack([quantize_u8(y), quantize_u8(cb), quantize_u8(cr)], axis=-1), "ycbcr")


def ycbcr_to_rgb(img: ColorImage) -> ColorImage:
    """Convert a full-range YCbCr image back to RGB (BT.601), clamping to [0, 255].

    Raises:
        ValueError: if the input is not tagged "ycbcr".
    """
    if img.space != "ycbcr":
        raise ValueError(f"expected a ycbcr image, got {img.space!r}")
    y, cb, cr = img.planes()
    r, g, b = ycbcr_planes_to_rgb(y, cb, cr)
    return ColorImage(np.stack([quantize_u8(r), quantize_u8(g), quantize_u8(b)], axis=-1), "rgb")


def ycbcr_planes_to_rgb(y, cb, cr) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Inverse BT.601 transform on real-valued planes (no quantization)."""
    cb = cb - 128.0
    cr = cr - 128.0
    r = y + 1.402 * cr
    g = y - 0.344136 * cb - 0.714136 * cr
    b = y + 1.772 * cb
    return r, g, b


def gaussian_kernel(size: int, sigma: float) -> np.ndarray:
    """Normalized isotropic Gaussian kernel on a centered integer grid.

    Args:
        size: odd kernel side length, >= 1.
        sigma: Gaussian standard deviation, > 0.

    Returns:
        (size, size) float64 taps summing to 1.
    """
    if size < 1 or size % 2 == 0:
        raise ValueError(f"kernel size must be odd and >= 1, got {size}")
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    ax = np.arange(size, dtype=np.float64) - size // 2
    xx, yy = np.meshgrid(ax, ax)
    taps = np.exp(-(xx * xx + yy * yy) / (2.0 * sigma * sigma))
    return taps / taps.sum()


def convolve2d(p: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """2-D convolution with symmetric (mirror) border extension.

    True convolution (the kernel is flipped), output dimensions equal the
    input's. The border rule repeats the edge sample, matching
    ``np.pad(..., mode="symmetric")``.
    """
    p = as_plane(p)
    kernel = np.asarray(kernel, dtype=np.float64)
    if kernel.ndim != 2 or kernel.shape[0] != kernel.shape[1] or kernel.shape[0] % 2 == 0:
        raise ValueError(f"kernel must be odd and square, got {kernel.shape}")
    if kernel.shape[0] > 2 * min(p.shape):
        # scipy's 'symm' requires the pad to fit in one reflection
        raise ValueError("kernel too large for image under symmetric padding")
    return _convolve2d_raw(p, kernel, mode="same", boundary="symm")


def decimate(p: np.ndarray, factor: int, offset: int = 0) -> np.ndarray:
    """Keep every ``factor``-th sample starting at ``offset`` on both axes.

    Output dims are floor((dim - 1 - offset) / factor) + 1.
    """
    p = as_plane(p)
    if factor < 1:
        raise ValueError(f"factor must be >= 1, got {factor}")
    if not 0 <= offset < factor:
        raise ValueError(f"offset must be in [0, {factor}), got {offset}")
    return p[offset::factor, offset::factor].copy()


def _cubic_weights(t: np.ndarray) -> np.ndarray:
    """Cubic convolution weights (a = -0.5) for taps at offsets -1..2.

    Returns a (4, n) array; columns sum to 1 after normalization, so
    constant inputs reproduce exactly.
    """
    a = -0.5
    s = np.abs(np.stack([1.0 + t, t, 1.0 - t, 2.0 - t]))
    near = (a + 2.0) * s**3 - (a + 3.0) * s**2 + 1.0
    far = a * s**3 - 5.0 * a * s**2 + 8.0 * a * s - 4.0 * a
    w = np.where(s <= 1.0, near, np.where(s < 2.0, far, 0.0))
    return w / w.sum(axis=0)


def _reflect_index(idx: np.ndarray, n: int) -> np.ndarray:
    """Fold out-of-range indices back with symmetric (edge-repeating) reflection."""
    if n == 1:
        return np.zeros_like(idx)
    idx = np.mod(idx, 2 * n)
    return np.where(idx < n, idx, 2 * n - 1 - idx)


def _resize_axis_taps(n_in: int, n_out: int) -> tuple[np.ndarray, np.ndarray]:
    dst = np.arange(n_out, dtype=np.float64)
    src = (dst + 0.5) * (n_in / n_out) - 0.5
    base = np.floor(src).astype(np.int64)
    w = _cubic_weights(src - base)
    idx = _reflect_index(np.stack([base - 1, base, base + 1, base + 2]), n_in)
    return idx, w


def bicubic_resize(p: np.ndarray, out_w: int, out_h: int) -> np.ndarray:
    """Bicubic resampling (cubic convolution, a = -0.5) to (out_h, out_w).

    Coordinates are center-aligned (src = (dst + 0.5) * in/out - 0.5) with
    mirrored borders. Resizing to the input dimensions is an exact identity.
    There is no anti-alias prefilter: downscaling point-samples the cubic
    surface, matching the blur-then-decimate degradation model.
    """
    p = as_plane(p)
    if out_w < 1 or out_h < 1:
        raise ValueError(f"output dims must be >= 1, got {out_w}x{out_h}")
    h, w = p.shape
    out = p
    if out_h != h:
        idx, ww = _resize_axis_taps(h, out_h)
        out = np.einsum("kij,ki->ij", out[idx, :], ww)
    if out_w != w:
        idx, ww = _resize_axis_taps(w, out_w)
        out = np.einsum("kij,ki->ij", out.T[idx, :], ww).T
    return out.copy() if out is p else out


def add_gaussian_noise(p: np.ndarray, sigma: float, seed: int) -> np.ndarray:
    """Add i.i.d. zero-mean Gaussian noise from a seeded generator.

    ``sigma`` is in intensity units on the [0, 255] scale. ``sigma=0``
    returns the input unchanged; a fixed seed makes the output deterministic.
    """
    p = as_plane(p)
    if sigma < 0:
        raise ValueError(f"sigma must be >= 0, got {sigma}")
    if sigma == 0:
        return p.copy()
    rng = np.random.default_rng(seed)
    return p + rng.normal(0.0, sigma, size=p.shape)


@dataclass
class DegradationModel:
    """Blur + decimation + noise forming the LR observation operator.

    ``offset`` is the decimation grid alignment (top-left, phase 0 by
    default); it is exposed because the choice is a convention, not a law.
    """

    kernel_size: int = 7
    kernel_sigma: float = 1.2
    factor: int = 3
    noise_sigma: float = 0.0
    seed: int = 0
    offset: int = 0

    def validate(self):
        if self.kernel_size < 1 or self.kernel_size % 2 == 0:
            raise ValueError(f"kernel_size must be odd and >= 1, got {self.kernel_size}")
        if self.kernel_sigma <= 0:
            raise ValueError(f"kernel_sigma must be positive, got {self.kernel_sigma}")
        if self.factor < 1:
            raise ValueError(f"factor must be >= 1, got {self.factor}")
        if self.noise_sigma < 0:
            raise ValueError(f"noise_sigma must be >= 0, got {self.noise_sigma}")
        if not 0 <= self.offset < self.factor:
            raise ValueError(f"offset must be in [0, {self.factor}), got {self.offset}")

    def kernel(self) -> np.ndarray:
        return gaussian_kernel(self.kernel_size, self.kernel_sigma)


def degrade(hr: np.ndarray, model: DegradationModel) -> np.ndarray:
    """Apply the low-resolution observation model: blur, decimate, add noise."""
    model.validate()
    hr = as_plane(hr)
    if min(hr.shape) < model.kernel_size:
        raise ValueError(
            f"image {hr.shape} smaller than blur kernel {model.kernel_size}"
        )
    lr = decimate(convolve2d(hr, model.kernel()), model.factor, model.offset)
    return add_gaussian_noise(lr, model.noise_sigma, model.seed)
