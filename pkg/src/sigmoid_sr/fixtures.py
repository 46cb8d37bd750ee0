"""Synthetic test images: ramps, step edges, checkerboards, blob scenes.

These generators back the offline test suite and the bundled fixture files
under ``fixtures/``. All return float64 planes on [0, 255] with deterministic
content.
"""

from __future__ import annotations

import numpy as np

__all__ = ["ramp", "step_edge", "checkerboard", "blobs", "fixture_set"]


def ramp(size: int = 120, lo: float = 20.0, hi: float = 235.0,
         direction: str = "h") -> np.ndarray:
    """Linear intensity ramp from lo to hi across the image."""
    line = np.linspace(lo, hi, size)
    plane = np.tile(line, (size, 1))
    return plane if direction == "h" else plane.T.copy()


def step_edge(size: int = 120, low: float = 50.0, high: float = 200.0) -> np.ndarray:
    """Sharp step edges: vertical, horizontal, and diagonal transitions."""
    plane = np.full((size, size), low)
    plane[:, size // 2:] = high
    plane[: size // 4, :] = np.where(
        np.arange(size) < size // 3, high, low
    )
    yy, xx = np.mgrid[0:size, 0:size]
    plane[yy + xx > size * 3 // 2] = low
    return plane


def checkerboard(size: int = 120, cell: int = 12, low: float = 60.0,
                 high: float = 190.0) -> np.ndarray:
    """Checkerboard with ``cell``-pixel squares."""
    yy, xx = np.mgrid[0:size, 0:size]
    return np.where((yy // cell + xx // cell) % 2 == 0, low, high).astype(np.float64)


def blobs(size: int = 120, count: int = 8, seed: int = 42) -> np.ndarray:
    """Flat discs of random size and brightness over a gentle gradient."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:size, 0:size]
    plane = 40.0 + 60.0 * (xx / size)
    for _ in range(count):
        cy, cx = rng.uniform(size * 0.1, size * 0.9, 2)
        radius = rng.uniform(size * 0.04, size * 0.14)
        amp = rng.uniform(60.0, 210.0)
        plane = np.where((yy - cy) ** 2 + (xx - cx) ** 2 < radius ** 2, amp, plane)
    return plane


def fixture_set(size: int = 120) -> dict[str, np.ndarray]:
    """The standard synthetic set keyed by name."""
    return {
        "ramp": ramp(size),
        "edges": step_edge(size),
        "checker": checkerboard(size),
        "blobs": blobs(size),
    }
