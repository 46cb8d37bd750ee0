"""Image file I/O: binary PGM (P5) and PPM (P6), plus 8-bit PNG.

Gray images load as float64 planes, color images as :class:`ColorImage`
tagged "rgb". Real-valued planes are quantized on write with
round-half-away-from-zero and clamping to [0, 255].
"""

from __future__ import annotations

import os

import numpy as np

from .imageops import ColorImage, quantize_u8

__all__ = [
    "read_pnm",
    "write_pgm",
    "write_ppm",
    "read_image",
    "write_image",
]


def _read_pnm_tokens(f, count: int) -> list[bytes]:
    """Read whitespace-separated header tokens, skipping '#' comments."""
    tokens = []
    while len(tokens) < count:
        ch = f.read(1)
        if not ch:
            raise ValueError("truncated PNM header")
        if ch.isspace():
            continue
        if ch == b"#":
            while ch not in (b"\n", b"", b"\r"):
                ch = f.read(1)
            continue
        token = ch
        while True:
            ch = f.read(1)
            if not ch or ch.isspace():
                break
            token += ch
        tokens.append(token)
    return tokens


def read_pnm(path):
    """Read a binary PGM (P5) or PPM (P6) file.

    Returns:
        A float64 plane for PGM, a :class:`ColorImage` tagged "rgb" for PPM.
    """
    with open(path, "rb") as f:
        magic = f.read(2)
        if magic not in (b"P5", b"P6"):
            raise ValueError(f"{path}: not a binary PGM/PPM file (magic {magic!r})")
        width, height, maxval = (int(t) for t in _read_pnm_tokens(f, 3))
        if width < 1 or height < 1:
            raise ValueError(f"{path}: bad dimensions {width}x{height}")
        if maxval != 255:
            raise ValueError(f"{path}: only maxval 255 supported, got {maxval}")
        channels = 1 if magic == b"P5" else 3
        raw = f.read(width * height * channels)
        if len(raw) != width * height * channels:
            raise ValueError(f"{path}: truncated pixel data")
    data = np.frombuffer(raw, dtype=np.uint8)
    if channels == 1:
        return data.reshape(height, width).astype(np.float64)
    return ColorImage(data.reshape(height, width, 3).copy(), "rgb")


def write_pgm(path, plane: np.ndarray):
    """Write a real-valued plane as binary PGM (P5), maxval 255."""
    u8 = quantize_u8(np.asarray(plane))
    if u8.ndim != 2:
        raise ValueError(f"expected a 2-D plane, got shape {u8.shape}")
    h, w = u8.shape
    with open(path, "wb") as f:
        f.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        f.write(u8.tobytes())


def write_ppm(path, img: ColorImage):
    """Write an RGB :class:`ColorImage` as binary PPM (P6), maxval 255."""
    if img.space != "rgb":
        raise ValueError(f"PPM output requires rgb, got {img.space!r}")
    with open(path, "wb") as f:
        f.write(f"P6\n{img.width} {img.height}\n255\n".encode("ascii"))
        f.write(img.data.tobytes())


def _read_png(path):
    from PIL import Image

    with Image.open(path) as im:
        if im.mode in ("L", "I;16", "I"):
            return np.asarray(im.convert("L"), dtype=np.float64)
        return ColorImage(np.asarray(im.convert("RGB"), dtype=np.uint8), "rgb")


def _write_png(path, img):
    from PIL import Image

    if isinstance(img, ColorImage):
        if img.space != "rgb":
            raise ValueError(f"PNG output requires rgb, got {img.space!r}")
        Image.fromarray(img.data, mode="RGB").save(path)
    else:
        Image.fromarray(quantize_u8(np.asarray(img)), mode="L").save(path)


def read_image(path):
    """Read PGM/PPM/PNG by extension; gray files become float64 planes,
    color files :class:`ColorImage`."""
    ext = os.path.splitext(str(path))[1].lower()
    if ext in (".pgm", ".ppm", ".pnm"):
        return read_pnm(path)
    if ext == ".png":
        return _read_png(path)
    raise ValueError(f"unsupported image format {ext!r} for {path}")


def write_image(path, img):
    """Write a plane or ColorImage to PGM/PPM/PNG chosen by extension."""
    ext = os.path.splitext(str(path))[1].lower()
    if ext == ".pgm":
        if isinstance(img, ColorImage):
            raise ValueError("PGM holds a single channel; got a color image")
        write_pgm(path, img)
    elif ext == ".ppm":
        if not isinstance(img, ColorImage):
            raise ValueError("PPM holds three channels; got a single plane")
        write_ppm(path, img)
    elif ext == ".png":
        _write_png(path, img)
    else:
        raise ValueError(f"unsupported image format {ext!r} for {path}")
