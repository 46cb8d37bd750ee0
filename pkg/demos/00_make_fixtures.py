"""
Build the bundled fixture images
================================

The test suite and the other demos run against a small offline image set:
synthetic ramps, step edges, a checkerboard, a blob scene, and one
photographic image. This script writes them into ``fixtures/`` as 8-bit
binary PGM/PPM. Everything is deterministic, so regenerating the files
reproduces them byte for byte.
"""

import os

import numpy as np

from sigmoid_sr import ColorImage, bicubic_resize, quantize_u8, write_image
from sigmoid_sr.fixtures import fixture_set

out_dir = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                       "fixtures")
os.makedirs(out_dir, exist_ok=True)

# The four synthetic planes: 120x120, divisible by scale factors 2, 3, 4.
for name, plane in fixture_set(120).items():
    write_image(os.path.join(out_dir, f"{name}.pgm"), plane)
    print(f"{name}.pgm  {plane.shape[1]}x{plane.shape[0]}")

# One photographic image. scikit-image ships a camera picture inside the
# wheel; fall back to a synthetic scene if it is unavailable so the script
# stays runnable anywhere.
try:
    from skimage import data

    photo = data.camera().astype(float)
except Exception:
    yy, xx = np.mgrid[0:512, 0:512].astype(float)
    photo = (128 + 80 * np.sin(xx / 23) * np.cos(yy / 31)
             + 40 * ((xx + yy) % 97 < 48))
photo = bicubic_resize(photo, 180, 180)
write_image(os.path.join(out_dir, "camera.pgm"), photo)
print(f"camera.pgm  180x180")

# A color gradient with a few solid patches, for the color pipeline demos.
size = 90
yy, xx = np.mgrid[0:size, 0:size].astype(float)
r = 40 + 170 * xx / size
g = 40 + 170 * yy / size
b = np.full_like(r, 90.0)
r[20:45, 20:45], g[20:45, 20:45], b[20:45, 20:45] = 200.0, 60.0, 60.0
r[50:80, 55:85], g[50:80, 55:85], b[50:80, 55:85] = 60.0, 180.0, 90.0
color = ColorImage(np.stack([quantize_u8(r), quantize_u8(g), quantize_u8(b)],
                            axis=-1), "rgb")
write_image(os.path.join(out_dir, "color_patches.ppm"), color)
print(f"color_patches.ppm  {size}x{size}")
