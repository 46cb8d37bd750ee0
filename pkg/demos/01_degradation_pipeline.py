"""
The degradation pipeline, step by step
======================================

A low-resolution observation is modeled as blur, then decimation, then
additive Gaussian noise. This walks one fixture through each stage and
saves every intermediate so you can eyeball what each operator does.
"""

import os

import numpy as np

from sigmoid_sr import (
    DegradationModel,
    add_gaussian_noise,
    convolve2d,
    decimate,
    degrade,
    gaussian_kernel,
    read_image,
    write_image,
)

here = os.path.dirname(os.path.abspath(__file__))
out_dir = os.path.join(here, "out")
os.makedirs(out_dir, exist_ok=True)

hr = read_image(os.path.join(here, "..", "fixtures", "camera.pgm"))
print(f"ground truth: {hr.shape[1]}x{hr.shape[0]}, "
      f"range [{hr.min():.0f}, {hr.max():.0f}]")

# Stage 1: blur with a 7x7 sigma=1.2 Gaussian. The kernel sums to one, so
# flat regions are untouched; edges smear over ~3 pixels.
kernel = gaussian_kernel(7, 1.2)
print(f"kernel taps sum to {kernel.sum():.15f}, center tap {kernel[3, 3]:.4f}")
blurred = convolve2d(hr, kernel)
write_image(os.path.join(out_dir, "01_blurred.pgm"), blurred)

# Stage 2: keep every third sample (top-left aligned grid).
small = decimate(blurred, 3)
print(f"decimated: {small.shape[1]}x{small.shape[0]}")
write_image(os.path.join(out_dir, "01_decimated.pgm"), small)

# Stage 3: seeded Gaussian noise. Same seed, same noise, every time.
noisy = add_gaussian_noise(small, 4.0, seed=7)
print(f"noise added: std of difference = {np.std(noisy - small):.3f}")
write_image(os.path.join(out_dir, "01_noisy.pgm"), noisy)

# The composed operator does all three in one call.
model = DegradationModel(kernel_size=7, kernel_sigma=1.2, factor=3,
                         noise_sigma=4.0, seed=7)
composed = degrade(hr, model)
print(f"composed degrade() matches the stages: "
      f"{np.array_equal(composed, noisy)}")
write_image(os.path.join(out_dir, "01_lr.pgm"), composed)
print(f"outputs in {out_dir}")
