"""Single-image super-resolution with patch-wise sigmoid sharpening.

The pipeline in one breath: a low-resolution image is modeled as a blurred,
decimated, noisy view of the high-resolution original; reconstruction
iterates between back-projecting the observation error and pulling the
estimate toward a sigmoid-sharpened version of itself, which keeps edges
crisp without inventing texture.
"""

from .bench import BenchReport, BenchRow, BenchSpec, read_report, run_benchmark, write_report
from .config import (
    degradation_model_from_dict,
    sigmoid_params_from_dict,
    sr_config_from_dict,
    sr_config_to_dict,
)
from .image_io import read_image, read_pnm, write_image, write_pgm, write_ppm
from .imageops import (
    ColorImage,
    DegradationModel,
    add_gaussian_noise,
    bicubic_resize,
    convolve2d,
    decimate,
    degrade,
    gaussian_kernel,
    quantize_u8,
    rgb_to_ycbcr,
    ycbcr_to_rgb,
)
from .metrics import MetricParams, psnr, ssim
from .reconstruct import (
    SolveTrace,
    SRConfig,
    cost,
    default_config,
    reconstruct,
    residual_upscale,
    sr_color,
)
from .sharpen import (
    SigmoidParams,
    normalize_patch,
    requantize,
    sharpen_image,
    sharpen_patch,
    sigmoid_remap,
    window_weights,
)

__version__ = "0.1.0"

__all__ = [
    "BenchReport", "BenchRow", "BenchSpec", "read_report", "run_benchmark",
    "write_report", "sr_config_from_dict", "sr_config_to_dict",
    "sigmoid_params_from_dict", "degradation_model_from_dict",
    "read_image", "read_pnm", "write_image", "write_pgm", "write_ppm",
    "ColorImage", "DegradationModel", "add_gaussian_noise", "bicubic_resize",
    "convolve2d", "decimate", "degrade", "gaussian_kernel", "quantize_u8",
    "rgb_to_ycbcr", "ycbcr_to_rgb",
    "MetricParams", "psnr", "ssim",
    "SolveTrace", "SRConfig", "cost", "default_config", "reconstruct",
    "residual_upscale", "sr_color",
    "SigmoidParams", "normalize_patch", "requantize", "sharpen_image",
    "sharpen_patch", "sigmoid_remap", "window_weights",
]
