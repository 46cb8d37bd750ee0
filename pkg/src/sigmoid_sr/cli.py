"""Command-line front end: degrade, sharpen, sr, metrics, bench.

A JSON config file (``--config``) mirrors the SRConfig / BenchSpec field
names; individual flags override values from the file. Every command exits 0
on success and nonzero with a one-line diagnostic on failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .bench import BenchSpec, run_benchmark, write_report
from .config import degradation_model_from_dict, sigmoid_params_from_dict, sr_config_from_dict
from .image_io import read_image, write_image
from .imageops import ColorImage, degrade, quantize_u8, rgb_to_ycbcr, ycbcr_to_rgb
from .metrics import MetricParams, psnr, ssim
from .reconstruct import reconstruct, sr_color
from .sharpen import sharpen_image

SOLVER_FLAGS = {
    # flag dest -> config path
    "scale": ("scale",),
    "kernel_size": ("degradation", "kernel_size"),
    "kernel_sigma": ("degradation", "kernel_sigma"),
    "noise_sigma": ("degradation", "noise_sigma"),
    "seed": ("degradation", "seed"),
    "K": ("sigmoid", "sharpness"),
    "B": ("sigmoid", "shift"),
    "patch": ("sigmoid", "patch_size"),
    "stride": ("sigmoid", "stride"),
    "blend": ("sigmoid", "blend"),
    "reg_weight": ("reg_weight",),
    "step_size": ("step_size",),
    "max_iters": ("max_iters",),
    "residual_upscaler": ("residual_upscaler",),
}


def _solver_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--scale", type=int, help="upscaling factor k")
    parser.add_argument("--kernel-size", type=int, help="blur kernel side (odd)")
    parser.add_argument("--kernel-sigma", type=float, help="blur kernel sigma")
    parser.add_argument("--noise-sigma", type=float, help="additive noise sigma")
    parser.add_argument("--seed", type=int, help="noise RNG seed")
    parser.add_argument("--K", type=float, help="sigmoid sharpness (>1 sharpens)")
    parser.add_argument("--B", type=float, help="sigmoid shift (0 keeps edges in place)")
    parser.add_argument("--patch", type=int, help="patch side in LR pixels")
    parser.add_argument("--stride", type=int, help="patch stride in LR pixels")
    parser.add_argument("--blend", choices=["hann", "mean"], help="overlap blending")
    parser.add_argument("--lambda", dest="reg_weight", type=float,
                        help="sharpening regularization weight")
    parser.add_argument("--eta", dest="step_size", type=float, help="update step size")
    parser.add_argument("--iters", dest="max_iters", type=int, help="iteration cap")
    parser.add_argument("--residual-upscaler",
                        choices=["bicubic", "zero_insert_blur"],
                        help="how LR residuals are lifted to HR")
    parser.add_argument("--config", help="JSON config file (flags override it)")


def _load_json(path) -> dict:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def _merged_config(args) -> dict:
    """Config-file dict with any explicitly given flags layered on top."""
    cfg = _load_json(args.config) if getattr(args, "config", None) else {}
    for dest, path in SOLVER_FLAGS.items():
        value = getattr(args, dest, None)
        if value is None:
            continue
        node = cfg
        for key in path[:-1]:
            node = node.setdefault(key, {})
        node[path[-1]] = value
    return cfg


def _luma(img):
    return rgb_to_ycbcr(img).planes()[0] if isinstance(img, ColorImage) else img


def cmd_degrade(args) -> int:
    model = degradation_model_from_dict(_merged_config(args))
    img = read_image(args.input)
    if isinstance(img, ColorImage):
        if img.space != "rgb":
            raise ValueError("degrade expects rgb color input")
        channels = []
        for c in range(3):
            chan_model = type(model)(**{**model.__dict__, "seed": model.seed + c})
            channels.append(quantize_u8(degrade(img.data[:, :, c].astype(float), chan_model)))
        out = ColorImage(np.stack(channels, axis=-1), "rgb")
        in_shape, out_shape = (img.height, img.width), (out.height, out.width)
    else:
        out = degrade(img, model)
        in_shape, out_shape = img.shape, out.shape
    write_image(args.out, out)
    print(f"{in_shape[1]}x{in_shape[0]} -> {out_shape[1]}x{out_shape[0]} "
          f"kernel={model.kernel_size} sigma={model.kernel_sigma:g} "
          f"factor={model.factor} noise={model.noise_sigma:g} seed={model.seed}")
    return 0


def cmd_sharpen(args) -> int:
    params = sigmoid_params_from_dict(_merged_config(args))
    img = read_image(args.input)
    if isinstance(img, ColorImage):
        ycc = rgb_to_ycbcr(img)
        y, cb, cr = ycc.planes()
        y = sharpen_image(y, params)
        out = ycbcr_to_rgb(ColorImage(
            np.stack([quantize_u8(y), quantize_u8(cb), quantize_u8(cr)], axis=-1),
            "ycbcr"))
    else:
        out = sharpen_image(img, params)
    write_image(args.out, out)
    return 0


def cmd_sr(args) -> int:
    cfg = sr_config_from_dict(_merged_config(args))
    img = read_image(args.input)
    if isinstance(img, ColorImage):
        out, trace = sr_color(img, cfg)
    else:
        out, trace = reconstruct(img, cfg)
    write_image(args.out, out)
    if args.trace:
        trace.write_csv(args.trace)
    return 0


def cmd_metrics(args) -> int:
    ref = _luma(read_image(args.ref))
    test = _luma(read_image(args.test))
    params = MetricParams(crop_border=args.crop_border)
    p = psnr(ref, test, params)
    s = ssim(ref, test, params)
    print(f"psnr_db={p:.6f} ssim={s:.6f}")
    return 0


def cmd_bench(args) -> int:
    spec_d = _load_json(args.config) if args.config else {}
    spec = BenchSpec()
    for name, value in spec_d.items():
        if not hasattr(spec, name):
            raise ValueError(f"unknown bench field {name!r}")
        setattr(spec, name, value)
    if args.dataset:
        spec.dataset_dir = args.dataset
    # scalar flags become single-value sweep axes / base overrides
    axis_flags = {"scale": "scale", "K": "sharpness", "B": "shift",
                  "kernel_sigma": "blur_sigma", "noise_sigma": "noise_sigma"}
    for dest, axis in axis_flags.items():
        value = getattr(args, dest, None)
        if value is not None:
            setattr(spec, axis, [value])
    for dest in ("reg_weight", "step_size", "max_iters", "residual_upscaler",
                 "patch", "stride", "blend", "kernel_size", "seed"):
        value = getattr(args, dest, None)
        if value is None:
            continue
        if dest in ("patch", "stride", "blend"):
            spec.base.setdefault("sigmoid", {})[
                {"patch": "patch_size", "stride": "stride", "blend": "blend"}[dest]] = value
        elif dest in ("kernel_size", "seed"):
            spec.base.setdefault("degradation", {})[dest] = value
        else:
            spec.base[dest] = value
    if args.crop_border is not None:
        spec.crop_border = args.crop_border
    if args.emit_images:
        spec.emit_images = True

    report = run_benchmark(spec)
    out = args.out or "report.csv"
    write_report(report, out)
    print(f"{len(report.rows)} runs, {len(report.averages)} averages -> {out}")
    if report.skipped:
        print(f"skipped: {', '.join(report.skipped)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigmoid-sr",
        description="Single-image super-resolution with sigmoid sharpening.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degrade", help="blur + decimate (+ noise) an image")
    p.add_argument("input")
    p.add_argument("--out", required=True)
    _solver_flags(p)
    p.set_defaults(func=cmd_degrade)

    p = sub.add_parser("sharpen", help="patch-wise sigmoid sharpening only")
    p.add_argument("input")
    p.add_argument("--out", required=True)
    _solver_flags(p)
    p.set_defaults(func=cmd_sharpen)

    p = sub.add_parser("sr", help="super-resolve a low-resolution image")
    p.add_argument("input")
    p.add_argument("--out", required=True)
    p.add_argument("--trace", help="write per-iteration cost CSV here")
    _solver_flags(p)
    p.set_defaults(func=cmd_sr)

    p = sub.add_parser("metrics", help="print PSNR/SSIM of test vs reference")
    p.add_argument("ref")
    p.add_argument("test")
    p.add_argument("--crop-border", type=int, default=3,
                   help="border ring excluded from scoring")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("bench", help="run a sweep and write a CSV report")
    p.add_argument("dataset", nargs="?", help="dataset directory (overrides config)")
    p.add_argument("--out", help="report CSV path (default report.csv)")
    p.add_argument("--emit-images", action="store_true",
                   help="write each reconstruction to the output dir")
    p.add_argument("--crop-border", type=int, default=None)
    _solver_flags(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:  # one-line diagnostic, nonzero exit
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
