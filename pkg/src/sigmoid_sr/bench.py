"""Experiment harness: sweep configurations over a dataset, emit CSV reports.

Each run degrades a ground-truth image with a seed derived from the master
seed, the image name, and the sweep point, reconstructs it, and scores the
result, so reports are reproducible run to run (timings aside).
"""

from __future__ import annotations

import glob
import hashlib
import itertools
import logging
import os
import time
from dataclasses import dataclass, field

import numpy as np

from .config import sr_config_from_dict
from .image_io import read_image, write_image
from .imageops import ColorImage, degrade, rgb_to_ycbcr
from .metrics import MetricParams, psnr, ssim
from .reconstruct import reconstruct

__all__ = ["BenchSpec", "BenchRow", "BenchReport", "run_benchmark",
           "write_report", "read_report"]

log = logging.getLogger(__name__)

CSV_HEADER = "image,k,K,B,blur_sigma,noise_sigma,psnr_db,ssim,seconds"
AVG_IMAGE = "__avg__"


@dataclass
class BenchSpec:
    """A sweep: dataset x (sharpness x shift x blur x scale x noise).

    ``base`` holds SRConfig field overrides applied to every run before the
    sweep axes; ``crop_border=None`` scores each run with a border crop equal
    to its scale factor.
    """

    dataset_dir: str = "fixtures"
    hr_glob: str = "*.pgm"
    sharpness: list = field(default_factory=lambda: [2.0])
    shift: list = field(default_factory=lambda: [0.0])
    blur_sigma: list = field(default_factory=lambda: [1.2])
    scale: list = field(default_factory=lambda: [3])
    noise_sigma: list = field(default_factory=lambda: [0.0])
    base: dict = field(default_factory=dict)
    output_dir: str | None = None
    emit_images: bool = False
    master_seed: int = 0
    run_cap: int = 200
    crop_border: int | None = None

    def validate(self):
        for name in ("sharpness", "shift", "blur_sigma", "scale", "noise_sigma"):
            axis = getattr(self, name)
            if not isinstance(axis, (list, tuple)) or len(axis) == 0:
                raise ValueError(f"sweep axis {name!r} must be a non-empty list")
        if self.run_cap < 1:
            raise ValueError(f"run_cap must be >= 1, got {self.run_cap}")

    def points(self) -> list[tuple]:
        """Sweep points as (scale, sharpness, shift, blur_sigma, noise_sigma)."""
        return list(itertools.product(
            self.scale, self.sharpness, self.shift, self.blur_sigma, self.noise_sigma
        ))


@dataclass
class BenchRow:
    image: str
    scale: int
    sharpness: float
    shift: float
    blur_sigma: float
    noise_sigma: float
    psnr_db: float
    ssim: float
    seconds: float

    def key(self):
        return (self.image, self.scale, self.sharpness, self.shift,
                self.blur_sigma, self.noise_sigma)

    def axes(self):
        return (self.scale, self.sharpness, self.shift,
                self.blur_sigma, self.noise_sigma)


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    averages: list[BenchRow] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    crop_border: int | None = None


def run_seed(master_seed: int, image_name: str, point: tuple) -> int:
    """Deterministic 63-bit seed from master seed + image + sweep point."""
    tag = f"{master_seed}|{image_name}|" + "|".join(repr(v) for v in point)
    digest = hashlib.sha256(tag.encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def _luma_plane(img) -> np.ndarray:
    if isinstance(img, ColorImage):
        return rgb_to_ycbcr(img).planes()[0]
    return img


def _mod_crop(plane: np.ndarray, k: int) -> np.ndarray:
    h, w = plane.shape
    return plane[: h - h % k, : w - w % k]


def run_benchmark(spec: BenchSpec) -> BenchReport:
    """Run the sweep and collect per-run and per-config-average rows.

    Ground-truth images are reduced to their luma plane and mod-cropped to a
    multiple of the run's scale factor so reconstructed dimensions match.
    Unreadable files are skipped with a warning and noted in the report.
    """
    spec.validate()
    paths = sorted(glob.glob(os.path.join(spec.dataset_dir, spec.hr_glob)))
    if not paths:
        raise ValueError(
            f"no images matching {spec.hr_glob!r} in {spec.dataset_dir!r}"
        )
    points = spec.points()
    total = len(paths) * len(points)
    if total > spec.run_cap:
        raise ValueError(
            f"{total} runs exceed the cap of {spec.run_cap}; "
            "shrink the sweep or raise run_cap"
        )

    report = BenchReport(crop_border=spec.crop_border)
    out_dir = spec.output_dir
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)

    for path in paths:
        name = os.path.splitext(os.path.basename(path))[0]
        try:
            hr_full = _luma_plane(read_image(path))
        except (OSError, ValueError) as exc:
            log.warning("skipping unreadable image %s: %s", path, exc)
            report.skipped.append(os.path.basename(path))
            continue
        for point in points:
            k, sharpness, shift, blur_sigma, noise_sigma = point
            base = dict(spec.base)
            base["scale"] = int(k)
            cfg = sr_config_from_dict(base)
            cfg.sigmoid.sharpness = float(sharpness)
            cfg.sigmoid.shift = float(shift)
            cfg.degradation.kernel_sigma = float(blur_sigma)
            cfg.degradation.noise_sigma = float(noise_sigma)
            cfg.degradation.seed = run_seed(spec.master_seed, name, point)
            cfg.validate()

            hr = _mod_crop(hr_full, cfg.scale)
            lr = degrade(hr, cfg.degradation)
            start = time.perf_counter()
            sr, _ = reconstruct(lr, cfg)
            seconds = time.perf_counter() - start

            crop = spec.crop_border if spec.crop_border is not None else cfg.scale
            mp = MetricParams(crop_border=crop)
            row = BenchRow(name, cfg.scale, cfg.sigmoid.sharpness,
                           cfg.sigmoid.shift, cfg.degradation.kernel_sigma,
                           cfg.degradation.noise_sigma,
                           psnr(hr, sr, mp), ssim(hr, sr, mp), seconds)
            report.rows.append(row)
            if out_dir and spec.emit_images:
                tag = (f"{name}_k{k:g}_K{sharpness:g}_B{shift:g}"
                       f"_s{blur_sigma:g}_n{noise_sigma:g}")
                write_image(os.path.join(out_dir, tag + ".pgm"), sr)

    report.rows.sort(key=BenchRow.key)
    report.averages = _config_averages(report.rows)
    return report


def _config_averages(rows: list[BenchRow]) -> list[BenchRow]:
    """One average row per sweep point, arithmetic mean over images."""
    groups: dict[tuple, list[BenchRow]] = {}
    for row in rows:
        groups.setdefault(row.axes(), []).append(row)
    averages = []
    for axes in sorted(groups):
        members = groups[axes]
        averages.append(BenchRow(
            AVG_IMAGE, *axes,
            float(np.mean([r.psnr_db for r in members])),
            float(np.mean([r.ssim for r in members])),
            float(np.mean([r.seconds for r in members])),
        ))
    return averages


def _format_row(row: BenchRow) -> str:
    return ",".join([
        row.image, repr(row.scale), repr(row.sharpness), repr(row.shift),
        repr(row.blur_sigma), repr(row.noise_sigma),
        repr(row.psnr_db), repr(row.ssim), repr(row.seconds),
    ])


def write_report(report: BenchReport, path):
    """Write the report as CSV. Comment lines record the crop convention and
    any skipped inputs; data rows come first, then per-config averages."""
    with open(path, "w", encoding="ascii") as f:
        crop = "per-run scale" if report.crop_border is None else report.crop_border
        f.write(f"# crop_border={crop}\n")
        for name in report.skipped:
            f.write(f"# skipped={name}\n")
        f.write(CSV_HEADER + "\n")
        for row in report.rows + report.averages:
            f.write(_format_row(row) + "\n")


def read_report(path) -> BenchReport:
    """Parse a report CSV back; numeric fields recover at full precision."""
    report = BenchReport()
    with open(path, "r", encoding="ascii") as f:
        lines = [ln.rstrip("\n") for ln in f]
    body = []
    for ln in lines:
        if ln.startswith("# skipped="):
            report.skipped.append(ln.split("=", 1)[1])
        elif ln.startswith("#") or not ln:
            continue
        else:
            body.append(ln)
    if not body or body[0] != CSV_HEADER:
        raise ValueError(f"{path}: not a benchmark report")
    for ln in body[1:]:
        parts = ln.split(",")
        if len(parts) != 9:
            raise ValueError(f"{path}: malformed row {ln!r}")
        row = BenchRow(parts[0], int(parts[1]), *(float(v) for v in parts[2:]))
        (report.averages if row.image == AVG_IMAGE else report.rows).append(row)
    return report
