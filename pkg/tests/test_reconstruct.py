import numpy as np
import pytest

from sigmoid_sr import (
    DegradationModel,
    SigmoidParams,
    SRConfig,
    bicubic_resize,
    cost,
    default_config,
    degrade,
    gaussian_kernel,
    psnr,
    MetricParams,
    quantize_u8,
    reconstruct,
    residual_upscale,
    sr_color,
    ColorImage,
    rgb_to_ycbcr,
)
from sigmoid_sr.fixtures import blobs, step_edge


def small_config(scale=3, **overrides):
    cfg = default_config(scale)
    cfg.max_iters = overrides.pop("max_iters", 10)
    for k, v in overrides.items():
        setattr(cfg, k, v)
    return cfg


class TestResidualUpscale:
    def test_scale_one_bicubic_is_identity(self, rng):
        r = rng.uniform(-5, 5, (7, 7))
        assert np.abs(residual_upscale(r, 1, "bicubic") - r).max() < 1e-12

    def test_constant_residual_stays_constant(self):
        r = np.full((5, 5), 2.5)
        up = residual_upscale(r, 3, "bicubic")
        assert up.shape == (15, 15)
        assert np.abs(up - 2.5).max() < 1e-12

    def test_zero_insert_blur_stamps_scaled_kernel(self):
        # delta at LR (1,1), k=3: 9x the flipped kernel centered at HR (3,3)
        kernel = gaussian_kernel(7, 1.2)
        r = np.zeros((5, 5))
        r[1, 1] = 1.0
        up = residual_upscale(r, 3, "zero_insert_blur", kernel)
        assert up.shape == (15, 15)
        assert np.abs(up[:7, :7] - 9.0 * kernel).max() < 1e-12
        assert np.abs(up[8:, :]).max() == 0.0
        assert np.abs(up[:, 8:]).max() == 0.0

    def test_kernel_required_for_zero_insert(self):
        with pytest.raises(ValueError):
            residual_upscale(np.zeros((4, 4)), 2, "zero_insert_blur")

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError):
            residual_upscale(np.zeros((4, 4)), 2, "nearest")


class TestCost:
    def test_zero_when_consistent_and_unregularized(self):
        cfg = small_config(reg_weight=0.0)
        x = np.full((12, 12), 30.0)
        y = degrade(x, cfg.degradation)
        assert cost(x, y, np.zeros_like(x), cfg) == pytest.approx(0.0, abs=1e-18)

    def test_zero_at_joint_fixed_point(self):
        cfg = small_config(reg_weight=0.7)
        x = np.full((12, 12), 30.0)
        y = degrade(x, cfg.degradation)
        assert cost(x, y, x, cfg) == 0.0

    def test_hand_computed_toy(self):
        # 6x6 constant 10 vs 2x2 constant 8 through a size-1 kernel:
        # 4 LR pixels each off by 2 -> data term 16
        cfg = small_config()
        cfg.degradation = DegradationModel(kernel_size=1, kernel_sigma=1.0, factor=3)
        x = np.full((6, 6), 10.0)
        y = np.full((2, 2), 8.0)
        assert cost(x, y, x, cfg) == pytest.approx(16.0, abs=1e-12)

    def test_dimension_mismatch_rejected(self):
        cfg = small_config()
        with pytest.raises(ValueError):
            cost(np.zeros((12, 12)), np.zeros((3, 3)), np.zeros((12, 12)), cfg)
        with pytest.raises(ValueError):
            cost(np.zeros((12, 12)), np.zeros((4, 4)), np.zeros((9, 9)), cfg)


class TestReconstruct:
    def test_zero_step_returns_bicubic_init(self):
        y = blobs(36)[::3, ::3]
        cfg = small_config(step_size=0.0, max_iters=3)
        out, trace = reconstruct(y, cfg)
        init = np.clip(bicubic_resize(y, 36, 36), 0, 255)
        assert np.array_equal(out, init)
        assert len(trace) == 3

    def test_true_image_is_fixed_point(self):
        x_true = np.full((18, 18), 90.0)
        cfg = small_config(reg_weight=0.0, max_iters=5)
        y = degrade(x_true, cfg.degradation)
        out, trace = reconstruct(y, cfg, x0=x_true)
        assert np.abs(out - x_true).max() < 1e-9
        assert trace.cost[0] == 0.0

    def test_constant_image_joint_fixed_point(self):
        # constant planes satisfy both the data term and the sharpener
        x_true = np.full((18, 18), 90.0)
        cfg = small_config(max_iters=5)
        y = degrade(x_true, cfg.degradation)
        out, _ = reconstruct(y, cfg, x0=x_true)
        assert np.abs(out - x_true).max() < 1e-9

    def test_improves_on_bicubic(self):
        hr = blobs(60)
        cfg = small_config(max_iters=30)
        lr = degrade(hr, cfg.degradation)
        out, _ = reconstruct(lr, cfg)
        base = bicubic_resize(lr, 60, 60)
        mp = MetricParams(crop_border=3)
        assert psnr(hr, out, mp) > psnr(hr, base, mp) + 1.0

    def test_cost_trace_descends(self):
        hr = step_edge(48)
        cfg = small_config(max_iters=15)
        lr = degrade(hr, cfg.degradation)
        _, trace = reconstruct(lr, cfg)
        assert len(trace) == 15
        drops = sum(a < b for b, a in zip(trace.cost, trace.cost_after))
        assert drops >= 14
        assert trace.cost_after[-1] < trace.cost[0]

    def test_deterministic(self):
        hr = blobs(36)
        cfg = small_config(max_iters=5)
        lr = degrade(hr, cfg.degradation)
        a, _ = reconstruct(lr, cfg)
        b, _ = reconstruct(lr, cfg)
        assert np.array_equal(a, b)

    def test_output_clamped(self):
        hr = step_edge(36, low=2.0, high=253.0)
        cfg = small_config(max_iters=10)
        lr = degrade(hr, cfg.degradation)
        out, _ = reconstruct(lr, cfg)
        assert out.min() >= 0.0 and out.max() <= 255.0

    def test_stop_tol_exits_early(self):
        hr = blobs(36)
        cfg = small_config(max_iters=30, stop_tol=1e3)  # absurdly loose
        lr = degrade(hr, cfg.degradation)
        _, trace = reconstruct(lr, cfg)
        assert len(trace) == 1

    def test_zero_insert_mode_also_improves(self):
        hr = blobs(60)
        cfg = small_config(max_iters=20, residual_upscaler="zero_insert_blur")
        lr = degrade(hr, cfg.degradation)
        out, _ = reconstruct(lr, cfg)
        base = bicubic_resize(lr, 60, 60)
        mp = MetricParams(crop_border=3)
        assert psnr(hr, out, mp) > psnr(hr, base, mp)

    def test_x0_dims_validated(self):
        cfg = small_config()
        with pytest.raises(ValueError):
            reconstruct(np.zeros((8, 8)), cfg, x0=np.zeros((10, 10)))

    def test_tiny_input_rejected(self):
        with pytest.raises(ValueError):
            reconstruct(np.zeros((1, 5)), small_config())


class TestConfig:
    def test_defaults_follow_reference_protocol(self):
        cfg = SRConfig()
        assert cfg.scale == 3
        assert cfg.reg_weight == 0.2
        assert cfg.step_size == 0.1
        assert cfg.max_iters == 30
        assert cfg.sigmoid.sharpness == 2.0
        assert cfg.sigmoid.shift == 0.0
        assert cfg.sigmoid.patch_size == 3
        assert cfg.sigmoid.stride == 1
        assert cfg.degradation.kernel_size == 7
        assert cfg.degradation.kernel_sigma == 1.2
        cfg.validate()

    def test_scale_mismatch_rejected(self):
        cfg = SRConfig(scale=4)
        with pytest.raises(ValueError):
            cfg.validate()
        cfg = default_config(4)
        cfg.degradation.factor = 3
        with pytest.raises(ValueError):
            cfg.validate()

    def test_default_config_rejects_unknown_field(self):
        with pytest.raises(TypeError):
            default_config(3, step=0.5)

    def test_invalid_settings_rejected(self):
        for field, value in [("reg_weight", -0.1), ("step_size", -1.0),
                             ("max_iters", 0), ("stop_tol", -1e-9),
                             ("residual_upscaler", "splines")]:
            cfg = default_config(3)
            setattr(cfg, field, value)
            with pytest.raises(ValueError):
                cfg.validate()


class TestSrColor:
    def make_rgb(self, plane):
        u8 = quantize_u8(plane)
        return ColorImage(np.stack([u8, u8, u8], axis=-1), "rgb")

    def test_grayscale_content_keeps_neutral_chroma(self):
        img = self.make_rgb(blobs(24))
        cfg = small_config(max_iters=3)
        out, _ = sr_color(img, cfg)
        assert out.space == "rgb"
        ycc = rgb_to_ycbcr(out)
        assert np.abs(ycc.data[:, :, 1].astype(int) - 128).max() <= 1
        assert np.abs(ycc.data[:, :, 2].astype(int) - 128).max() <= 1

    def test_output_dims_scale_up(self):
        img = self.make_rgb(blobs(24))
        out, _ = sr_color(img, small_config(max_iters=2))
        assert (out.height, out.width) == (72, 72)

    def test_luma_matches_gray_pipeline(self):
        img = self.make_rgb(blobs(24))
        cfg = small_config(max_iters=5)
        color_out, _ = sr_color(img, cfg)
        y_in = rgb_to_ycbcr(img).planes()[0]
        gray_out, _ = reconstruct(y_in, cfg)
        y_color = rgb_to_ycbcr(color_out).planes()[0]
        mp = MetricParams(crop_border=3)
        # same luma input, same solver: scores agree to well under 0.01 dB
        ref = blobs(24)
        ref_hr = bicubic_resize(ref, 72, 72)
        assert abs(psnr(ref_hr, y_color, mp) - psnr(ref_hr, quantize_u8(gray_out).astype(float), mp)) < 0.01

    def test_requires_rgb_tag(self):
        img = ColorImage(np.zeros((12, 12, 3), dtype=np.uint8), "ycbcr")
        with pytest.raises(ValueError):
            sr_color(img, small_config(max_iters=2))
