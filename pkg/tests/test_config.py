import pytest

from sigmoid_sr import (
    degradation_model_from_dict,
    sigmoid_params_from_dict,
    sr_config_from_dict,
    sr_config_to_dict,
)


class TestSrConfigFromDict:
    def test_empty_dict_gives_defaults(self):
        cfg = sr_config_from_dict({})
        assert cfg.scale == 3
        assert cfg.sigmoid.scale == 3
        assert cfg.degradation.factor == 3

    def test_scale_wires_nested_sections(self):
        cfg = sr_config_from_dict({"scale": 4})
        assert cfg.sigmoid.scale == 4
        assert cfg.degradation.factor == 4
        cfg.validate()

    def test_nested_overrides(self):
        cfg = sr_config_from_dict({
            "reg_weight": 0.5,
            "sigmoid": {"sharpness": 3.0, "blend": "mean"},
            "degradation": {"kernel_sigma": 0.8, "noise_sigma": 2.0},
        })
        assert cfg.reg_weight == 0.5
        assert cfg.sigmoid.sharpness == 3.0
        assert cfg.sigmoid.blend == "mean"
        assert cfg.degradation.kernel_sigma == 0.8

    def test_explicit_nested_conflict_rejected(self):
        with pytest.raises(ValueError):
            sr_config_from_dict({"scale": 3, "degradation": {"factor": 2}})

    def test_unknown_fields_rejected(self):
        with pytest.raises(ValueError):
            sr_config_from_dict({"lr": 0.1})
        with pytest.raises(ValueError):
            sr_config_from_dict({"sigmoid": {"kappa": 2}})

    def test_roundtrip_through_dict(self):
        cfg = sr_config_from_dict({"scale": 2, "max_iters": 7,
                                   "sigmoid": {"shift": -1.0}})
        again = sr_config_from_dict(sr_config_to_dict(cfg))
        assert again == cfg


class TestPartialExtractors:
    def test_sigmoid_params_allow_native_scale(self):
        params = sigmoid_params_from_dict({"scale": 1, "sigmoid": {"sharpness": 3.0},
                                           "max_iters": 5})
        assert params.scale == 1
        assert params.sharpness == 3.0

    def test_degradation_model_allows_factor_one(self):
        model = degradation_model_from_dict({"scale": 1,
                                             "degradation": {"noise_sigma": 2.0}})
        assert model.factor == 1
        assert model.noise_sigma == 2.0

    def test_extractors_still_validate(self):
        with pytest.raises(ValueError):
            sigmoid_params_from_dict({"sigmoid": {"sharpness": -1.0}})
        with pytest.raises(ValueError):
            degradation_model_from_dict({"degradation": {"kernel_size": 4}})
