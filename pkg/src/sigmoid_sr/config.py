"""JSON-friendly (de)serialization of solver settings.

Dict keys mirror the dataclass field names, with nested "sigmoid" and
"degradation" sections. ``scale`` given at the top level is wired into the
sharpener and the degradation model automatically so a partial config stays
consistent.
"""

from __future__ import annotations

from dataclasses import asdict

from .imageops import DegradationModel
from .reconstruct import SRConfig
from .sharpen import SigmoidParams

__all__ = [
    "sr_config_from_dict",
    "sr_config_to_dict",
    "sigmoid_params_from_dict",
    "degradation_model_from_dict",
]


def _apply_fields(obj, values: dict, what: str):
    for name, value in values.items():
        if not hasattr(obj, name):
            raise ValueError(f"unknown {what} field {name!r}")
        setattr(obj, name, value)


def sr_config_from_dict(d: dict) -> SRConfig:
    """Build an SRConfig from a (possibly partial) dict of field values."""
    d = dict(d)
    sigmoid_d = dict(d.pop("sigmoid", {}))
    degradation_d = dict(d.pop("degradation", {}))

    cfg = SRConfig(sigmoid=SigmoidParams(), degradation=DegradationModel())
    _apply_fields(cfg, d, "solver")
    cfg.sigmoid.scale = cfg.scale
    cfg.degradation.factor = cfg.scale
    _apply_fields(cfg.sigmoid, sigmoid_d, "sigmoid")
    _apply_fields(cfg.degradation, degradation_d, "degradation")
    cfg.validate()
    return cfg


def sr_config_to_dict(cfg: SRConfig) -> dict:
    return asdict(cfg)


def sigmoid_params_from_dict(d: dict) -> SigmoidParams:
    """Sharpener settings alone, from a full or partial solver config.

    Unlike :func:`sr_config_from_dict` this tolerates scale 1 (sharpening at
    native resolution) and ignores unrelated solver fields.
    """
    params = SigmoidParams()
    if "scale" in d:
        params.scale = d["scale"]
    _apply_fields(params, dict(d.get("sigmoid", {})), "sigmoid")
    params.validate()
    return params


def degradation_model_from_dict(d: dict) -> DegradationModel:
    """Degradation settings alone; tolerates factor 1 (pure blur + noise)."""
    model = DegradationModel()
    if "scale" in d:
        model.factor = d["scale"]
    _apply_fields(model, dict(d.get("degradation", {})), "degradation")
    model.validate()
    return model
