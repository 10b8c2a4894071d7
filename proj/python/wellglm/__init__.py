"""Python bindings for the wellglm C++ core."""

from ._core import (
    Family,
    Response,
    WellglmError,
    aae,
    cap_temperatures,
    deserialize_model,
    drop_incomplete_rows,
    expand,
    feature_spec,
    fit,
    load_wells,
    log_worth,
    mahalanobis,
    mahalanobis_cutoff,
    predict,
    rase,
    residual_report,
    rsquare,
    serialize_model,
    simulate_well,
    wald_effects,
)

__version__ = "0.1.0"

__all__ = [
    "Family",
    "Response",
    "WellglmError",
    "aae",
    "cap_temperatures",
    "deserialize_model",
    "drop_incomplete_rows",
    "expand",
    "feature_spec",
    "fit",
    "load_wells",
    "log_worth",
    "mahalanobis",
    "mahalanobis_cutoff",
    "predict",
    "rase",
    "residual_report",
    "rsquare",
    "serialize_model",
    "simulate_well",
    "wald_effects",
]
