"""Exact construction and verification of tangent circle chains on a line."""

from .configurations import (
    ChainConfig,
    ConstructionError,
    Kind,
    SquareResult,
    VerificationReport,
    assemble,
    build_ca,
    build_cb,
    chain_radius_ca,
    chain_radius_cb,
    incircle_delta,
    minus_sign_root,
    square_in_delta,
    verify_config,
)
from .geom import (
    Circle,
    Point,
    Tangency,
    foot_on_baseline,
    tangency_kind,
    tangency_point,
    touches_baseline,
)
from .qfield import QNum, RadicandMismatch, qnum_arith, qnum_sign, qnum_sqrt, qnum_to_float

__all__ = [
    "ChainConfig",
    "Circle",
    "ConstructionError",
    "Kind",
    "Point",
    "QNum",
    "RadicandMismatch",
    "SquareResult",
    "Tangency",
    "VerificationReport",
    "assemble",
    "build_ca",
    "build_cb",
    "chain_radius_ca",
    "chain_radius_cb",
    "foot_on_baseline",
    "incircle_delta",
    "minus_sign_root",
    "qnum_arith",
    "qnum_sign",
    "qnum_sqrt",
    "qnum_to_float",
    "square_in_delta",
    "tangency_kind",
    "tangency_point",
    "touches_baseline",
    "verify_config",
]
