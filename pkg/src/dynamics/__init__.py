"""
측지선 동역학 모듈

측지선 방정식 모델, 폭주 감지 적응형 적분기, 닫힌 형식 측지선과 지수 사상,
계수 1 불완비 증인, Killing 벡터장 검증, 측지선 부채꼴을 제공합니다.
"""

from .models import (
    ConstantModel,
    GeodesicState,
    ModelKind,
    TildeM3Model,
    geodesic_equation_residual,
    geodesic_rhs,
)
from .integrator import (
    IntegrationOptions,
    IntegrationStats,
    SampledPath,
    Termination,
    Trajectory,
    integrate,
    integrate_system,
)
from .closed_form import (
    ExpKind,
    closed_form_m2,
    closed_form_m3tilde,
    exp_map,
    h_function,
    log_geodesic_curve,
    velocity_m2,
    velocity_m3tilde,
)
from .witness import Rank1Witness, adapted_frame, rank1_incomplete_witness
from .killing import (
    Basis,
    KillingTerm,
    VectorFieldSpec,
    killing_fields,
    killing_model,
    lie_derivative_connection,
    tilde_m3_chart_check,
    verify_killing,
)
from .fan import geodesic_fan

__all__ = [
    "ConstantModel",
    "GeodesicState",
    "ModelKind",
    "TildeM3Model",
    "geodesic_equation_residual",
    "geodesic_rhs",
    "IntegrationOptions",
    "IntegrationStats",
    "SampledPath",
    "Termination",
    "Trajectory",
    "integrate",
    "integrate_system",
    "ExpKind",
    "closed_form_m2",
    "closed_form_m3tilde",
    "exp_map",
    "h_function",
    "log_geodesic_curve",
    "velocity_m2",
    "velocity_m3tilde",
    "Rank1Witness",
    "adapted_frame",
    "rank1_incomplete_witness",
    "Basis",
    "KillingTerm",
    "VectorFieldSpec",
    "killing_fields",
    "killing_model",
    "lie_derivative_connection",
    "tilde_m3_chart_check",
    "verify_killing",
    "geodesic_fan",
]
