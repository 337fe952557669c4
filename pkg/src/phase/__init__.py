"""
위상 평면 분석 모듈

속도 흐름 벡터장, 흐름 곡선 적분, 격자 표본, 단조성/포획 증명서를 제공합니다.
"""

from .field import (
    FlowCurve,
    PhaseField,
    field_grid,
    fixed_point_mask,
    flow_integrate,
    phase_field_eval,
    quadrant_trapped,
)
from .certificates import radial_certificate, radial_rate, slope_certificate, slope_rate

__all__ = [
    "FlowCurve",
    "PhaseField",
    "field_grid",
    "fixed_point_mask",
    "flow_integrate",
    "phase_field_eval",
    "quadrant_trapped",
    "radial_certificate",
    "radial_rate",
    "slope_certificate",
    "slope_rate",
]
