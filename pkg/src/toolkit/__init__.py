"""
명령줄 도구 모듈

모델 JSON 문서, CSV/JSON/SVG 출력, 모듈라이 곡선 데이터, 교차 검증 스윕, CLI 를 제공합니다.
"""

from .documents import (
    ModelDocument,
    document_from_dict,
    load_document,
    parse_document,
    serialize_document,
)
from .moduli import (
    ModuliBranch,
    ModuliCurvePoint,
    delta_segment,
    moduli_points,
    sigma_minus,
    sigma_plus,
)
from .emitters import (
    atomic_write_text,
    fan_svg,
    flow_svg,
    grid_csv,
    moduli_csv,
    moduli_svg,
    read_start_points,
    trajectory_csv,
    trajectory_json,
)
from .sweep import (
    OracleResult,
    SweepRecord,
    SweepReport,
    numerical_oracle,
    random_models,
    run_sweep,
    transverse_rate,
)

__all__ = [
    "ModelDocument",
    "document_from_dict",
    "load_document",
    "parse_document",
    "serialize_document",
    "ModuliBranch",
    "ModuliCurvePoint",
    "delta_segment",
    "moduli_points",
    "sigma_minus",
    "sigma_plus",
    "atomic_write_text",
    "fan_svg",
    "flow_svg",
    "grid_csv",
    "moduli_csv",
    "moduli_svg",
    "read_start_points",
    "trajectory_csv",
    "trajectory_json",
    "OracleResult",
    "SweepRecord",
    "SweepReport",
    "numerical_oracle",
    "random_models",
    "run_sweep",
    "transverse_rate",
]
