"""
설정 관리 모듈

수치 허용오차, 적분기, Killing 검증, 스윕, 그림 출력의 기본값을 관리합니다.
재현성을 위해 환경 변수는 읽지 않으며, 모든 값은 함수 인자나 CLI 플래그로 덮어씁니다.
"""

from pathlib import Path
from dataclasses import dataclass, fields
from typing import Optional, Tuple

from .exceptions import ConfigurationError

# 프로젝트 루트 디렉토리
PROJECT_ROOT = Path(__file__).parent.parent


def _require_positive(section: object) -> None:
    for f in fields(section):
        value = getattr(section, f.name)
        if isinstance(value, (int, float)) and not isinstance(value, bool) and value <= 0:
            raise ConfigurationError(
                f"{type(section).__name__}.{f.name} 값은 양수여야 합니다: {value}"
            )


@dataclass
class ToleranceConfig:
    """대수적 판정에 쓰이는 허용오차"""
    rank_tol: float = 1e-10
    zero_tol: float = 1e-9
    residual_tol: float = 1e-9
    invertibility_tol: float = 1e-12
    genericity_ratio: float = 1e-3
    delta_consistency_tol: float = 1e-6
    root_merge_tol: float = 1e-7
    root_check_tol: float = 1e-8  # 상대 잔차 |p(λ)| / Σ|c_k||λ|^k


@dataclass
class IntegratorConfig:
    """적응형 Runge-Kutta 적분기 설정"""
    rtol: float = 1e-10
    atol: float = 1e-10
    blow_up_norm: float = 1e8
    min_step_ratio: float = 1e-13  # |t_span| 대비 최소 스텝
    escape_fit_window: int = 10
    max_steps: int = 200_000
    h_switch_tol: float = 1e-4  # h(t;d) 급수 분기 기준


@dataclass
class KillingConfig:
    """유한차분 기반 Killing 필드 검증 설정"""
    step: float = 1e-3
    chart_step: float = 1e-3


@dataclass
class SweepConfig:
    """대수 판정 vs 수치 오라클 교차 검증 스윕 설정"""
    count: int = 200
    seed: int = 7
    horizon: float = 200.0
    oracle_samples: int = 50
    entry_bound: float = 2.0
    rank_filter_tol: float = 1e-8
    escape_tol: float = 1e-2
    backward_span: float = 1.5
    witness_growth: float = 100.0  # 증인 역방향 적분의 폭주 판정 배율 상한
    witness_min_growth: float = 1.2
    witness_drift_digits: float = 6.0
    witness_rtol: float = 1e-12


@dataclass
class NormalizeConfig:
    """일반 위치 정규화(전단 변환) 설정"""
    max_retries: int = 64


@dataclass
class FigureConfig:
    """SVG 출력 설정 (800×800 고정 캔버스)"""
    canvas_px: int = 800
    dpi: int = 100
    svg_hashsalt: str = "type-a-completeness"

    @property
    def figsize(self) -> Tuple[float, float]:
        side = self.canvas_px / self.dpi
        return side, side


class Config:

    def __init__(self):
        self.tolerance = ToleranceConfig()
        self.integrator = IntegratorConfig()
        self.killing = KillingConfig()
        self.sweep = SweepConfig()
        self.normalize = NormalizeConfig()
        self.figure = FigureConfig()

    def validate(self) -> bool:
        for section in (
            self.tolerance,
            self.integrator,
            self.killing,
            self.sweep,
            self.normalize,
            self.figure,
        ):
            _require_positive(section)
        return True

    def get_status(self) -> dict:
        return {
            "rank_tol": self.tolerance.rank_tol,
            "residual_tol": self.tolerance.residual_tol,
            "rtol": self.integrator.rtol,
            "atol": self.integrator.atol,
            "blow_up_norm": self.integrator.blow_up_norm,
            "sweep_count": self.sweep.count,
            "sweep_seed": self.sweep.seed,
        }

    def is_ready(self) -> Tuple[bool, Optional[str]]:
        try:
            self.validate()
        except ConfigurationError as e:
            return False, str(e)
        return True, None


config = Config()
