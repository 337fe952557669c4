"""
아핀 Killing 벡터장 수치 검증

벡터장 X 에 대한 Lie 미분

    (L_X∇)_ij^k = ∂_i∂_j X^k + X^m ∂_m Γ_ij^k − Γ_ij^m ∂_m X^k
                  + Γ_mj^k ∂_i X^m + Γ_im^k ∂_j X^m

를 중심 유한차분(Richardson 보정 1회)으로 계산합니다.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from ..config import config
from ..exceptions import InputDomainError
from ..geometry import CanonicalKind, canonical_model
from .models import ConstantModel, ModelKind, TildeM3Model

logger = logging.getLogger(__name__)


class Basis(str, Enum):
    """벡터장 성분에 쓰이는 기저 함수"""
    ONE = "1"
    X1 = "x1"
    X2 = "x2"
    EXP_X1 = "exp_x1"
    SIN_X2 = "sin_x2"
    COS_X2 = "cos_x2"

    def evaluate(self, x: np.ndarray) -> float:
        return _BASIS_FUNCTIONS[self](x)


_BASIS_FUNCTIONS: Dict[Basis, Callable[[np.ndarray], float]] = {
    Basis.ONE: lambda x: 1.0,
    Basis.X1: lambda x: float(x[0]),
    Basis.X2: lambda x: float(x[1]),
    Basis.EXP_X1: lambda x: math.exp(x[0]),
    Basis.SIN_X2: lambda x: math.sin(x[1]),
    Basis.COS_X2: lambda x: math.cos(x[1]),
}


@dataclass(frozen=True)
class KillingTerm:
    """coefficient × Π factors × ∂_direction"""
    coefficient: float
    factors: Tuple[Basis, ...]
    direction: int

    def __post_init__(self):
        if self.direction not in (0, 1):
            raise InputDomainError(f"방향은 0 또는 1 이어야 합니다: {self.direction}")
        object.__setattr__(self, "factors", tuple(Basis(f) for f in self.factors))

    def evaluate(self, x: np.ndarray) -> float:
        value = float(self.coefficient)
        for factor in self.factors:
            value *= factor.evaluate(x)
        return value


@dataclass(frozen=True)
class VectorFieldSpec:
    name: str
    terms: Tuple[KillingTerm, ...]

    def __call__(self, x: Sequence[float]) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        result = np.zeros(2)
        for term in self.terms:
            result[term.direction] += term.evaluate(x)
        return result


def _term(coefficient: float, direction: int, *factors: Basis) -> KillingTerm:
    return KillingTerm(coefficient, tuple(factors) or (Basis.ONE,), direction)


_M3_FIELDS = (
    VectorFieldSpec("d1", (_term(1.0, 0),)),
    VectorFieldSpec("d2", (_term(1.0, 1),)),
    VectorFieldSpec("exp_cos_d1", (_term(1.0, 0, Basis.EXP_X1, Basis.COS_X2),)),
    VectorFieldSpec("exp_sin_d1", (_term(1.0, 0, Basis.EXP_X1, Basis.SIN_X2),)),
)

_TILDE_M3_FIELDS = (
    VectorFieldSpec("xi1", (_term(1.0, 0, Basis.X1),)),
    VectorFieldSpec("xi2", (_term(1.0, 0, Basis.X1), _term(1.0, 0, Basis.COS_X2))),
    VectorFieldSpec("xi3", (_term(1.0, 0, Basis.X1), _term(-1.0, 0, Basis.SIN_X2))),
    VectorFieldSpec("eta1", (_term(1.0, 1),)),
    VectorFieldSpec("eta2", (_term(1.0, 1), _term(1.0, 0, Basis.SIN_X2))),
    VectorFieldSpec("eta3", (_term(1.0, 1), _term(1.0, 0, Basis.COS_X2))),
)


def killing_fields(name: str) -> Tuple[VectorFieldSpec, ...]:
    """
    알려진 아핀 Killing 벡터장 목록

    :param name: "M3" 또는 "TildeM3"
    """
    fields = {"M3": _M3_FIELDS, "TildeM3": _TILDE_M3_FIELDS}
    if name not in fields:
        raise InputDomainError(f"Killing 벡터장 목록이 없는 모델입니다: {name!r}")
    return fields[name]


def killing_model(name: str) -> ModelKind:
    """killing_fields(name) 에 대응하는 측지선 모델"""
    if name == "M3":
        return ConstantModel(canonical_model(CanonicalKind.M3))
    if name == "TildeM3":
        return TildeM3Model()
    raise InputDomainError(f"알 수 없는 모델 이름입니다: {name!r}")


def _richardson(derivative: Callable[[float], np.ndarray], h: float) -> np.ndarray:
    return (4.0 * derivative(h) - derivative(2.0 * h)) / 3.0


def _jacobian(f: Callable[[np.ndarray], np.ndarray], x: np.ndarray, h: float) -> np.ndarray:
    """J[..., m] = ∂_m f"""
    unit = np.eye(2)

    def central(step: float) -> np.ndarray:
        columns = [(f(x + step * unit[m]) - f(x - step * unit[m])) / (2.0 * step) for m in range(2)]
        return np.stack(columns, axis=-1)

    return _richardson(central, h)


def _hessian(f: Callable[[np.ndarray], np.ndarray], x: np.ndarray, h: float) -> np.ndarray:
    """H[..., i, j] = ∂_i∂_j f"""
    unit = np.eye(2)

    def central(step: float) -> np.ndarray:
        centre = f(x)
        rows = []
        for i in range(2):
            row = []
            for j in range(2):
                if i == j:
                    ei = step * unit[i]
                    value = (f(x + ei) - 2.0 * centre + f(x - ei)) / step ** 2
                else:
                    ei, ej = step * unit[i], step * unit[j]
                    value = (
                        f(x + ei + ej) - f(x + ei - ej) - f(x - ei + ej) + f(x - ei - ej)
                    ) / (4.0 * step ** 2)
                row.append(value)
            rows.append(np.stack(row, axis=-1))
        return np.stack(rows, axis=-2)

    return _richardson(central, h)


def _check_step(h: float) -> float:
    if not (math.isfinite(h) and h > 0):
        raise InputDomainError(f"유한차분 스텝은 양수여야 합니다: {h!r}")
    return float(h)


def lie_derivative_connection(
    kind: ModelKind,
    field: VectorFieldSpec,
    point: Sequence[float],
    h: Optional[float] = None,
) -> np.ndarray:
    """
    한 점에서 L[i, j, k] = (L_X∇)(∂_i, ∂_j)^k 를 계산합니다.

    :param kind: 측지선 모델
    :param field: 벡터장 X
    :param point: 평가 점
    :param h: 유한차분 스텝 (기본: config.killing.step)
    :return: 2×2×2 배열
    """
    h = _check_step(config.killing.step if h is None else h)
    x = np.asarray(point, dtype=float)
    G = kind.christoffel(x)
    X = field(x)
    J = _jacobian(field, x, h)
    H = _hessian(field, x, h)
    # dGamma[i, j, k, m] = ∂_m Γ_ij^k
    d_gamma = _jacobian(kind.christoffel, x, h)
    along = np.einsum("ijkm,m->ijk", d_gamma, X)
    return (
        np.transpose(H, (1, 2, 0))
        + along
        - np.einsum("ijm,km->ijk", G, J)
        + np.einsum("mjk,mi->ijk", G, J)
        + np.einsum("imk,mj->ijk", G, J)
    )


def verify_killing(
    kind: ModelKind,
    field: VectorFieldSpec,
    points: Iterable[Sequence[float]],
    h: Optional[float] = None,
) -> float:
    """
    여러 점에서 |L_X∇| 성분의 최대값을 반환합니다.

    :param kind: 측지선 모델
    :param field: 벡터장
    :param points: 평가 점들
    :param h: 유한차분 스텝
    :return: 최대 잔차
    """
    h = _check_step(config.killing.step if h is None else h)
    points = [np.asarray(p, dtype=float) for p in points]
    if not points:
        raise InputDomainError("검증할 점이 없습니다")
    residual = max(
        float(np.max(np.abs(lie_derivative_connection(kind, field, p, h)))) for p in points
    )
    logger.debug("Killing 잔차 %s/%s: %.3e", kind.label, field.name, residual)
    return residual


def _chart(x: np.ndarray) -> np.ndarray:
    return np.array([math.exp(-x[0]), x[1]])


def tilde_m3_chart_check(x: Sequence[float], h: Optional[float] = None) -> float:
    """
    Φ(x) = (e^{−x¹}, x²) 로 M₃ 의 Christoffel 기호를 옮겨
    Γ₂₂¹ = u¹ (나머지 0) 과의 최대 편차를 반환합니다.
    """
    h = _check_step(config.killing.chart_step if h is None else h)
    x = np.asarray(x, dtype=float)
    G = canonical_model(CanonicalKind.M3).gamma()
    J = _jacobian(_chart, x, h)
    H = _hessian(_chart, x, h)
    J_inv = np.linalg.inv(J)
    transformed = (
        np.einsum("ia,jb,ck,ijk->abc", J_inv, J_inv, J, G)
        - np.einsum("ia,jb,cij->abc", J_inv, J_inv, H)
    )
    expected = TildeM3Model().christoffel(_chart(x))
    return float(np.max(np.abs(transformed - expected)))
