"""
측지선 방정식 모델

상수 Christoffel 모델과 Γ₂₂¹ = x¹ 인 가변 계수 모델 M̃₃ 의 측지선 가속도
ẍ^k = −Γ_ij^k(x) ẋ^i ẋ^j 를 제공합니다.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..exceptions import InputDomainError
from ..geometry import ChristoffelSymbols


def _vector(name: str, values: Sequence[float]) -> np.ndarray:
    array = np.asarray(values, dtype=float).reshape(-1)
    if array.shape != (2,):
        raise InputDomainError(f"{name}는 길이 2 벡터여야 합니다: {values!r}")
    if not np.all(np.isfinite(array)):
        raise InputDomainError(f"{name}에 유한하지 않은 값이 있습니다: {values!r}")
    return array


class ModelKind(ABC):
    """측지선 방정식을 제공하는 모델"""

    @property
    @abstractmethod
    def label(self) -> str:
        """CSV/JSON 출력용 이름"""

    @abstractmethod
    def christoffel(self, x: np.ndarray) -> np.ndarray:
        """점 x 에서의 G[i, j, k] = Γ_ij^k(x)"""

    @abstractmethod
    def acceleration(self, x: np.ndarray, v: np.ndarray) -> np.ndarray:
        """ẍ = −Γ(x)(v, v)"""


@dataclass(frozen=True)
class ConstantModel(ModelKind):
    symbols: ChristoffelSymbols

    @property
    def label(self) -> str:
        return "constant"

    def christoffel(self, x: np.ndarray) -> np.ndarray:
        return self.symbols.gamma()

    def acceleration(self, x: np.ndarray, v: np.ndarray) -> np.ndarray:
        C = self.symbols
        v1, v2 = float(v[0]), float(v[1])
        return np.array([
            -(C.c111 * v1 * v1 + 2.0 * C.c121 * v1 * v2 + C.c221 * v2 * v2),
            -(C.c112 * v1 * v1 + 2.0 * C.c122 * v1 * v2 + C.c222 * v2 * v2),
        ])


@dataclass(frozen=True)
class TildeM3Model(ModelKind):
    """Γ₂₂¹(x) = x¹, 나머지 기호는 0"""

    @property
    def label(self) -> str:
        return "tilde_m3"

    def christoffel(self, x: np.ndarray) -> np.ndarray:
        g = np.zeros((2, 2, 2))
        g[1, 1, 0] = float(x[0])
        return g

    def acceleration(self, x: np.ndarray, v: np.ndarray) -> np.ndarray:
        return np.array([-float(x[0]) * float(v[1]) ** 2, 0.0])


@dataclass(frozen=True, eq=False)
class GeodesicState:
    x: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x", _vector("x", self.x))
        object.__setattr__(self, "v", _vector("v", self.v))

    def as_array(self) -> np.ndarray:
        return np.concatenate([self.x, self.v])

    @classmethod
    def from_array(cls, y: Sequence[float]) -> "GeodesicState":
        y = np.asarray(y, dtype=float)
        return cls(y[:2], y[2:4])

    def speed(self) -> float:
        return math.hypot(self.v[0], self.v[1])


def geodesic_rhs(kind: ModelKind, state: GeodesicState) -> np.ndarray:
    """(ẋ, ẍ) = (v, −Γ(x)(v, v))"""
    return np.concatenate([state.v, kind.acceleration(state.x, state.v)])


def geodesic_equation_residual(
    kind: ModelKind,
    x: Sequence[float],
    v: Sequence[float],
    acc: Sequence[float],
) -> float:
    """해석적 곡선의 (x, ẋ, ẍ) 에 대한 |ẍ + Γ(ẋ, ẋ)| 최대값"""
    x, v = _vector("x", x), _vector("v", v)
    return float(np.max(np.abs(np.asarray(acc, dtype=float) - kind.acceleration(x, v))))
