"""
Christoffel 기호 값 타입과 정준 모델 모듈

Type A 모델은 ℝ² 위의 상수 Christoffel 기호 C_ij^k 여섯 개로 결정됩니다.
하첨자 대칭(C_ij^k = C_ji^k)은 i ≤ j 성분만 저장하는 구조로 보장합니다.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Mapping, Optional, Tuple, Union

import numpy as np

from ..exceptions import InputDomainError

# JSON 문서와 공유하는 "ijk" 키 순서
CHRISTOFFEL_KEYS: Tuple[str, ...] = ("111", "112", "121", "122", "221", "222")


def _as_finite(name: str, value: float) -> float:
    try:
        number = float(value)
    except (TypeError, ValueError) as e:
        raise InputDomainError(f"{name} 값이 실수가 아닙니다: {value!r}") from e
    if not math.isfinite(number):
        raise InputDomainError(f"{name} 값이 유한하지 않습니다: {value!r}")
    return number


@dataclass(frozen=True)
class ChristoffelSymbols:
    """상수 Christoffel 기호 (cIJK = C_ij^k, i ≤ j)"""
    c111: float = 0.0
    c112: float = 0.0
    c121: float = 0.0
    c122: float = 0.0
    c221: float = 0.0
    c222: float = 0.0

    def __post_init__(self):
        for key in CHRISTOFFEL_KEYS:
            name = f"c{key}"
            object.__setattr__(self, name, _as_finite(name, getattr(self, name)))

    def gamma(self) -> np.ndarray:
        """
        전체 2×2×2 배열을 반환합니다.

        :return: G[i, j, k] = Γ_ij^k (0-based 인덱스)
        """
        g = np.zeros((2, 2, 2))
        g[0, 0, 0] = self.c111
        g[0, 0, 1] = self.c112
        g[0, 1, 0] = g[1, 0, 0] = self.c121
        g[0, 1, 1] = g[1, 0, 1] = self.c122
        g[1, 1, 0] = self.c221
        g[1, 1, 1] = self.c222
        return g

    @classmethod
    def from_gamma(cls, g: np.ndarray) -> "ChristoffelSymbols":
        """2×2×2 배열로부터 생성합니다. 하첨자는 대칭화됩니다."""
        g = np.asarray(g, dtype=float)
        if g.shape != (2, 2, 2):
            raise InputDomainError(f"Christoffel 배열의 형태가 잘못되었습니다: {g.shape}")
        off_k0 = 0.5 * (g[0, 1, 0] + g[1, 0, 0])
        off_k1 = 0.5 * (g[0, 1, 1] + g[1, 0, 1])
        return cls(g[0, 0, 0], g[0, 0, 1], off_k0, off_k1, g[1, 1, 0], g[1, 1, 1])

    def entries(self) -> Tuple[float, ...]:
        return tuple(getattr(self, f"c{key}") for key in CHRISTOFFEL_KEYS)

    def as_dict(self) -> Dict[str, float]:
        return {key: getattr(self, f"c{key}") for key in CHRISTOFFEL_KEYS}

    @classmethod
    def from_dict(cls, mapping: Mapping[str, float]) -> "ChristoffelSymbols":
        return cls(**{f"c{key}": mapping[key] for key in CHRISTOFFEL_KEYS})

    def max_abs(self) -> float:
        return max(abs(value) for value in self.entries())

    def is_zero(self) -> bool:
        return all(value == 0.0 for value in self.entries())


@dataclass(frozen=True)
class SymmetricBilinear:
    """대칭 2×2 행렬 (ρ, ρ̌)"""
    m11: float
    m12: float
    m22: float

    def __post_init__(self):
        for name in ("m11", "m12", "m22"):
            object.__setattr__(self, name, _as_finite(name, getattr(self, name)))

    def matrix(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m12, self.m22]])

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "SymmetricBilinear":
        m = np.asarray(m, dtype=float)
        return cls(m[0, 0], 0.5 * (m[0, 1] + m[1, 0]), m[1, 1])

    @property
    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m12

    def norm_inf(self) -> float:
        return max(abs(self.m11), abs(self.m12), abs(self.m22))

    def evaluate(self, xi, eta) -> float:
        """ρ(ξ, η)"""
        return float(np.asarray(xi, dtype=float) @ self.matrix() @ np.asarray(eta, dtype=float))

    def to_list(self):
        return [[self.m11, self.m12], [self.m12, self.m22]]


@dataclass(frozen=True, eq=False)
class RicciDerivative:
    """∇_i ρ_jk 성분 (j, k에 대해 대칭)"""
    components: np.ndarray

    def __post_init__(self):
        d = np.array(self.components, dtype=float)
        if d.shape != (2, 2, 2):
            raise InputDomainError(f"∇ρ 배열의 형태가 잘못되었습니다: {d.shape}")
        if not np.all(np.isfinite(d)):
            raise InputDomainError("∇ρ 성분이 유한하지 않습니다")
        d = 0.5 * (d + d.transpose(0, 2, 1))
        d.setflags(write=False)
        object.__setattr__(self, "components", d)

    def __getitem__(self, index):
        return float(self.components[index])

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.components)))

    def to_list(self):
        return self.components.tolist()


class CanonicalKind(str, Enum):
    M1 = "M1"
    M2 = "M2"
    M3 = "M3"
    MPLUS = "mplus"
    MMINUS = "mminus"

    @property
    def parametrized(self) -> bool:
        return self in (CanonicalKind.MPLUS, CanonicalKind.MMINUS)


@dataclass(frozen=True)
class CanonicalModel:
    """정준 모델 지정 (𝒞₁, 𝒞₂, 𝒞₃, 𝒞±1,δ)"""
    kind: CanonicalKind
    delta: Optional[float] = None

    def __post_init__(self):
        if self.kind.parametrized:
            if self.delta is None:
                raise InputDomainError(f"{self.kind.value} 모델에는 δ 값이 필요합니다")
            delta = _as_finite("delta", self.delta)
            if delta < 0:
                raise InputDomainError(f"δ는 0 이상이어야 합니다: {delta}")
            object.__setattr__(self, "delta", delta)
        elif self.delta is not None:
            raise InputDomainError(f"{self.kind.value} 모델은 δ를 받지 않습니다")

    @property
    def label(self) -> str:
        if self.kind.parametrized:
            return f"{self.kind.value}:{self.delta:g}"
        return self.kind.value

    def symbols(self) -> ChristoffelSymbols:
        return canonical_model(self.kind, self.delta)


def canonical_model(
    kind: Union[CanonicalKind, str],
    delta: Optional[float] = None,
) -> ChristoffelSymbols:
    """
    정준 모델의 상수표를 반환합니다.

    :param kind: M1, M2, M3, mplus, mminus
    :param delta: 𝒞±1,δ 의 매개변수 (δ ≥ 0)
    :return: ChristoffelSymbols
    """
    kind = CanonicalKind(kind)
    if kind.parametrized:
        delta = CanonicalModel(kind, delta).delta
        sign = 1.0 if kind is CanonicalKind.MPLUS else -1.0
        return ChristoffelSymbols(c112=sign, c121=0.5, c122=delta / 2.0)
    if delta is not None:
        raise InputDomainError(f"{kind.value} 모델은 δ를 받지 않습니다")
    if kind is CanonicalKind.M1:
        return ChristoffelSymbols(c111=-1.0, c121=-0.5)
    if kind is CanonicalKind.M2:
        return ChristoffelSymbols(c121=-0.5)
    return ChristoffelSymbols(c111=-1.0, c221=-1.0)


def parse_canonical(text: str) -> CanonicalModel:
    """
    "M2", "mplus:1", "mminus:1.9" 형식의 문자열을 해석합니다.
    """
    name, _, param = text.strip().partition(":")
    lookup = {k.value.lower(): k for k in CanonicalKind}
    kind = lookup.get(name.lower())
    if kind is None:
        raise InputDomainError(f"알 수 없는 정준 모델: {text!r}")
    if kind.parametrized:
        if not param:
            raise InputDomainError(f"{kind.value} 모델은 'kind:δ' 형식이어야 합니다: {text!r}")
        return CanonicalModel(kind, _as_finite("delta", param))
    if param:
        raise InputDomainError(f"{kind.value} 모델은 δ를 받지 않습니다: {text!r}")
    return CanonicalModel(kind)
