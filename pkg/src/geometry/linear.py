"""
GL(2,ℝ) 작용 모듈

선형 좌표변환 w = T·x 에 의한 Christoffel 기호의 변환(pushforward)과
일반 위치 보조정리의 전단 변환 T_ε, S_ε 을 이용한 일반 위치 정규화를 제공합니다.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..config import config
from ..exceptions import (
    DegenerateRicciError,
    InputDomainError,
    NumericFailureError,
    SingularMapError,
)
from .christoffel import ChristoffelSymbols, _as_finite
from .curvature import ricci, rank_signature

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearMap:
    """2×2 선형사상 T (w = T·x)"""
    t11: float
    t12: float
    t21: float
    t22: float

    def __post_init__(self):
        for name in ("t11", "t12", "t21", "t22"):
            object.__setattr__(self, name, _as_finite(name, getattr(self, name)))

    @classmethod
    def identity(cls) -> "LinearMap":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def from_matrix(cls, m) -> "LinearMap":
        m = np.asarray(m, dtype=float)
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @classmethod
    def shear_t(cls, eps: float) -> "LinearMap":
        """T_ε: (x¹, x²) ↦ (x¹ + εx², x²)"""
        return cls(1.0, eps, 0.0, 1.0)

    @classmethod
    def shear_s(cls, eps: float) -> "LinearMap":
        """S_ε: (x¹, x²) ↦ (x¹, εx¹ + x²)"""
        return cls(1.0, 0.0, eps, 1.0)

    def matrix(self) -> np.ndarray:
        return np.array([[self.t11, self.t12], [self.t21, self.t22]])

    @property
    def det(self) -> float:
        return self.t11 * self.t22 - self.t12 * self.t21

    def is_invertible(self, tol: Optional[float] = None) -> bool:
        tol = config.tolerance.invertibility_tol if tol is None else tol
        return abs(self.det) > tol

    def inverse(self, tol: Optional[float] = None) -> "LinearMap":
        if not self.is_invertible(tol):
            raise SingularMapError(f"선형사상이 가역이 아닙니다 (det={self.det:.3e})")
        det = self.det
        return LinearMap(self.t22 / det, -self.t12 / det, -self.t21 / det, self.t11 / det)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self ∘ inner"""
        return LinearMap.from_matrix(self.matrix() @ inner.matrix())

    def apply(self, vector) -> np.ndarray:
        return self.matrix() @ np.asarray(vector, dtype=float)

    def to_list(self):
        return [[self.t11, self.t12], [self.t21, self.t22]]


def pushforward(
    C: ChristoffelSymbols,
    T: LinearMap,
    tol: Optional[float] = None,
) -> ChristoffelSymbols:
    """
    좌표 w = T·x 에서의 Christoffel 기호를 계산합니다.

    하첨자 두 개는 공변, 상첨자 하나는 반변으로 변환됩니다:
    C′_ab^c = T^c_k (T⁻¹)^i_a (T⁻¹)^j_b C_ij^k

    :param C: 원래 좌표의 Christoffel 기호
    :param T: 가역 선형사상
    :param tol: 가역성 판정 허용오차
    :return: 변환된 Christoffel 기호
    """
    forward = T.matrix()
    backward = T.inverse(tol).matrix()
    g = np.einsum("ck,ia,jb,ijk->abc", forward, backward, backward, C.gamma())
    return ChristoffelSymbols.from_gamma(g)


def _epsilon_candidates(seed: int) -> Iterator[float]:
    base: List[float] = []
    for n in range(1, 9):
        base.append(float(Fraction(1, n)))
        base.append(float(Fraction(-1, n)))
    offset = seed % len(base)
    rotated = base[offset:] + base[:offset]
    while True:
        yield from rotated


def _is_generic(C: ChristoffelSymbols, ratio: float) -> bool:
    scale = C.max_abs()
    return scale > 0 and min(abs(v) for v in C.entries()) > ratio * scale


def normalize_generic(
    C: ChristoffelSymbols,
    seed: int = 0,
    tol: Optional[float] = None,
    ratio: Optional[float] = None,
    max_retries: Optional[int] = None,
) -> Tuple[ChristoffelSymbols, LinearMap]:
    """
    모든 성분이 0에서 떨어지도록 전단 변환을 적용합니다.

    먼저 T_ε 로 C₂₂¹ ≠ 0 을 만들고, 이어서 S_ε 로 나머지 성분을 0에서 떼어냅니다.
    (S_ε 는 C₂₂¹ 을 보존합니다.) ε 는 seed로 결정되는 {±1, ±½, ±⅓, …} 수열에서 뽑습니다.

    :param C: 계수 2 모델
    :param seed: ε 수열 시작 위치
    :param ratio: 일반성 임계값 (min|성분| > ratio·‖C′‖∞)
    :param max_retries: 시도 횟수 상한
    :return: (C′, T) with C′ = T*C
    """
    tol = config.tolerance.rank_tol if tol is None else tol
    ratio = config.tolerance.genericity_ratio if ratio is None else ratio
    max_retries = config.normalize.max_retries if max_retries is None else max_retries
    if max_retries < 1:
        raise InputDomainError(f"max_retries는 1 이상이어야 합니다: {max_retries}")

    rank, _ = rank_signature(ricci(C), tol)
    if rank < 2:
        raise DegenerateRicciError(f"일반 위치 정규화에는 계수 2 Ricci 텐서가 필요합니다 (rank={rank})")

    if _is_generic(C, ratio):
        return C, LinearMap.identity()

    outer = _epsilon_candidates(seed)
    attempts = 0
    while attempts < max_retries:
        eps_t = next(outer)
        shear_t = LinearMap.shear_t(eps_t)
        first = pushforward(C, shear_t)
        if abs(first.c221) <= ratio * first.max_abs():
            attempts += 1
            continue
        inner = _epsilon_candidates(seed + 1)
        for _ in range(4):
            attempts += 1
            eps_s = next(inner)
            T = LinearMap.shear_s(eps_s).compose(shear_t)
            candidate = pushforward(C, T)
            if _is_generic(candidate, ratio):
                logger.debug("일반 위치 도달: ε_T=%g, ε_S=%g (%d회 시도)", eps_t, eps_s, attempts)
                return candidate, T
            if attempts >= max_retries:
                break

    raise NumericFailureError(f"{max_retries}회 시도 후에도 일반 위치에 도달하지 못했습니다")
