"""
E-다항식과 실근 계산 모듈

로그 측지선 가설 σ(t) = (a, b)·log t 를 지배하는 이차식 E₁, E₂ 와
삼차식 E₃(λ) = λE₁(1,λ) − E₂(1,λ) 을 다룹니다.
삼차 이하 다항식의 실근은 판별식 분기 닫힌 형식으로 구한 뒤 Newton 보정하고,
검증에 실패하면 동반 행렬 고유값으로 다시 구합니다.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize

from ..config import config
from ..exceptions import InputDomainError
from ..geometry import ChristoffelSymbols

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EPolynomials:
    """E₁(1,λ), E₂(1,λ), E₃(λ) 계수 (차수 오름차순)"""
    e1: Tuple[float, float, float]
    e2: Tuple[float, float, float]
    e3: Tuple[float, float, float, float]

    @staticmethod
    def _horner(coeffs: Sequence[float], lam: float) -> float:
        value = 0.0
        for c in reversed(coeffs):
            value = value * lam + c
        return value

    def e1_at(self, lam: float) -> float:
        return self._horner(self.e1, lam)

    def e2_at(self, lam: float) -> float:
        return self._horner(self.e2, lam)

    def e3_at(self, lam: float) -> float:
        return self._horner(self.e3, lam)

    def coefficient_norm(self) -> float:
        return float(max(np.max(np.abs(self.e1)), np.max(np.abs(self.e2)), np.max(np.abs(self.e3))))


def e_polynomials(C: ChristoffelSymbols) -> EPolynomials:
    return EPolynomials(
        e1=(C.c111, 2.0 * C.c121, C.c221),
        e2=(C.c112, 2.0 * C.c122, C.c222),
        e3=(-C.c112, C.c111 - 2.0 * C.c122, 2.0 * C.c121 - C.c222, C.c221),
    )


def e_evaluate(C: ChristoffelSymbols, a: float, b: float) -> Tuple[float, float]:
    """E_i(a,b) = a²C₁₁ⁱ + 2abC₁₂ⁱ + b²C₂₂ⁱ"""
    e1 = a * a * C.c111 + 2.0 * a * b * C.c121 + b * b * C.c221
    e2 = a * a * C.c112 + 2.0 * a * b * C.c122 + b * b * C.c222
    return e1, e2


def equation_residual(C: ChristoffelSymbols, a: float, b: float) -> float:
    """a = E₁(a,b), b = E₂(a,b) 두 식의 최대 잔차"""
    e1, e2 = e_evaluate(C, a, b)
    return max(abs(a - e1), abs(b - e2))


def resultant(p: Sequence[float], q: Sequence[float]) -> float:
    """
    두 이차 다항식(차수 오름차순 계수)의 Sylvester 행렬식.

    값이 0이 아니면 공통 (복소)근이 없습니다.
    """
    p0, p1, p2 = (list(p) + [0.0] * 3)[:3]
    q0, q1, q2 = (list(q) + [0.0] * 3)[:3]
    sylvester = np.array([
        [p2, p1, p0, 0.0],
        [0.0, p2, p1, p0],
        [q2, q1, q0, 0.0],
        [0.0, q2, q1, q0],
    ])
    return float(np.linalg.det(sylvester))


@dataclass(frozen=True)
class RealRoot:
    value: float
    multiplicity: int = 1


@dataclass(frozen=True)
class RootSet:
    """
    실근 목록. 항등적으로 0인 다항식은 근 목록 대신 identically_zero 로 표시합니다.
    """
    roots: Tuple[RealRoot, ...] = ()
    identically_zero: bool = False

    def __iter__(self) -> Iterator[RealRoot]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def values(self) -> List[float]:
        return [r.value for r in self.roots]


def effective_degree(coeffs: Sequence[float], zero_tol: float) -> int:
    scale = max((abs(c) for c in coeffs), default=0.0)
    if scale == 0.0:
        return -1
    for degree in range(len(coeffs) - 1, -1, -1):
        if abs(coeffs[degree]) > zero_tol * scale:
            return degree
    return -1


def _quadratic(c0: float, c1: float, c2: float) -> List[RealRoot]:
    disc = c1 * c1 - 4.0 * c2 * c0
    if abs(disc) <= 1e-12 * (c1 * c1 + 4.0 * abs(c2 * c0)):
        return [RealRoot(-c1 / (2.0 * c2), 2)]
    if disc < 0:
        return []
    q = -0.5 * (c1 + math.copysign(math.sqrt(disc), c1))
    if q == 0.0:
        return [RealRoot(0.0, 2)]
    return [RealRoot(q / c2), RealRoot(c0 / q)]


def _cubic(c0: float, c1: float, c2: float, c3: float) -> List[RealRoot]:
    a2, a1, a0 = c2 / c3, c1 / c3, c0 / c3
    shift = -a2 / 3.0
    p = a1 - a2 * a2 / 3.0
    q = 2.0 * a2 ** 3 / 27.0 - a2 * a1 / 3.0 + a0
    half_q = q / 2.0
    third_p = p / 3.0
    disc = half_q * half_q + third_p ** 3
    scale = half_q * half_q + abs(third_p) ** 3

    if scale == 0.0 or abs(disc) <= 1e-12 * scale:
        if abs(p) <= 1e-12 * (1.0 + a2 * a2):
            return [RealRoot(shift, 3)]
        return [RealRoot(3.0 * q / p + shift), RealRoot(-1.5 * q / p + shift, 2)]

    if disc > 0:
        u = np.cbrt(-half_q - math.copysign(math.sqrt(disc), half_q))
        t = u - p / (3.0 * u) if u != 0.0 else 0.0
        return [RealRoot(float(t) + shift)]

    radius = 2.0 * math.sqrt(-third_p)
    argument = np.clip(3.0 * q / (2.0 * p) * math.sqrt(-3.0 / p), -1.0, 1.0)
    phi = math.acos(float(argument)) / 3.0
    return [
        RealRoot(radius * math.cos(phi - 2.0 * math.pi * k / 3.0) + shift)
        for k in range(3)
    ]


def _polish(coeffs: Sequence[float], root: RealRoot, tol: float) -> RealRoot:
    poly = np.polynomial.Polynomial(coeffs)
    before = abs(poly(root.value))
    if before <= tol * 1e-3:
        return root
    # 중복도 m 인 근은 (m−1)차 도함수의 단순근
    target = poly.deriv(root.multiplicity - 1) if root.multiplicity > 1 else poly
    slope = target.deriv()
    if abs(slope(root.value)) <= 1e-12 * max(1.0, np.max(np.abs(target.coef))):
        return root
    try:
        sol = optimize.root_scalar(
            target, x0=root.value, fprime=slope, method="newton", maxiter=8, xtol=1e-15
        )
    except (RuntimeError, ZeroDivisionError, FloatingPointError):
        return root
    if np.isfinite(sol.root) and abs(poly(sol.root)) <= before:
        return RealRoot(float(sol.root), root.multiplicity)
    return root


def root_residual(coeffs: Sequence[float], value: float) -> float:
    """|p(λ)| / Σ|c_k||λ|^k. 계산된 근이면 반올림 오차 수준입니다."""
    magnitude = sum(abs(c) * abs(value) ** k for k, c in enumerate(coeffs))
    if magnitude == 0.0:
        return 0.0
    return abs(np.polynomial.polynomial.polyval(value, coeffs)) / magnitude


def _deflate(coeffs: Sequence[float], root: float) -> List[float]:
    """p(λ) = (λ − r)·q(λ) 의 몫 q. 절댓값이 큰 근은 상수항부터 나눕니다."""
    degree = len(coeffs) - 1
    if root == 0.0:
        return list(coeffs[1:])
    quotient = [0.0] * degree
    quotient[0] = -coeffs[0] / root
    for k in range(1, degree):
        quotient[k] = (quotient[k - 1] - coeffs[k]) / root
    return quotient


def _consistent(coeffs: Sequence[float], roots: List[RealRoot], check_tol: float) -> bool:
    if any(root_residual(coeffs, r.value) > check_tol for r in roots):
        return False
    if len(coeffs) != 4 or sum(r.multiplicity for r in roots) == 3:
        return True
    # 실근 하나만 나온 삼차식: 주근으로 나눈 몫에 놓친 실근이 없어야 함
    dominant = max(roots, key=lambda r: abs(r.value))
    quotient = _deflate(coeffs, dominant.value)
    if quotient[-1] == 0.0:
        return False
    return not _quadratic(*quotient)


def _companion_roots(coeffs: Sequence[float], imag_tol: float) -> List[RealRoot]:
    """동반 행렬 고유값 중 실근. 중근이 쪼개진 작은 허수부는 실수로 봅니다."""
    found = np.roots(list(reversed(coeffs)))
    return [
        RealRoot(float(z.real))
        for z in found
        if abs(z.imag) <= imag_tol * (1.0 + abs(z))
    ]


def _merge(roots: List[RealRoot], merge_tol: float) -> List[RealRoot]:
    merged: List[RealRoot] = []
    for root in sorted(roots, key=lambda r: r.value):
        if merged and abs(root.value - merged[-1].value) <= merge_tol * (1.0 + abs(root.value)):
            last = merged.pop()
            value = last.value if last.multiplicity >= root.multiplicity else root.value
            merged.append(RealRoot(value, last.multiplicity + root.multiplicity))
        else:
            merged.append(root)
    return merged


def real_roots(
    coeffs: Sequence[float],
    tol: Optional[float] = None,
    zero_tol: Optional[float] = None,
) -> RootSet:
    """
    차수 3 이하 다항식의 실근을 구합니다.

    닫힌 형식 근이 잔차 검사나 몫 검사를 통과하지 못하면
    동반 행렬 고유값(numpy.roots)으로 다시 구합니다.

    :param coeffs: 차수 오름차순 계수 (길이 ≤ 4)
    :param tol: Newton 보정 잔차 목표
    :param zero_tol: 유효 차수 판정 상대 임계값
    :return: RootSet (중근은 한 번만, 중복도와 함께)
    """
    tol = config.tolerance.residual_tol if tol is None else tol
    zero_tol = config.tolerance.rank_tol if zero_tol is None else zero_tol
    check_tol = config.tolerance.root_check_tol
    coeffs = [float(c) for c in coeffs]
    if len(coeffs) > 4:
        raise InputDomainError(f"차수 3 이하 다항식만 지원합니다: {len(coeffs)}개 계수")
    if not all(math.isfinite(c) for c in coeffs):
        raise InputDomainError(f"계수가 유한하지 않습니다: {coeffs}")

    degree = effective_degree(coeffs, zero_tol)
    if degree < 0:
        return RootSet(identically_zero=True)
    if degree == 0:
        return RootSet()

    head = coeffs[: degree + 1]
    if degree == 1:
        candidates = [RealRoot(-head[0] / head[1])]
    elif degree == 2:
        candidates = _quadratic(*head)
    else:
        candidates = _cubic(*head)

    polished = [_polish(head, root, tol) for root in candidates]
    if degree > 1 and not _consistent(head, polished, check_tol):
        logger.debug("닫힌 형식 근 검증 실패, 동반 행렬로 재계산: %s", polished)
        imag_tol = 10.0 * config.tolerance.root_merge_tol
        polished = [_polish(head, root, tol) for root in _companion_roots(head, imag_tol)]
    merged = _merge(polished, config.tolerance.root_merge_tol)
    if len(merged) < len(polished):
        logger.debug("근접 근 병합: %s → %s", polished, merged)
    return RootSet(tuple(merged))
