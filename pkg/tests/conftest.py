"""
pytest 공통 설정 및 Fixtures

정준 모델, 모델 JSON 파일 등 테스트 전반에서 사용되는 fixture를 정의합니다.
"""

import json
import sys
from pathlib import Path
from typing import Callable, Dict

import numpy as np
import pytest

# 프로젝트 루트를 Python 경로에 추가
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.geometry import CanonicalKind, ChristoffelSymbols, canonical_model  # noqa: E402


# =============================================================================
# 정준 모델 Fixtures
# =============================================================================

@pytest.fixture
def c1() -> ChristoffelSymbols:
    """𝒞₁: C₁₁¹ = −1, C₁₂¹ = −½"""
    return canonical_model(CanonicalKind.M1)


@pytest.fixture
def c2() -> ChristoffelSymbols:
    """𝒞₂: C₁₂¹ = −½ (완비 대칭 모델)"""
    return canonical_model(CanonicalKind.M2)


@pytest.fixture
def c3() -> ChristoffelSymbols:
    """𝒞₃: C₁₁¹ = −1, C₂₂¹ = −1"""
    return canonical_model(CanonicalKind.M3)


@pytest.fixture
def mplus() -> Callable[[float], ChristoffelSymbols]:
    """𝒞₊₁,δ 생성기"""
    return lambda delta: canonical_model(CanonicalKind.MPLUS, delta)


@pytest.fixture
def mminus() -> Callable[[float], ChristoffelSymbols]:
    """𝒞₋₁,δ 생성기"""
    return lambda delta: canonical_model(CanonicalKind.MMINUS, delta)


@pytest.fixture
def rank1_nonsymmetric() -> ChristoffelSymbols:
    """∇ρ ≠ 0 인 계수 1 모델 (C₁₂¹ = 1, C₂₂² = 3)"""
    return ChristoffelSymbols(c121=1.0, c222=3.0)


@pytest.fixture
def generic_matrix():
    """가역 선형사상 예시"""
    return np.array([[2.0, 1.0], [0.5, 1.5]])


# =============================================================================
# 모델 문서 Fixtures
# =============================================================================

@pytest.fixture
def model_payload() -> Callable[[ChristoffelSymbols], Dict]:
    """ChristoffelSymbols → JSON 객체"""
    return lambda C, name=None: {
        "christoffel": C.as_dict(),
        **({"name": name} if name else {}),
    }


@pytest.fixture
def model_file(tmp_path, model_payload) -> Callable[..., Path]:
    """모델 JSON 파일을 임시 디렉토리에 작성"""

    def write(C: ChristoffelSymbols, name: str = None, filename: str = "model.json") -> Path:
        path = tmp_path / filename
        path.write_text(json.dumps(model_payload(C, name)), encoding="utf-8")
        return path

    return write
