"""
Christoffel 기호 값 타입 단위 테스트

ChristoffelSymbols, SymmetricBilinear, 정준 모델 생성/해석을 검증합니다.
"""

import math

import numpy as np
import pytest

from src.exceptions import InputDomainError
from src.geometry import (
    CHRISTOFFEL_KEYS,
    CanonicalKind,
    CanonicalModel,
    ChristoffelSymbols,
    RicciDerivative,
    SymmetricBilinear,
    canonical_model,
    parse_canonical,
)


class TestChristoffelSymbols:
    """ChristoffelSymbols 테스트"""

    def test_기본값은_평탄_모델(self):
        C = ChristoffelSymbols()

        assert C.is_zero()
        assert C.max_abs() == 0.0

    def test_gamma는_하첨자_대칭(self):
        C = ChristoffelSymbols(c121=0.7, c122=-1.3)

        g = C.gamma()

        assert g[0, 1, 0] == g[1, 0, 0] == 0.7
        assert g[0, 1, 1] == g[1, 0, 1] == -1.3

    def test_from_gamma_비대칭_입력은_평균(self):
        g = np.zeros((2, 2, 2))
        g[0, 1, 0] = 1.0
        g[1, 0, 0] = 3.0

        C = ChristoffelSymbols.from_gamma(g)

        assert C.c121 == pytest.approx(2.0)

    def test_from_gamma_형태_오류(self):
        with pytest.raises(InputDomainError):
            ChristoffelSymbols.from_gamma(np.zeros((2, 2)))

    def test_as_dict_키_순서(self):
        C = ChristoffelSymbols(1, 2, 3, 4, 5, 6)

        assert tuple(C.as_dict()) == CHRISTOFFEL_KEYS
        assert ChristoffelSymbols.from_dict(C.as_dict()) == C

    @pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf, "abc"])
    def test_유한하지_않은_값_거부(self, bad):
        with pytest.raises(InputDomainError):
            ChristoffelSymbols(c111=bad)

    def test_문자열_숫자는_실수로_변환(self):
        C = ChristoffelSymbols(c222="2.5")

        assert C.c222 == 2.5


class TestSymmetricBilinear:
    """SymmetricBilinear 테스트"""

    def test_행렬식(self):
        rho = SymmetricBilinear(2.0, 1.0, 3.0)

        assert rho.det == pytest.approx(5.0)

    def test_from_matrix_비대칭은_평균(self):
        rho = SymmetricBilinear.from_matrix(np.array([[1.0, 2.0], [0.0, 1.0]]))

        assert rho.m12 == pytest.approx(1.0)

    def test_evaluate(self):
        rho = SymmetricBilinear(1.0, 0.5, -2.0)

        assert rho.evaluate((1.0, 1.0), (1.0, 1.0)) == pytest.approx(0.0)
        assert rho.evaluate((1.0, 0.0), (0.0, 1.0)) == pytest.approx(0.5)

    def test_RicciDerivative_형태_검사(self):
        with pytest.raises(InputDomainError):
            RicciDerivative(np.zeros((2, 2)))


class TestCanonicalModels:
    """정준 모델 상수표 테스트"""

    def test_M1(self, c1):
        assert c1 == ChristoffelSymbols(c111=-1.0, c121=-0.5)

    def test_M2(self, c2):
        assert c2 == ChristoffelSymbols(c121=-0.5)

    def test_M3(self, c3):
        assert c3 == ChristoffelSymbols(c111=-1.0, c221=-1.0)

    @pytest.mark.parametrize("kind, sign", [(CanonicalKind.MPLUS, 1.0), (CanonicalKind.MMINUS, -1.0)])
    def test_매개변수_모델(self, kind, sign):
        C = canonical_model(kind, 1.8)

        assert C.c112 == sign
        assert C.c121 == 0.5
        assert C.c122 == pytest.approx(0.9)
        assert C.c111 == C.c221 == C.c222 == 0.0

    def test_δ_누락_시_오류(self):
        with pytest.raises(InputDomainError):
            canonical_model(CanonicalKind.MPLUS)

    def test_음수_δ_거부(self):
        with pytest.raises(InputDomainError):
            canonical_model("mminus", -0.1)

    def test_비매개변수_모델에_δ_전달_시_오류(self):
        with pytest.raises(InputDomainError):
            canonical_model(CanonicalKind.M2, 1.0)

    def test_label(self):
        assert CanonicalModel(CanonicalKind.MMINUS, 1.5).label == "mminus:1.5"
        assert CanonicalModel(CanonicalKind.M3).label == "M3"


class TestParseCanonical:
    """정준 모델 문자열 해석 테스트"""

    @pytest.mark.parametrize("text, kind, delta", [
        ("M1", CanonicalKind.M1, None),
        ("m2", CanonicalKind.M2, None),
        ("mplus:1", CanonicalKind.MPLUS, 1.0),
        ("MMINUS:1.9", CanonicalKind.MMINUS, 1.9),
        ("  mminus:0 ", CanonicalKind.MMINUS, 0.0),
    ])
    def test_정상_해석(self, text, kind, delta):
        model = parse_canonical(text)

        assert model.kind is kind
        assert model.delta == delta

    @pytest.mark.parametrize("text", ["M4", "mplus", "M2:1", "mminus:x", "mminus:-1", ""])
    def test_잘못된_문자열(self, text):
        with pytest.raises(InputDomainError):
            parse_canonical(text)

    def test_symbols_위임(self):
        assert parse_canonical("mplus:2").symbols() == canonical_model(CanonicalKind.MPLUS, 2.0)
