"""
예외 계층과 설정 단위 테스트
"""

import pytest

from src import __version__
from src.exceptions import (
    AffineSurfaceError,
    ConfigurationError,
    InputDomainError,
    SingularMapError,
    ModelDocumentError,
    DegenerateRicciError,
    MisuseError,
    NumericFailureError,
    InternalInconsistencyError,
)
from src.config import Config, IntegratorConfig, ToleranceConfig


class TestExceptionHierarchy:
    def test_SingularMapError_is_InputDomainError(self):
        assert issubclass(SingularMapError, InputDomainError)

    def test_ModelDocumentError_is_InputDomainError(self):
        assert issubclass(ModelDocumentError, InputDomainError)

    def test_InternalInconsistencyError_is_NumericFailureError(self):
        assert issubclass(InternalInconsistencyError, NumericFailureError)

    @pytest.mark.parametrize("error", [
        ConfigurationError,
        InputDomainError,
        DegenerateRicciError,
        MisuseError,
        NumericFailureError,
    ])
    def test_모든_예외는_AffineSurfaceError(self, error):
        assert issubclass(error, AffineSurfaceError)

    def test_DegenerateRicciError는_입력오류가_아님(self):
        assert not issubclass(DegenerateRicciError, InputDomainError)


class TestConfigValidation:
    def test_기본_설정은_유효(self):
        assert Config().validate() is True

    def test_음수_허용오차_시_ConfigurationError(self):
        config = Config()
        config.tolerance = ToleranceConfig(rank_tol=-1.0)

        with pytest.raises(ConfigurationError):
            config.validate()

    def test_is_ready_실패_사유_반환(self):
        config = Config()
        config.integrator = IntegratorConfig(rtol=0.0)

        ready, reason = config.is_ready()

        assert ready is False
        assert "rtol" in reason

    def test_get_status_주요값(self):
        status = Config().get_status()

        assert status["rtol"] == pytest.approx(1e-10)
        assert status["sweep_seed"] == 7

    def test_그림_크기는_800픽셀(self):
        figure = Config().figure

        assert figure.figsize[0] * figure.dpi == pytest.approx(800)


class TestErrorMessages:
    def test_에러_메시지_포함(self):
        error = ModelDocumentError("christoffel 키 누락: ['221']")

        assert "221" in str(error)

    def test_원인_체인_유지(self):
        original = ValueError("원본 에러")
        error = NumericFailureError("재시도 한도 초과")
        error.__cause__ = original

        assert error.__cause__ is original


def test_버전_문자열():
    assert __version__ == "0.1.0"
