"""
판정 vs 수치 오라클 스윕 통합 테스트
"""

import itertools
import math

import numpy as np
import pytest

from src.completeness import Branch, classify
from src.dynamics import (
    ConstantModel,
    GeodesicState,
    IntegrationOptions,
    TildeM3Model,
    closed_form_m2,
    closed_form_m3tilde,
    integrate,
)
from src.exceptions import InputDomainError
from src.geometry import ChristoffelSymbols, parse_canonical, rank_signature, ricci
from src.toolkit import numerical_oracle, random_models, run_sweep, transverse_rate


class TestRandomModels:
    """무작위 계수 2 모델 생성"""

    def test_모두_계수2(self):
        models = list(itertools.islice(random_models(7, 2.0, 1e-8), 20))

        assert all(rank_signature(ricci(C))[0] == 2 for C in models)

    def test_시드_재현성(self):
        first = list(itertools.islice(random_models(3, 2.0, 1e-8), 5))
        second = list(itertools.islice(random_models(3, 2.0, 1e-8), 5))

        assert first == second


class TestNumericalOracle:
    """numerical_oracle 테스트"""

    def test_증인_모델은_탈출시간_음의1(self, mplus):
        C = mplus(1.0)

        result = numerical_oracle(C, classify(C))

        assert result.complete is False
        assert result.escape_time == pytest.approx(-1.0, abs=1e-2)

    @pytest.mark.parametrize("a", [(3 - math.sqrt(5)) / 2, (3 + math.sqrt(5)) / 2])
    def test_횡방향_지수(self, mminus, a):
        """𝒞₋₁,δ 의 증인 (a, 1) 에서 μ = aδ − 2"""
        assert transverse_rate(mminus(3.0), a, 1.0) == pytest.approx(3.0 * a - 2.0)

    def test_안정한_증인부터_시도(self, mminus):
        # given: δ = 3 의 두 증인 중 a ≈ 0.382 쪽만 횡방향으로 안정
        C = mminus(3.0)

        # when
        result = numerical_oracle(C, classify(C))

        # then
        assert result.complete is False
        assert result.trajectories == 1
        assert result.escape_time == pytest.approx(-1.0, abs=1e-2)

    def test_무작위_불완비_모델의_증인_확인(self):
        # given: 시드 7 의 앞쪽 모델 중 로그 측지선이 있는 것
        models = itertools.islice(random_models(7, 2.0, 1e-8), 12)
        incomplete = [(C, v) for C, v in ((C, classify(C)) for C in models) if v.witnesses]
        assert incomplete

        for C, verdict in incomplete:
            # when
            result = numerical_oracle(C, verdict)

            # then
            assert result.complete is False, result.detail
            assert result.escape_time == pytest.approx(-1.0, abs=1e-2)

    def test_완비_모델은_폭주_없음(self, mminus):
        C = mminus(1.0)

        result = numerical_oracle(C, classify(C), samples=3, rng=np.random.default_rng(0))

        assert result.complete is True
        assert result.trajectories == 3

    def test_계수1_비대칭_모델(self, rank1_nonsymmetric):
        result = numerical_oracle(rank1_nonsymmetric, classify(rank1_nonsymmetric))

        assert result.complete is False

    def test_평탄_모델은_판단_불가(self):
        C = ChristoffelSymbols()
        verdict = classify(C)

        assert verdict.branch is Branch.FLAT_UNDETERMINED
        assert numerical_oracle(C, verdict).complete is None


class TestRunSweep:
    """run_sweep 테스트 (소규모)"""

    @pytest.fixture
    def small_report(self):
        inject = [parse_canonical("mplus:1"), parse_canonical("mminus:1")]
        return run_sweep(count=3, seed=7, horizon=10.0, samples=2, inject=inject, show_progress=False)

    def test_주입_모델이_앞자리(self, small_report):
        sources = [r.source for r in small_report.records]

        assert sources == ["mplus:1", "mminus:1", "random"]

    def test_주입_모델은_일치(self, small_report):
        assert small_report.records[0].agree is True
        assert small_report.records[1].agree is True
        assert small_report.records[0].oracle.escape_time == pytest.approx(-1.0, abs=1e-2)

    def test_보고서_딕셔너리(self, small_report):
        data = small_report.to_dict()

        assert data["count"] == 3
        assert data["seed"] == 7
        assert len(data["records"]) == 3
        assert data["records"][0]["branch"] == "rank2_incomplete"

    def test_재현성(self, small_report):
        inject = [parse_canonical("mplus:1"), parse_canonical("mminus:1")]
        again = run_sweep(count=3, seed=7, horizon=10.0, samples=2, inject=inject, show_progress=False)

        assert again.to_dict() == small_report.to_dict()

    def test_count보다_많은_주입은_잘림(self):
        inject = [parse_canonical("mplus:1"), parse_canonical("mplus:2")]

        report = run_sweep(count=1, inject=inject, samples=1, horizon=1.0, show_progress=False)

        assert [r.source for r in report.records] == ["mplus:1"]

    @pytest.mark.parametrize("kwargs", [{"count": 0}, {"horizon": -1.0}, {"samples": 0}])
    def test_잘못된_인자(self, kwargs):
        with pytest.raises(InputDomainError):
            run_sweep(show_progress=False, **kwargs)


@pytest.mark.slow
class TestAcceptanceScale:
    """수용 기준 규모의 교차 검증"""

    def test_200개_모델_전부_일치(self):
        report = run_sweep(show_progress=False)

        assert len(report.records) == 200
        assert report.disagreements == []
        assert report.skipped == 0

    @pytest.mark.parametrize("kind, closed_form", [
        (ConstantModel(parse_canonical("M2").symbols()), closed_form_m2),
        (TildeM3Model(), closed_form_m3tilde),
    ])
    def test_닫힌_해와_100개_궤적_비교(self, kind, closed_form):
        rng = np.random.default_rng(11)
        opts = IntegrationOptions(blow_up_norm=1e20, t_eval=(2.5, 5.0, 7.5, 10.0))
        bases = rng.uniform(-1.0, 1.0, (100, 2))
        tangents = rng.uniform(-3.0, 3.0, (100, 2))

        for (a, b), (c, d) in zip(bases, tangents):
            trajectory = integrate(kind, GeodesicState((a, b), (c, d)), (0.0, 10.0), opts)

            for t, x in zip(trajectory.t, trajectory.x):
                assert x == pytest.approx(closed_form(a, b, c, d, t), rel=1e-6, abs=1e-6)
