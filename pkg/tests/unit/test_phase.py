"""
속도 위상 흐름 단위 테스트

벡터장 평가, 격자 표본, 흐름 곡선 적분과 축/사분면 구조를 검증합니다.
"""

import itertools

import numpy as np
import pytest

from src.dynamics import ConstantModel, GeodesicState, IntegrationOptions, Termination, integrate
from src.exceptions import InputDomainError
from src.geometry import ChristoffelSymbols
from src.phase import (
    FlowCurve,
    PhaseField,
    field_grid,
    fixed_point_mask,
    flow_integrate,
    phase_field_eval,
    quadrant_trapped,
)


class TestPhaseField:
    """phase_field_eval 테스트"""

    def test_Mminus_δ1(self, mminus):
        assert phase_field_eval(mminus(1.0), 1.0, 1.0) == pytest.approx([1.0, 0.0])

    def test_Mminus_δ0(self, mminus):
        assert phase_field_eval(mminus(0.0), 2.0, 1.0) == pytest.approx([2.0, -4.0])

    def test_원점은_0(self):
        C = ChristoffelSymbols(0.3, -1.1, 0.7, 0.2, -0.4, 1.5)

        assert phase_field_eval(C, 0.0, 0.0) == pytest.approx([0.0, 0.0])

    @pytest.mark.parametrize("delta", [0.0, 0.7, 1.9])
    def test_Mminus_닫힌_형식(self, mminus, delta):
        """(uv, u(−u + δv))"""
        field = PhaseField(mminus(delta))
        u, v = np.meshgrid(np.linspace(-2, 2, 7), np.linspace(-2, 2, 7))

        du, dv = field(u, v)

        assert du == pytest.approx(u * v)
        assert dv == pytest.approx(u * (-u + delta * v))

    def test_수평축에서_v_감소(self, mminus):
        for u in (-2.0, -0.5, 0.5, 2.0):
            du, dv = phase_field_eval(mminus(1.3), u, 0.0)
            assert du == pytest.approx(0.0)
            assert dv == pytest.approx(-u * u)


class TestFieldGrid:
    """field_grid 테스트"""

    def test_3x3_격자(self, mminus):
        grid = field_grid(mminus(1.0), (-2.0, 2.0, -2.0, 2.0), 3)

        assert grid.shape == (9, 4)
        assert grid[4] == pytest.approx([0.0, 0.0, 0.0, 0.0])

    def test_u가_바깥_순서(self, mminus):
        grid = field_grid(mminus(1.0), (-1.0, 1.0, -2.0, 2.0), 3)

        assert grid[:3, 0] == pytest.approx([-1.0, -1.0, -1.0])
        assert grid[:3, 1] == pytest.approx([-2.0, 0.0, 2.0])

    def test_2x2는_네_모서리(self, c3):
        grid = field_grid(c3, (0.0, 1.0, 0.0, 1.0), 2)

        corners = {(u, v) for u, v in grid[:, :2]}
        assert corners == {(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)}

    def test_441_행(self, mminus):
        assert len(field_grid(mminus(1.0), (-2.0, 2.0, -2.0, 2.0), 21)) == 441

    @pytest.mark.parametrize("window, n", [
        ((1.0, 1.0, 1.0, 1.0), 5),
        ((2.0, -2.0, -1.0, 1.0), 5),
        ((-1.0, 1.0, -1.0, np.inf), 5),
        ((-1.0, 1.0, -1.0, 1.0), 1),
    ])
    def test_잘못된_창이나_크기(self, mminus, window, n):
        with pytest.raises(InputDomainError):
            field_grid(mminus(0.0), window, n)

    def test_고정점은_세로축(self, mminus):
        grid = field_grid(mminus(1.0), (-2.0, 2.0, -2.0, 2.0), 5)

        fixed = grid[fixed_point_mask(grid)]

        assert len(fixed) == 5
        assert np.all(fixed[:, 0] == 0.0)


class TestFlowIntegrate:
    """flow_integrate 테스트"""

    def test_고정점에서_상수_곡선(self, mminus):
        curve = flow_integrate(mminus(1.0), (0.0, 3.0), (0.0, 10.0))

        assert curve.termination is Termination.HORIZON_REACHED
        assert len(curve) == 2
        assert np.all(curve.points() == [0.0, 3.0])

    def test_제4사분면에_갇힘(self, mminus):
        # given / when
        curve = flow_integrate(mminus(1.0), (1.0, 1.0), (0.0, 50.0))

        # then
        assert curve.termination is Termination.HORIZON_REACHED
        assert np.any((curve.u > 0) & (curve.v < 0))
        assert quadrant_trapped(curve)

    @pytest.mark.parametrize("delta", [0.0, 1.0, 1.9])
    @pytest.mark.parametrize("start", [(0.5, 1.5), (1.5, -0.5), (0.2, -2.0)])
    def test_세로축을_넘지_않음(self, mminus, delta, start):
        curve = flow_integrate(mminus(delta), start, (0.0, 20.0))

        assert np.all(curve.u > 0)

    def test_Mplus는_유한시간_폭주(self, mplus):
        curve = flow_integrate(mplus(0.0), (1.0, 1.0), (0.0, 10.0))

        assert curve.termination is Termination.BLOW_UP
        assert curve.escape_time is not None
        assert curve.escape_time < 10.0

    def test_측지선_속도와_일치(self, mminus):
        # given: (u, v) = −ẋ
        C = mminus(1.2)
        times = tuple(np.linspace(0.1, 2.0, 20))
        opts = IntegrationOptions(t_eval=times)
        v0 = np.array([-0.4, 0.9])

        # when
        curve = flow_integrate(C, -v0, (0.0, 2.0), opts)
        trajectory = integrate(ConstantModel(C), GeodesicState((0.0, 0.0), v0), (0.0, 2.0), opts)

        # then
        assert curve.t == pytest.approx(trajectory.t)
        assert curve.points() == pytest.approx(-trajectory.v, abs=1e-8)

    def test_역방향_흐름(self, mminus):
        curve = flow_integrate(mminus(1.0), (1.0, 1.0), (0.0, -3.0))

        assert np.all(np.diff(curve.t) < 0)

    @pytest.mark.parametrize("p0", [(1.0,), (np.nan, 1.0), (1.0, 2.0, 3.0)])
    def test_잘못된_시작점(self, mminus, p0):
        with pytest.raises(InputDomainError):
            flow_integrate(mminus(1.0), p0, (0.0, 1.0))

    def test_고정점_퇴화_구간(self, mminus):
        with pytest.raises(InputDomainError):
            flow_integrate(mminus(1.0), (0.0, 1.0), (2.0, 2.0))


class TestQuadrantTrapped:
    """quadrant_trapped 판정 테스트"""

    def test_재진입하면_거짓(self):
        curve = FlowCurve(
            t=np.arange(4.0),
            u=np.array([1.0, 1.0, 1.0, 1.0]),
            v=np.array([1.0, -1.0, -0.5, 0.5]),
            termination=Termination.HORIZON_REACHED,
        )

        assert quadrant_trapped(curve) is False

    @pytest.mark.parametrize("delta", [0.0, 0.5, 1.0, 1.5])
    def test_여러_시작점(self, mminus, delta):
        starts = itertools.product((0.5, 1.5), (-1.0, 0.5, 2.0))

        for start in starts:
            curve = flow_integrate(mminus(delta), start, (0.0, 30.0))
            assert quadrant_trapped(curve), start
