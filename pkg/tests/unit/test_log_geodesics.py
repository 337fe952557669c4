"""
로그 측지선 해 탐색 단위 테스트

log_geodesic_solutions 의 분기 (a ≠ 0, a = 0, E₃ ≡ 0) 와
정준 모델 근의 공식(canonical_witnesses)과의 교차 검증을 다룹니다.
"""

import itertools
import math

import numpy as np
import pytest
from scipy import optimize

from src.completeness import (
    LogGeodesicSolution,
    canonical_witnesses,
    e_evaluate,
    equation_residual,
    log_geodesic_solutions,
)
from src.completeness import log_geodesics
from src.exceptions import InputDomainError
from src.geometry import CanonicalKind, CanonicalModel, ChristoffelSymbols, LinearMap, pushforward


def _pairs(solutions):
    return sorted((s.a, s.b) for s in solutions)


class TestLogGeodesicSolutions:
    """log_geodesic_solutions 테스트"""

    def test_M1은_음의1_0을_포함(self, c1):
        pairs = _pairs(log_geodesic_solutions(c1))

        assert any(a == pytest.approx(-1.0) and b == pytest.approx(0.0, abs=1e-12) for a, b in pairs)

    def test_M2는_해_없음(self, c2):
        assert log_geodesic_solutions(c2) == []

    def test_M3(self, c3):
        pairs = _pairs(log_geodesic_solutions(c3))

        assert pairs == [(pytest.approx(-1.0), pytest.approx(0.0, abs=1e-12))]

    def test_Mplus_δ0_정확히_두_해(self, mplus):
        pairs = _pairs(log_geodesic_solutions(mplus(0.0)))

        assert pairs == [
            (pytest.approx(-1.0), pytest.approx(1.0)),
            (pytest.approx(1.0), pytest.approx(1.0)),
        ]

    def test_Mminus_δ3(self, mminus):
        pairs = _pairs(log_geodesic_solutions(mminus(3.0)))

        expected = sorted([((3 - math.sqrt(5)) / 2, 1.0), ((3 + math.sqrt(5)) / 2, 1.0)])
        assert [a for a, _ in pairs] == pytest.approx([a for a, _ in expected])
        assert [b for _, b in pairs] == pytest.approx([1.0, 1.0])

    def test_Mminus_δ2_중근(self, mminus):
        pairs = _pairs(log_geodesic_solutions(mminus(2.0)))

        assert pairs == [(pytest.approx(1.0), pytest.approx(1.0))]

    @pytest.mark.parametrize("delta", [0.0, 1.0, 1.9])
    def test_완비_Mminus는_해_없음(self, mminus, delta):
        assert log_geodesic_solutions(mminus(delta)) == []

    def test_a가_0인_분기(self, rank1_nonsymmetric):
        """C₂₂¹ = 0, C₂₂² = 3 → (0, ⅓)"""
        solutions = log_geodesic_solutions(rank1_nonsymmetric)

        zero_branch = [s for s in solutions if s.lam is None]
        assert len(zero_branch) == 1
        assert zero_branch[0].b == pytest.approx(1.0 / 3.0)

    def test_평탄_모델의_증인(self):
        """C₁₁¹ = 1 만 있는 평탄 모델: a = a², b = 0 → (1, 0)"""
        solutions = log_geodesic_solutions(ChristoffelSymbols(c111=1.0))

        assert _pairs(solutions) == [(pytest.approx(1.0), pytest.approx(0.0, abs=1e-12))]

    def test_E3가_항등적_0이면_가족_해(self):
        """C₁₁¹ = 1, C₁₂² = ½: E₃ ≡ 0, 모든 방향이 해"""
        C = ChristoffelSymbols(c111=1.0, c122=0.5)

        solutions = log_geodesic_solutions(C)

        assert solutions
        assert all(s.is_family for s in solutions)
        assert all(equation_residual(C, s.a, s.b) < 1e-9 for s in solutions)

    def test_공통근은_제외(self, mocker):
        # given: E₁(1,λ) = (λ−1)(λ−2), E₂(1,λ) = (λ−1)(λ+3), E₃ = (λ−1)(λ² − 3λ − 3)
        C = ChristoffelSymbols(c111=2.0, c112=-3.0, c121=-1.5, c122=1.0, c221=1.0, c222=1.0)
        spy = mocker.spy(log_geodesics, "resultant")

        # when
        solutions = log_geodesic_solutions(C)

        # then
        assert [s.lam for s in solutions] == pytest.approx([(3 - math.sqrt(21)) / 2, (3 + math.sqrt(21)) / 2])
        assert spy.call_count == 1
        assert spy.spy_return == pytest.approx(0.0, abs=1e-9)

    def test_종결식이_0이_아니면_공통근_검사_생략(self, mocker):
        C = ChristoffelSymbols(0.3, -1.1, 0.7, 0.2, -0.4, 1.5)
        spy = mocker.spy(log_geodesics, "resultant")

        solutions = log_geodesic_solutions(C)

        assert abs(spy.spy_return) > 1e-3
        assert all(equation_residual(C, s.a, s.b) < 1e-9 for s in solutions)

    def test_모든_해는_대입_검증을_통과(self, mplus):
        for delta in (0.0, 0.7, 1.9, 3.0):
            C = mplus(delta)
            for solution in log_geodesic_solutions(C):
                assert equation_residual(C, solution.a, solution.b) < 1e-9

    def test_선형변환_공변성(self, mminus, generic_matrix):
        # given
        C = mminus(3.0)
        T = LinearMap.from_matrix(generic_matrix)

        # when
        moved = _pairs(log_geodesic_solutions(pushforward(C, T)))
        expected = sorted(tuple(T.apply(s.vector())) for s in log_geodesic_solutions(C))

        # then
        assert len(moved) == len(expected)
        for got, want in zip(moved, expected):
            assert got == pytest.approx(want, abs=1e-7)


class TestLogGeodesicSolution:
    """LogGeodesicSolution 테스트"""

    def test_영벡터_거부(self):
        with pytest.raises(InputDomainError):
            LogGeodesicSolution(0.0, 0.0)

    def test_to_dict(self):
        data = LogGeodesicSolution(1.0, 1.0, 0.0, 1.0).to_dict()

        assert data == {"a": 1.0, "b": 1.0, "residual": 0.0, "lambda": 1.0, "is_family": False}


class TestCanonicalWitnesses:
    """정준 모델 근의 공식 교차 검증"""

    @pytest.mark.parametrize("kind, delta", [
        (CanonicalKind.M1, None),
        (CanonicalKind.M2, None),
        (CanonicalKind.M3, None),
        (CanonicalKind.MPLUS, 0.0),
        (CanonicalKind.MPLUS, 1.0),
        (CanonicalKind.MPLUS, 1.9),
        (CanonicalKind.MMINUS, 1.0),
        (CanonicalKind.MMINUS, 2.0),
        (CanonicalKind.MMINUS, 3.0),
    ])
    def test_수치해와_일치(self, kind, delta):
        model = CanonicalModel(kind, delta)

        formula = _pairs(canonical_witnesses(model))
        numeric = _pairs(log_geodesic_solutions(model.symbols()))

        assert len(formula) == len(numeric)
        for got, want in zip(numeric, formula):
            assert got == pytest.approx(want, abs=1e-9)

    def test_Mplus_δ1_황금비(self):
        pairs = _pairs(canonical_witnesses(CanonicalModel(CanonicalKind.MPLUS, 1.0)))

        assert [a for a, _ in pairs] == pytest.approx([(-1 - math.sqrt(5)) / 2, (-1 + math.sqrt(5)) / 2])


def _newton_solutions(C, grid):
    """[−10, 10]² 격자에서 시작한 2차원 Newton 이 수렴한 0이 아닌 해"""

    def residual(x):
        e1, e2 = e_evaluate(C, x[0], x[1])
        return [e1 - x[0], e2 - x[1]]

    def jacobian(x):
        a, b = x
        return [
            [2 * a * C.c111 + 2 * b * C.c121 - 1.0, 2 * a * C.c121 + 2 * b * C.c221],
            [2 * a * C.c112 + 2 * b * C.c122, 2 * a * C.c122 + 2 * b * C.c222 - 1.0],
        ]

    found = []
    for a0, b0 in itertools.product(grid, grid):
        sol = optimize.root(residual, [a0, b0], jac=jacobian, method="hybr", options={"xtol": 1e-13})
        a, b = sol.x
        if not sol.success or math.hypot(a, b) < 1e-6:
            continue
        if equation_residual(C, a, b) <= 1e-10 * max(1.0, a * a + b * b):
            found.append((a, b))
    return found


class TestEnumerationCompleteness:
    """Newton 으로 찾은 모든 해가 열거 결과에 포함되는지"""

    @pytest.mark.parametrize("seed", [1, 5, 9, 13])
    def test_Newton_해는_모두_열거됨(self, seed):
        # given
        C = ChristoffelSymbols(*np.random.default_rng(seed).uniform(-2.0, 2.0, 6))
        grid = np.linspace(-10.0, 10.0, 21)

        # when
        newton = _newton_solutions(C, grid)
        enumerated = log_geodesic_solutions(C)

        # then
        for a, b in newton:
            scale = max(1.0, math.hypot(a, b))
            assert any(
                math.hypot(s.a - a, s.b - b) <= 1e-6 * scale for s in enumerated
            ), f"누락된 해 ({a:.9g}, {b:.9g}), 열거: {_pairs(enumerated)}"

    def test_M1_격자에서도_같은_해(self, c1):
        newton = _newton_solutions(c1, np.linspace(-10.0, 10.0, 21))

        assert newton
        assert all(a == pytest.approx(-1.0) and b == pytest.approx(0.0, abs=1e-9) for a, b in newton)
