"""
대수 판정 vs 수치 오라클 교차 검증 스윕

무작위 계수 2 모델(성분 균등분포 [−b, b])마다 classify 결과와 적분기 결과를 비교합니다.
- 로그 측지선 증인이 있으면: 횡방향 섭동이 가장 느리게 자라는 증인부터 역방향 적분,
  어느 하나라도 탈출 시간 ≈ −1 이면 불완비
- 완비 판정이면: ‖v‖ ≤ 1 인 무작위 초기값들이 horizon 까지 폭주 없이 도달
"""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Iterator, List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from ..completeness import Branch, CompletenessVerdict, classify
from ..config import SweepConfig, config
from ..dynamics import (
    ConstantModel,
    GeodesicState,
    IntegrationOptions,
    Termination,
    integrate,
    log_geodesic_curve,
    rank1_incomplete_witness,
)
from ..exceptions import AffineSurfaceError, InputDomainError
from ..geometry import CanonicalModel, ChristoffelSymbols, rank_signature, ricci

logger = logging.getLogger(__name__)


@dataclass
class OracleResult:
    complete: Optional[bool]
    escape_time: Optional[float] = None
    trajectories: int = 0
    detail: str = ""


@dataclass
class SweepRecord:
    index: int
    source: str
    symbols: ChristoffelSymbols
    verdict: CompletenessVerdict
    oracle: OracleResult

    @property
    def algebraic_complete(self) -> Optional[bool]:
        return self.verdict.model_complete

    @property
    def agree(self) -> Optional[bool]:
        if self.algebraic_complete is None or self.oracle.complete is None:
            return None
        return self.algebraic_complete == self.oracle.complete

    def to_dict(self, full: bool = False) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "index": self.index,
            "source": self.source,
            "branch": self.verdict.branch.value,
            "algebraic_complete": self.algebraic_complete,
            "oracle_complete": self.oracle.complete,
            "agree": self.agree,
            "escape_time": self.oracle.escape_time,
        }
        if full:
            result["christoffel"] = self.symbols.as_dict()
            result["verdict"] = self.verdict.to_dict()
            result["oracle_detail"] = self.oracle.detail
        return result


@dataclass
class SweepReport:
    count: int
    seed: int
    horizon: float
    samples: int
    records: List[SweepRecord] = field(default_factory=list)

    @property
    def agreements(self) -> int:
        return sum(1 for r in self.records if r.agree is True)

    @property
    def disagreements(self) -> List[SweepRecord]:
        return [r for r in self.records if r.agree is False]

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.records if r.agree is None)

    def to_dict(self) -> Dict[str, Any]:
        evaluated = len(self.records) - self.skipped
        return {
            "count": self.count,
            "seed": self.seed,
            "horizon": self.horizon,
            "samples": self.samples,
            "agreement": f"{self.agreements}/{evaluated}",
            "agreements": self.agreements,
            "skipped": self.skipped,
            "disagreements": [r.to_dict(full=True) for r in self.disagreements],
            "records": [r.to_dict() for r in self.records],
        }


def random_models(
    seed: int,
    entry_bound: float,
    rank_filter_tol: float,
) -> Iterator[ChristoffelSymbols]:
    """계수 2 인 무작위 모델을 끝없이 생성합니다."""
    rng = np.random.default_rng(seed)
    while True:
        C = ChristoffelSymbols(*rng.uniform(-entry_bound, entry_bound, 6))
        rank, _ = rank_signature(ricci(C), rank_filter_tol)
        if rank == 2:
            yield C
        else:
            logger.debug("계수 %d 모델 제외", rank)


def transverse_rate(C: ChristoffelSymbols, a: float, b: float) -> float:
    """
    로그 측지선 광선을 역방향으로 따라갈 때 횡방향 섭동의 지수 μ.

    u = (1+s)·v 는 r = −log(1+s) 에 대해 u' = Γ(u,u) − u 를 따르고,
    광선 u = (a, b) 에서 선형화 행렬의 고유값은 1 (탈출 시각 이동) 과 μ 입니다.
    섭동은 (1+s)^(−μ) 로 자랍니다.
    """
    w = np.array([a, b], dtype=float)
    contracted = np.einsum("i,ijk->kj", w, C.gamma())
    return float(2.0 * np.trace(contracted) - 3.0)


def _witness_growth(rate: float, settings: SweepConfig) -> float:
    if rate <= 0.0:
        return settings.witness_growth
    growth = 10.0 ** (settings.witness_drift_digits / rate)
    return float(min(settings.witness_growth, max(settings.witness_min_growth, growth)))


def _witness_oracle(
    C: ChristoffelSymbols,
    verdict: CompletenessVerdict,
    settings: SweepConfig,
    opts: IntegrationOptions,
) -> OracleResult:
    ranked = sorted(verdict.witnesses, key=lambda w: transverse_rate(C, w.a, w.b))
    base = opts.with_tolerance(min(opts.rtol, settings.witness_rtol))
    details: List[str] = []
    best: Optional[float] = None
    for k, witness in enumerate(ranked):
        rate = transverse_rate(C, witness.a, witness.b)
        growth = _witness_growth(rate, settings)
        speed = math.hypot(witness.a, witness.b)
        witness_opts = replace(base, blow_up_norm=growth * speed)
        start = log_geodesic_curve(witness.a, witness.b, 1.0)
        trajectory = integrate(ConstantModel(C), start, (0.0, -settings.backward_span), witness_opts)
        escape = trajectory.escape_time
        details.append(
            f"({witness.a:.6g}, {witness.b:.6g}): μ={rate:.3g}, "
            f"termination={trajectory.termination.value}, escape={escape}"
        )
        if trajectory.termination is Termination.BLOW_UP and escape is not None:
            if best is None or abs(escape + 1.0) < abs(best + 1.0):
                best = escape
            if abs(escape + 1.0) < settings.escape_tol:
                return OracleResult(
                    complete=False,
                    escape_time=escape,
                    trajectories=k + 1,
                    detail="; ".join(details),
                )
    return OracleResult(
        complete=True,
        escape_time=best,
        trajectories=len(ranked),
        detail="; ".join(details),
    )


def _sample_oracle(
    C: ChristoffelSymbols,
    settings: SweepConfig,
    opts: IntegrationOptions,
    samples: int,
    rng: np.random.Generator,
) -> OracleResult:
    for k in range(samples):
        x0 = rng.uniform(-1.0, 1.0, 2)
        angle = rng.uniform(0.0, 2.0 * math.pi)
        speed = rng.uniform(0.0, 1.0)
        v0 = (speed * math.cos(angle), speed * math.sin(angle))
        trajectory = integrate(ConstantModel(C), GeodesicState(x0, v0), (0.0, settings.horizon), opts)
        if trajectory.termination is not Termination.HORIZON_REACHED:
            return OracleResult(
                complete=False,
                escape_time=trajectory.escape_time,
                trajectories=k + 1,
                detail=f"sample {k}: termination={trajectory.termination.value}",
            )
    return OracleResult(complete=True, trajectories=samples)


def numerical_oracle(
    C: ChristoffelSymbols,
    verdict: CompletenessVerdict,
    settings: Optional[SweepConfig] = None,
    opts: Optional[IntegrationOptions] = None,
    samples: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> OracleResult:
    """
    판정과 독립적으로 적분기로 완비성을 확인합니다.

    :param C: 모델
    :param verdict: classify 결과 (어떤 실험을 할지만 결정)
    :param settings: 스윕 설정
    :param opts: 적분 옵션
    :param samples: 완비 판정 모델의 무작위 초기값 수
    :param rng: 초기값 난수 생성기
    :return: OracleResult (판단 불가이면 complete=None)
    """
    settings = config.sweep if settings is None else settings
    opts = IntegrationOptions() if opts is None else opts
    samples = settings.oracle_samples if samples is None else samples
    rng = np.random.default_rng(settings.seed) if rng is None else rng

    if verdict.witnesses:
        return _witness_oracle(C, verdict, settings, opts)
    if verdict.branch is Branch.RANK1_NONSYMMETRIC:
        try:
            witness = rank1_incomplete_witness(C, opts)
        except AffineSurfaceError as e:
            return OracleResult(complete=True, detail=f"계수 1 증인 실패: {e}")
        return OracleResult(complete=False, escape_time=witness.escape_time, trajectories=1)
    if verdict.model_complete:
        return _sample_oracle(C, settings, opts, samples, rng)
    return OracleResult(complete=None, detail="수치 오라클 대상이 아님")


def run_sweep(
    count: Optional[int] = None,
    seed: Optional[int] = None,
    horizon: Optional[float] = None,
    samples: Optional[int] = None,
    inject: Sequence[CanonicalModel] = (),
    settings: Optional[SweepConfig] = None,
    opts: Optional[IntegrationOptions] = None,
    show_progress: bool = True,
) -> SweepReport:
    """
    스윕을 실행합니다. 주입 모델이 앞자리를 차지하고 나머지는 무작위 모델입니다.

    :param count: 전체 모델 수 (≥ 1)
    :param seed: 난수 시드
    :param horizon: 완비 판정 모델의 적분 시간
    :param samples: 완비 판정 모델당 초기값 수
    :param inject: 앞에 넣을 정준 모델
    :return: SweepReport
    """
    base = config.sweep if settings is None else settings
    settings = replace(
        base,
        count=base.count if count is None else count,
        seed=base.seed if seed is None else seed,
        horizon=base.horizon if horizon is None else horizon,
        oracle_samples=base.oracle_samples if samples is None else samples,
    )
    if settings.count < 1:
        raise InputDomainError(f"count 는 1 이상이어야 합니다: {settings.count}")
    if not (math.isfinite(settings.horizon) and settings.horizon > 0):
        raise InputDomainError(f"horizon 은 양수여야 합니다: {settings.horizon}")
    if settings.oracle_samples < 1:
        raise InputDomainError(f"samples 는 1 이상이어야 합니다: {settings.oracle_samples}")

    report = SweepReport(settings.count, settings.seed, settings.horizon, settings.oracle_samples)
    sources = [(model.label, model.symbols()) for model in inject][: settings.count]
    generator = random_models(settings.seed, settings.entry_bound, settings.rank_filter_tol)
    while len(sources) < settings.count:
        sources.append(("random", next(generator)))

    for index, (source, C) in enumerate(tqdm(sources, desc="sweep", disable=not show_progress)):
        verdict = classify(C)
        rng = np.random.default_rng([settings.seed, index])
        oracle = numerical_oracle(C, verdict, settings, opts, settings.oracle_samples, rng)
        record = SweepRecord(index, source, C, verdict, oracle)
        if record.agree is False:
            logger.warning(
                "불일치 #%d (%s): 판정=%s, 오라클=%s, %s",
                index, source, verdict.branch.value, oracle.complete, oracle.detail,
            )
        report.records.append(record)

    logger.info("스윕 완료: 일치 %d, 불일치 %d, 건너뜀 %d",
                report.agreements, len(report.disagreements), report.skipped)
    return report
