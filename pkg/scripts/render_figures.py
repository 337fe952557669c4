#!/usr/bin/env python3
import sys
import argparse
import logging
from pathlib import Path

PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.dynamics import ConstantModel, TildeM3Model, geodesic_fan
from src.geometry import CanonicalKind, canonical_model
from src.phase import field_grid, flow_integrate
from src.toolkit import (
    atomic_write_text,
    fan_svg,
    flow_svg,
    grid_csv,
    moduli_csv,
    moduli_points,
    moduli_svg,
)

# 흐름 그림에 겹쳐 그릴 시작점 (δ = 1)
FLOW_STARTS = [(0.5, 1.5), (1.0, 1.0), (1.5, 0.5), (-0.5, 1.0), (-1.0, -1.0), (0.5, -1.5)]

FAN_MODELS = {
    "fan_m2": ConstantModel(canonical_model(CanonicalKind.M2)),
    "fan_mminus_0": ConstantModel(canonical_model(CanonicalKind.MMINUS, 0.0)),
    "fan_mminus_1.8": ConstantModel(canonical_model(CanonicalKind.MMINUS, 1.8)),
    "fan_tilde_m3": TildeM3Model(),
}


def render_flow(out_dir: Path, horizon: float) -> None:
    C = canonical_model(CanonicalKind.MMINUS, 1.0)
    grid = field_grid(C, (-2.0, 2.0, -2.0, 2.0), 21)
    curves = []
    for start in FLOW_STARTS:
        curves.append(flow_integrate(C, start, (0.0, horizon)))
        curves.append(flow_integrate(C, start, (0.0, -horizon)))
    atomic_write_text(out_dir / "flow_delta1.csv", grid_csv(grid))
    atomic_write_text(out_dir / "flow_delta1.svg", flow_svg(grid, curves, title="delta = 1"))
    print(f"  흐름: {len(grid)} 격자점, 곡선 {len(curves)}개")


def render_moduli(out_dir: Path) -> None:
    points = moduli_points((0.25, 2.0), (0.0, 3.0), 101)
    atomic_write_text(out_dir / "moduli.csv", moduli_csv(points))
    atomic_write_text(out_dir / "moduli.svg", moduli_svg(points))
    print(f"  모듈라이: {len(points)} 점")


def render_fans(out_dir: Path, directions: int, t_max: float) -> None:
    for name, kind in FAN_MODELS.items():
        fan = geodesic_fan(kind, (0.0, 0.0), directions, t_max)
        atomic_write_text(out_dir / f"{name}.svg", fan_svg(fan, title=name))
        terminations = sorted({t.termination.value for t in fan})
        print(f"  {name}: 측지선 {len(fan)}개, 종료 {terminations}")


def main():
    parser = argparse.ArgumentParser(description="그림 데이터 일괄 생성 (흐름, 모듈라이, 측지선 부채꼴)")
    parser.add_argument("--out-dir", type=str, default="figures", help="출력 디렉토리")
    parser.add_argument("--horizon", type=float, default=5.0, help="흐름 곡선 적분 시간")
    parser.add_argument("--directions", type=int, default=24, help="부채꼴 방향 수")
    parser.add_argument("--t-max", type=float, default=2.0, help="부채꼴 측지선 길이")
    parser.add_argument("-v", "--verbose", action="store_true", help="INFO 로그 출력")
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    out_dir = Path(args.out_dir)

    print("=" * 60)
    print(f"그림 데이터 생성: {out_dir}")
    print("=" * 60)
    render_flow(out_dir, args.horizon)
    render_moduli(out_dir)
    render_fans(out_dir, args.directions, args.t_max)
    print("완료")


if __name__ == "__main__":
    main()
