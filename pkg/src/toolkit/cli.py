"""
명령줄 인터페이스

    type-a-completeness classify model.json
    type-a-completeness integrate --canonical M2 --v0 1,1 --t1 10
    type-a-completeness flow --canonical mminus:1 --svg flow.svg

종료 코드: 0 성공, 1 입력 오류, 2 수치/일관성 실패
"""

import argparse
import logging
import math
import sys
from typing import Callable, Dict, List, Optional, Sequence

from .. import __version__
from ..completeness import classify, log_geodesic_solutions
from ..config import config
from ..dynamics import (
    ConstantModel,
    GeodesicState,
    IntegrationOptions,
    TildeM3Model,
    integrate,
)
from ..exceptions import (
    AffineSurfaceError,
    DegenerateRicciError,
    InputDomainError,
    MisuseError,
    NumericFailureError,
)
from ..geometry import (
    invariants_sigma_psi,
    normalize_generic,
    parse_canonical,
    rho_check,
    ricci_report,
)
from ..phase import field_grid, flow_integrate
from .documents import ModelDocument, load_document
from .emitters import (
    atomic_write_text,
    flow_svg,
    grid_csv,
    moduli_csv,
    moduli_svg,
    read_start_points,
    to_json,
    trajectory_csv,
    trajectory_json,
    write_output,
)
from .moduli import moduli_points
from .sweep import run_sweep

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERIC = 2


class _ArgumentParser(argparse.ArgumentParser):
    """인자 오류를 종료 코드 1 로 보고합니다."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _floats(count: int) -> Callable[[str], List[float]]:
    def parse(text: str) -> List[float]:
        try:
            values = [float(part) for part in text.split(",")]
        except ValueError:
            raise argparse.ArgumentTypeError(f"실수 {count}개를 쉼표로 구분해야 합니다: {text!r}")
        if len(values) != count or not all(math.isfinite(v) for v in values):
            raise argparse.ArgumentTypeError(f"유한한 실수 {count}개가 필요합니다: {text!r}")
        return values

    return parse


def _finite(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"실수가 아닙니다: {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"유한한 값이어야 합니다: {text!r}")
    return value


def _positive(text: str) -> float:
    value = _finite(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"양수여야 합니다: {text!r}")
    return value


# =============================================================================
# 모델 입력
# =============================================================================

def _load_model(args: argparse.Namespace) -> ModelDocument:
    if args.canonical and args.model:
        raise InputDomainError("모델 파일과 --canonical 은 함께 쓸 수 없습니다")
    if args.canonical:
        canonical = parse_canonical(args.canonical)
        return ModelDocument(canonical.symbols(), canonical.label)
    if not args.model:
        raise InputDomainError("모델 JSON 경로('-' 는 표준 입력) 또는 --canonical 이 필요합니다")
    return load_document(args.model)


def _require_format(args: argparse.Namespace, allowed: Sequence[str], default: str) -> str:
    fmt = args.format or default
    if fmt not in allowed:
        raise InputDomainError(f"{args.command} 는 --format {fmt} 를 지원하지 않습니다")
    return fmt


# =============================================================================
# 하위 명령
# =============================================================================

def cmd_classify(args: argparse.Namespace) -> int:
    _require_format(args, ("json",), "json")
    document = _load_model(args)
    verdict = classify(document.christoffel, args.tol)
    payload = verdict.to_dict()
    if document.name is not None:
        payload = {"name": document.name, **payload}
    write_output(to_json(payload), args.output)
    return EXIT_OK


def cmd_log_geodesics(args: argparse.Namespace) -> int:
    _require_format(args, ("json",), "json")
    document = _load_model(args)
    solutions = log_geodesic_solutions(document.christoffel, args.tol)
    write_output(to_json([s.to_dict() for s in solutions]), args.output)
    return EXIT_OK


def cmd_ricci(args: argparse.Namespace) -> int:
    _require_format(args, ("json",), "json")
    C = _load_model(args).christoffel
    report = ricci_report(C, args.tol)
    payload = report.to_dict()
    if report.rank == 2:
        sigma, psi = invariants_sigma_psi(C, args.tol)
        payload.update({"sigma": sigma, "psi": psi, "rho_check": rho_check(C).to_list()})
    write_output(to_json(payload), args.output)
    return EXIT_OK


def cmd_normalize(args: argparse.Namespace) -> int:
    _require_format(args, ("json",), "json")
    document = _load_model(args)
    normalized, transform = normalize_generic(document.christoffel, seed=args.seed, tol=args.tol)
    payload = ModelDocument(normalized, document.name).to_dict()
    payload["transform"] = transform.to_list()
    write_output(to_json(payload), args.output)
    return EXIT_OK


def cmd_integrate(args: argparse.Namespace) -> int:
    fmt = _require_format(args, ("csv", "json"), "csv")
    if args.tilde_m3:
        if args.model or args.canonical:
            raise InputDomainError("--tilde-m3 는 모델 입력과 함께 쓸 수 없습니다")
        kind = TildeM3Model()
    else:
        kind = ConstantModel(_load_model(args).christoffel)
    if args.t0 == args.t1:
        raise InputDomainError(f"--t0 와 --t1 이 같습니다: {args.t0}")

    opts = IntegrationOptions()
    if args.tol is not None:
        opts = opts.with_tolerance(args.tol)
    trajectory = integrate(kind, GeodesicState(args.x0, args.v0), (args.t0, args.t1), opts)
    text = trajectory_csv(trajectory) if fmt == "csv" else trajectory_json(trajectory)
    write_output(text, args.output)
    return EXIT_OK


def cmd_flow(args: argparse.Namespace) -> int:
    fmt = _require_format(args, ("csv", "json"), "csv")
    C = _load_model(args).christoffel
    grid = field_grid(C, args.window, args.grid_n)
    if fmt == "csv":
        write_output(grid_csv(grid), args.output)
    else:
        write_output(to_json({"columns": ["u", "v", "du", "dv"], "rows": grid.tolist()}), args.output)

    if args.svg:
        curves = []
        if args.curves:
            opts = IntegrationOptions()
            for start in read_start_points(args.curves):
                curves.append(flow_integrate(C, start, (0.0, args.horizon), opts))
                curves.append(flow_integrate(C, start, (0.0, -args.horizon), opts))
        atomic_write_text(args.svg, flow_svg(grid, curves))
    elif args.curves:
        logger.warning("--curves 는 --svg 와 함께일 때만 사용됩니다")
    return EXIT_OK


def cmd_moduli(args: argparse.Namespace) -> int:
    fmt = _require_format(args, ("csv", "json"), "csv")
    points = moduli_points(args.t_range, args.delta_range, args.n)
    if fmt == "csv":
        write_output(moduli_csv(points), args.output)
    else:
        rows = [list(p.as_row()) for p in points]
        write_output(to_json({"columns": ["t", "sigma", "psi", "branch"], "rows": rows}), args.output)
    if args.svg:
        atomic_write_text(args.svg, moduli_svg(points))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    _require_format(args, ("json",), "json")
    inject = [parse_canonical(text) for text in args.inject]
    report = run_sweep(
        count=args.count,
        seed=args.seed,
        horizon=args.horizon,
        samples=args.samples,
        inject=inject,
        show_progress=not args.no_progress,
    )
    write_output(to_json(report.to_dict()), args.report or args.output)
    if report.disagreements:
        logger.error("판정과 오라클이 %d건 불일치합니다", len(report.disagreements))
        return EXIT_NUMERIC
    return EXIT_OK


# =============================================================================
# 파서
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive, default=None, help="허용오차")
    common.add_argument("--output", "-o", default=None, help="출력 파일 (기본: 표준 출력)")
    common.add_argument("--format", choices=("json", "csv"), default=None, help="출력 형식")
    common.add_argument("--verbose", "-v", action="count", default=0, help="로그 상세도 (-v, -vv)")

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("model", nargs="?", default=None, help="모델 JSON 경로 ('-' 는 표준 입력)")
    model.add_argument("--canonical", default=None, help="정준 모델: M1, M2, M3, mplus:δ, mminus:δ")

    parser = _ArgumentParser(
        prog="type-a-completeness",
        description="Type A 아핀 곡면의 측지 완비성 판정 도구",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("classify", parents=[common, model], help="완비성 판정")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("log-geodesics", parents=[common, model], help="로그 측지선 해")
    p.set_defaults(handler=cmd_log_geodesics)

    p = sub.add_parser("ricci", parents=[common, model], help="Ricci 텐서와 불변량")
    p.set_defaults(handler=cmd_ricci)

    p = sub.add_parser("normalize", parents=[common, model], help="일반 위치 정규화")
    p.add_argument("--seed", type=int, default=0, help="전단 ε 수열 시작 위치")
    p.set_defaults(handler=cmd_normalize)

    p = sub.add_parser("integrate", parents=[common, model], help="측지선 적분")
    p.add_argument("--x0", type=_floats(2), default=[0.0, 0.0], help="초기 위치 'x1,x2'")
    p.add_argument("--v0", type=_floats(2), required=True, help="초기 속도 'v1,v2'")
    p.add_argument("--t0", type=_finite, default=0.0)
    p.add_argument("--t1", type=_finite, required=True)
    p.add_argument("--tilde-m3", action="store_true", help="Γ₂₂¹ = x¹ 가변 계수 모델")
    p.set_defaults(handler=cmd_integrate)

    p = sub.add_parser("flow", parents=[common, model], help="위상 흐름 격자와 그림")
    p.add_argument("--window", type=_floats(4), default=[-2.0, 2.0, -2.0, 2.0],
                   help="'u_min,u_max,v_min,v_max'")
    p.add_argument("--grid-n", type=int, default=21)
    p.add_argument("--curves", default=None, help="흐름 곡선 시작점 CSV (열 u,v)")
    p.add_argument("--svg", default=None, help="SVG 출력 경로")
    p.add_argument("--horizon", type=_positive, default=5.0, help="흐름 곡선 적분 시간")
    p.set_defaults(handler=cmd_flow)

    p = sub.add_parser("moduli", parents=[common], help="모듈라이 곡선 데이터")
    p.add_argument("--t-range", type=_floats(2), default=[0.25, 2.0])
    p.add_argument("--delta-range", type=_floats(2), default=[0.0, 3.0])
    p.add_argument("--n", type=int, default=101)
    p.add_argument("--svg", default=None, help="SVG 출력 경로")
    p.set_defaults(handler=cmd_moduli)

    p = sub.add_parser("sweep", parents=[common], help="판정 vs 수치 오라클 스윕")
    p.add_argument("--count", type=int, default=config.sweep.count)
    p.add_argument("--seed", type=int, default=config.sweep.seed)
    p.add_argument("--horizon", type=_positive, default=config.sweep.horizon)
    p.add_argument("--samples", type=int, default=None, help="완비 모델당 초기값 수")
    p.add_argument("--inject", action="append", default=[], help="앞에 넣을 정준 모델 (반복 가능)")
    p.add_argument("--report", default=None, help="보고서 JSON 경로")
    p.add_argument("--no-progress", action="store_true", help="진행 표시 끄기")
    p.set_defaults(handler=cmd_sweep)

    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


EXIT_CODES: Dict[type, int] = {
    InputDomainError: EXIT_INPUT,
    DegenerateRicciError: EXIT_INPUT,
    MisuseError: EXIT_INPUT,
    NumericFailureError: EXIT_NUMERIC,
}


def exit_code_for(error: AffineSurfaceError) -> int:
    for kind, code in EXIT_CODES.items():
        if isinstance(error, kind):
            return code
    return EXIT_INPUT


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT
    _configure_logging(args.verbose)
    try:
        return args.handler(args)
    except AffineSurfaceError as e:
        code = exit_code_for(e)
        logger.debug("명령 실패", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
