"""
CSV / JSON / SVG 출력

모든 파일은 같은 디렉터리의 임시 파일에 쓴 뒤 os.replace 로 교체합니다.
SVG 는 Agg 백엔드, 고정 hashsalt, 날짜 메타데이터 제거로 입력이 같으면 바이트 단위로 같습니다.
"""

import io
import json
import logging
import math
import os
import sys
import tempfile
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

from ..config import config
from ..dynamics import Trajectory
from ..exceptions import InputDomainError
from ..phase import FlowCurve
from .moduli import SEGMENT_NOTE, ModuliBranch, ModuliCurvePoint

logger = logging.getLogger(__name__)

TRAJECTORY_COLUMNS = ["t", "x1", "x2", "v1", "v2"]
GRID_COLUMNS = ["u", "v", "du", "dv"]
MODULI_COLUMNS = ["t", "sigma", "psi", "branch"]


def atomic_write_text(path: Union[str, Path], text: str) -> Path:
    """임시 파일에 쓴 뒤 원자적으로 교체합니다."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    handle = tempfile.NamedTemporaryFile(
        "w", encoding="utf-8", dir=path.parent, prefix=f".{path.name}.", suffix=".tmp", delete=False
    )
    try:
        with handle:
            handle.write(text)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(handle.name, path)
    except BaseException:
        Path(handle.name).unlink(missing_ok=True)
        raise
    logger.debug("파일 저장: %s (%d bytes)", path, len(text))
    return path


def write_output(text: str, output: Optional[Union[str, Path]] = None) -> None:
    """output 이 없으면 표준 출력으로 보냅니다."""
    if output is None or str(output) == "-":
        sys.stdout.write(text)
        return
    atomic_write_text(output, text)


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def _format_escape(value: Optional[float]) -> str:
    return "none" if value is None or not math.isfinite(value) else repr(float(value))


def trajectory_frame(trajectory: Trajectory) -> pd.DataFrame:
    return pd.DataFrame(trajectory.rows(), columns=TRAJECTORY_COLUMNS)


def trajectory_csv(trajectory: Trajectory) -> str:
    """
    열 "t,x1,x2,v1,v2" 와 마지막 주석 줄
    "# termination=<reason> escape=<value|none>"
    """
    body = trajectory_frame(trajectory).to_csv(index=False, lineterminator="\n")
    footer = (
        f"# termination={trajectory.termination.value} "
        f"escape={_format_escape(trajectory.escape_time)}\n"
    )
    return body + footer


def trajectory_json(trajectory: Trajectory) -> str:
    payload = trajectory.summary()
    payload["columns"] = TRAJECTORY_COLUMNS
    payload["rows"] = trajectory.rows().tolist()
    return to_json(payload)


def grid_frame(grid: np.ndarray) -> pd.DataFrame:
    return pd.DataFrame(np.asarray(grid, dtype=float), columns=GRID_COLUMNS)


def grid_csv(grid: np.ndarray) -> str:
    return grid_frame(grid).to_csv(index=False, lineterminator="\n")


def moduli_csv(points: Sequence[ModuliCurvePoint]) -> str:
    frame = pd.DataFrame([p.as_row() for p in points], columns=MODULI_COLUMNS)
    return frame.to_csv(index=False, lineterminator="\n") + f"# {SEGMENT_NOTE}\n"


def read_start_points(path: Union[str, Path]) -> List[np.ndarray]:
    """흐름 곡선 시작점 CSV (열 "u,v")"""
    try:
        frame = pd.read_csv(path, comment="#")
    except (OSError, ValueError) as e:
        raise InputDomainError(f"시작점 CSV 를 읽을 수 없습니다: {path} ({e})") from e
    if list(frame.columns) != ["u", "v"]:
        raise InputDomainError(f"시작점 CSV 열은 'u,v' 여야 합니다: {list(frame.columns)}")
    values = frame.to_numpy(dtype=float)
    if not np.all(np.isfinite(values)):
        raise InputDomainError("시작점 CSV 에 유한하지 않은 값이 있습니다")
    return [row for row in values]


def _figure():
    plt.rcParams["svg.hashsalt"] = config.figure.svg_hashsalt
    fig, ax = plt.subplots(figsize=config.figure.figsize, dpi=config.figure.dpi)
    return fig, ax


def _save_svg(fig) -> str:
    buffer = io.StringIO()
    fig.savefig(buffer, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buffer.getvalue()


def flow_svg(
    grid: np.ndarray,
    curves: Iterable[FlowCurve] = (),
    title: Optional[str] = None,
) -> str:
    """
    방향장 화살표와 흐름 곡선을 그린 SVG 문자열.

    :param grid: field_grid 결과 (u, v, du, dv)
    :param curves: 겹쳐 그릴 흐름 곡선
    :param title: 그림 제목
    """
    grid = np.asarray(grid, dtype=float)
    fig, ax = _figure()
    norm = np.hypot(grid[:, 2], grid[:, 3])
    scale = np.where(norm > 0, norm, 1.0)
    ax.quiver(
        grid[:, 0], grid[:, 1], grid[:, 2] / scale, grid[:, 3] / scale,
        norm, cmap="viridis", angles="xy", pivot="mid",
    )
    fixed = norm == 0
    if np.any(fixed):
        ax.plot(grid[fixed, 0], grid[fixed, 1], "k.", markersize=3)
    u_min, u_max = grid[:, 0].min(), grid[:, 0].max()
    v_min, v_max = grid[:, 1].min(), grid[:, 1].max()
    for curve in curves:
        ax.plot(curve.u, curve.v, color="tab:red", linewidth=1.0)
    ax.set_xlim(u_min, u_max)
    ax.set_ylim(v_min, v_max)
    ax.axhline(0.0, color="gray", linewidth=0.5)
    ax.axvline(0.0, color="gray", linewidth=0.5)
    ax.set_xlabel("u")
    ax.set_ylabel("v")
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    return _save_svg(fig)


def moduli_svg(points: Sequence[ModuliCurvePoint]) -> str:
    """σ₊, σ₋ 곡선과 δ 선분 (δ < 2 실선, δ ≥ 2 점선)"""
    fig, ax = _figure()
    for branch, color in ((ModuliBranch.PLUS_CURVE, "tab:blue"), (ModuliBranch.MINUS_CURVE, "tab:orange")):
        selected = [p for p in points if p.branch is branch]
        ax.plot([p.sigma for p in selected], [p.psi for p in selected], color=color, label=branch.value)
    segment = [p for p in points if p.branch is ModuliBranch.DELTA_SEGMENT]
    complete = [p for p in segment if p.t < 2.0]
    incomplete = [p for p in segment if p.t >= 2.0]
    if complete:
        ax.plot([p.sigma for p in complete], [p.psi for p in complete], color="tab:green",
                linewidth=2.0, label="delta < 2")
    if incomplete:
        ax.plot([p.sigma for p in incomplete], [p.psi for p in incomplete], color="tab:green",
                linewidth=2.0, linestyle="--", label="delta >= 2")
    ax.set_xlabel("Sigma")
    ax.set_ylabel("Psi")
    ax.legend(loc="upper left")
    return _save_svg(fig)


def fan_svg(trajectories: Sequence[Trajectory], title: Optional[str] = None) -> str:
    fig, ax = _figure()
    for trajectory in trajectories:
        ax.plot(trajectory.x[:, 0], trajectory.x[:, 1], color="tab:blue", linewidth=0.8)
    if trajectories:
        base = trajectories[0].x[0]
        ax.plot([base[0]], [base[1]], "ko", markersize=4)
    ax.set_xlabel("x1")
    ax.set_ylabel("x2")
    if title:
        ax.set_title(title)
    return _save_svg(fig)
