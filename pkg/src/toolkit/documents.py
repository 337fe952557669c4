"""
모델 JSON 문서

{"christoffel": {"111": ..., "112": ..., "121": ..., "122": ..., "221": ..., "222": ...},
 "name": "선택"}

"ijk" 키는 C_ij^k (i ≤ j) 를 뜻합니다.
"""

import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..exceptions import InputDomainError, ModelDocumentError
from ..geometry import CHRISTOFFEL_KEYS, ChristoffelSymbols

TOP_LEVEL_KEYS = ("christoffel", "name")


@dataclass(frozen=True)
class ModelDocument:
    christoffel: ChristoffelSymbols
    name: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"christoffel": self.christoffel.as_dict()}
        if self.name is not None:
            payload["name"] = self.name
        return payload


def _number(key: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ModelDocumentError(f"christoffel[{key!r}] 는 숫자여야 합니다: {value!r}")
    if not math.isfinite(value):
        raise ModelDocumentError(f"christoffel[{key!r}] 가 유한하지 않습니다: {value!r}")
    return float(value)


def document_from_dict(payload: Any) -> ModelDocument:
    """
    파싱된 JSON 객체를 검증하여 ModelDocument 로 변환합니다.

    :raises ModelDocumentError: 키 누락, 알 수 없는 키, 숫자가 아닌 값
    """
    if not isinstance(payload, dict):
        raise ModelDocumentError("모델 문서는 JSON 객체여야 합니다")
    unknown = sorted(set(payload) - set(TOP_LEVEL_KEYS))
    if unknown:
        raise ModelDocumentError(f"알 수 없는 최상위 키: {unknown}")
    table = payload.get("christoffel")
    if not isinstance(table, dict):
        raise ModelDocumentError("'christoffel' 객체가 필요합니다")

    missing = [k for k in CHRISTOFFEL_KEYS if k not in table]
    if missing:
        raise ModelDocumentError(f"christoffel 키 누락: {missing}")
    extra = sorted(set(table) - set(CHRISTOFFEL_KEYS))
    if extra:
        raise ModelDocumentError(f"알 수 없는 christoffel 키: {extra}")

    name = payload.get("name")
    if name is not None and not isinstance(name, str):
        raise ModelDocumentError(f"'name' 은 문자열이어야 합니다: {name!r}")
    values = {k: _number(k, table[k]) for k in CHRISTOFFEL_KEYS}
    try:
        symbols = ChristoffelSymbols.from_dict(values)
    except InputDomainError as e:
        raise ModelDocumentError(str(e)) from e
    return ModelDocument(symbols, name)


def parse_document(text: str) -> ModelDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelDocumentError(f"JSON 파싱 실패: {e}") from e
    return document_from_dict(payload)


def serialize_document(document: ModelDocument) -> str:
    """고정 키 순서, 최단 왕복 실수 표기"""
    return json.dumps(document.to_dict(), indent=2, ensure_ascii=False) + "\n"


def load_document(source: Union[str, Path]) -> ModelDocument:
    """
    파일 경로 또는 "-"(표준 입력)에서 모델 문서를 읽습니다.
    """
    if str(source) == "-":
        return parse_document(sys.stdin.read())
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ModelDocumentError(f"모델 파일을 읽을 수 없습니다: {path} ({e})") from e
    return parse_document(text)
