"""
모델 JSON 문서 단위 테스트
"""

import io
import json

import pytest

from src.exceptions import ModelDocumentError
from src.geometry import ChristoffelSymbols
from src.toolkit import (
    ModelDocument,
    document_from_dict,
    load_document,
    parse_document,
    serialize_document,
)

VALID = {
    "christoffel": {"111": 0.0, "112": -1.0, "121": 0.5, "122": 0.5, "221": 0.0, "222": 0.0},
    "name": "mminus:1",
}


class TestDocumentFromDict:
    """document_from_dict 검증 테스트"""

    def test_정상_문서(self):
        document = document_from_dict(VALID)

        assert document.christoffel == ChristoffelSymbols(c112=-1.0, c121=0.5, c122=0.5)
        assert document.name == "mminus:1"

    def test_이름은_선택(self):
        document = document_from_dict({"christoffel": VALID["christoffel"]})

        assert document.name is None

    def test_키_누락(self):
        table = dict(VALID["christoffel"])
        del table["221"]

        with pytest.raises(ModelDocumentError, match="221"):
            document_from_dict({"christoffel": table})

    def test_알수없는_christoffel_키(self):
        table = dict(VALID["christoffel"], **{"211": 1.0})

        with pytest.raises(ModelDocumentError, match="211"):
            document_from_dict({"christoffel": table})

    def test_알수없는_최상위_키(self):
        with pytest.raises(ModelDocumentError):
            document_from_dict(dict(VALID, extra=1))

    @pytest.mark.parametrize("value", ["1.0", None, True, [1.0], float("inf")])
    def test_숫자가_아닌_값(self, value):
        table = dict(VALID["christoffel"], **{"111": value})

        with pytest.raises(ModelDocumentError):
            document_from_dict({"christoffel": table})

    @pytest.mark.parametrize("payload", [[], "model", {"name": "x"}, {"christoffel": [1, 2]}])
    def test_구조_오류(self, payload):
        with pytest.raises(ModelDocumentError):
            document_from_dict(payload)

    def test_이름_형식(self):
        with pytest.raises(ModelDocumentError):
            document_from_dict(dict(VALID, name=3))

    def test_정수_값_허용(self):
        table = dict(VALID["christoffel"], **{"222": 3})

        assert document_from_dict({"christoffel": table}).christoffel.c222 == 3.0


class TestParseAndSerialize:
    """문자열 변환 테스트"""

    def test_JSON_파싱_오류(self):
        with pytest.raises(ModelDocumentError):
            parse_document("{not json")

    def test_왕복_바이트_동일(self):
        text = serialize_document(ModelDocument(ChristoffelSymbols(0.1, -1.0, 0.5, 1e-20, 2.5, 3.0), "m"))

        assert serialize_document(parse_document(text)) == text

    def test_키_순서(self):
        text = serialize_document(document_from_dict(VALID))

        payload = json.loads(text)
        assert list(payload["christoffel"]) == ["111", "112", "121", "122", "221", "222"]
        assert text.endswith("\n")


class TestLoadDocument:
    """파일 입력 테스트"""

    def test_파일에서_읽기(self, model_file, c3):
        document = load_document(model_file(c3, name="M3"))

        assert document.christoffel == c3
        assert document.name == "M3"

    def test_없는_파일(self, tmp_path):
        with pytest.raises(ModelDocumentError):
            load_document(tmp_path / "missing.json")

    def test_표준입력(self, monkeypatch, c2):
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({"christoffel": c2.as_dict()})))

        assert load_document("-").christoffel == c2
