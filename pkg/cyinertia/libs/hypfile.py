import json
import re
from typing import Any, Dict, List, Optional, Tuple

from ..algebra import Field
from ..errors import CYException, HypersurfaceFormatError
from ..geometry.hypersurface import MAX_EXPONENT, MultiQuadric

_TERMS_RE = re.compile(r'"terms"\s*:\s*\[')
_SEPARATOR_RE = re.compile(r"[\s,]*")
_DECODER = json.JSONDecoder()


class HypersurfaceFile:
    """Encapsulates reading and writing the hypersurface text format"""

    def __init__(self, X: MultiQuadric):
        self.X = X

    @classmethod
    def loads(cls, text: str) -> "HypersurfaceFile":
        """
        Parse the JSON object ``{n_plus_1, field, terms: [{exps, coeff}]}``.

        :raises HypersurfaceFormatError: with the offending line number
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise HypersurfaceFormatError(e.msg, e.lineno)
        if not isinstance(data, dict):
            raise HypersurfaceFormatError("Top level must be an object", 1)

        n_plus_1 = data.get("n_plus_1")
        if isinstance(n_plus_1, bool) or not isinstance(n_plus_1, int) or n_plus_1 < 2:
            raise HypersurfaceFormatError(
                "n_plus_1 must be an integer >= 2", _key_line(text, "n_plus_1")
            )
        try:
            field = Field.parse(data.get("field", ""))
        except CYException as e:
            raise HypersurfaceFormatError(e.message, _key_line(text, "field"))
        terms = data.get("terms")
        if not isinstance(terms, list) or not terms:
            raise HypersurfaceFormatError(
                "terms must be a nonempty list", _key_line(text, "terms")
            )

        spans = _term_spans(text)
        coefficients: Dict[tuple, Any] = {}
        for index, record in enumerate(terms):
            locate = _TermLocator(text, spans[index] if index < len(spans) else None)
            exps, coeff = _parse_record(record, n_plus_1, field, locate)
            if exps in coefficients:
                raise HypersurfaceFormatError(
                    f"Duplicate exponent vector {list(exps)}", locate("exps")
                )
            coefficients[exps] = coeff
        try:
            X = MultiQuadric.from_terms(field, n_plus_1, coefficients)
        except CYException as e:
            raise HypersurfaceFormatError(e.message)
        return cls(X)

    def dumps(self) -> str:
        """Canonical text: sorted terms, one record per line."""
        X = self.X
        records: List[str] = []
        for exps, coeff in sorted(X.poly.terms.items()):
            record = {"exps": list(exps), "coeff": X.field.format(coeff)}
            records.append("    " + json.dumps(record, sort_keys=True))
        return (
            "{\n"
            f'  "n_plus_1": {X.n_plus_1},\n'
            f'  "field": {json.dumps(X.field.spec)},\n'
            '  "terms": [\n' + ",\n".join(records) + "\n  ]\n}\n"
        )


class _TermLocator:
    """Line of a key inside one term record, falling back to the record's ``{``"""

    def __init__(self, text: str, span: Optional[Tuple[int, int]]):
        self.text = text
        self.span = span

    def __call__(self, key: Optional[str] = None) -> Optional[int]:
        if self.span is None:
            return None
        start, end = self.span
        position = self.text.find(f'"{key}"', start, end) if key else -1
        return _line_at(self.text, position if position >= 0 else start)


def _parse_record(record: Any, n_plus_1: int, field: Field, locate: _TermLocator):
    if not isinstance(record, dict) or set(record) != {"exps", "coeff"}:
        raise HypersurfaceFormatError(
            "Each term needs exactly 'exps' and 'coeff'", locate()
        )
    exps = record["exps"]
    if (
        not isinstance(exps, list)
        or len(exps) != n_plus_1
        or any(isinstance(e, bool) or not isinstance(e, int) for e in exps)
    ):
        raise HypersurfaceFormatError(f"exps must be {n_plus_1} integers", locate("exps"))
    if any(not 0 <= e <= MAX_EXPONENT for e in exps):
        raise HypersurfaceFormatError(
            f"Exponents {exps} outside 0..{MAX_EXPONENT}", locate("exps")
        )
    text = record["coeff"]
    if not isinstance(text, str):
        raise HypersurfaceFormatError("coeff must be a string", locate("coeff"))
    if field.is_rational:
        if not re.fullmatch(r"\s*-?\d+(/\d+)?\s*", text) or re.fullmatch(r".*/0+\s*", text):
            raise HypersurfaceFormatError(
                f"Invalid rational coefficient {text!r}", locate("coeff")
            )
    else:
        if not re.fullmatch(r"\s*\d+\s*", text) or int(text) >= field.characteristic:
            raise HypersurfaceFormatError(
                f"Residue {text!r} outside [0, {field.characteristic})", locate("coeff")
            )
    return tuple(exps), field(text)


def _term_spans(text: str) -> List[Tuple[int, int]]:
    """Character span of every element of the ``terms`` array, in order."""
    match = _TERMS_RE.search(text)
    if match is None:
        return []
    spans: List[Tuple[int, int]] = []
    index = match.end()
    while True:
        index = _SEPARATOR_RE.match(text, index).end()
        if index >= len(text) or text[index] == "]":
            return spans
        try:
            _, end = _DECODER.raw_decode(text, index)
        except json.JSONDecodeError:
            return spans
        spans.append((index, end))
        index = end


def _line_at(text: str, position: int) -> int:
    return text.count("\n", 0, position) + 1


def _key_line(text: str, key: str) -> int:
    position = text.find(f'"{key}"')
    return _line_at(text, position) if position >= 0 else 1
