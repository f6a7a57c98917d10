import pytest

from cyinertia.errors import HypersurfaceFormatError
from cyinertia.libs.hypfile import HypersurfaceFile

VALID = """{
  "n_plus_1": 2,
  "field": "Fp:7",
  "terms": [
    {"exps": [2, 2], "coeff": "1"},
    {"exps": [1, 0], "coeff": "1"},
    {"exps": [0, 1], "coeff": "1"}
  ]
}
"""


def test_loads(X_7):
    assert HypersurfaceFile.loads(VALID).X == X_7


def test_dumps_is_canonical(X_7):
    text = HypersurfaceFile(X_7).dumps()
    assert text == (
        "{\n"
        '  "n_plus_1": 2,\n'
        '  "field": "Fp:7",\n'
        '  "terms": [\n'
        '    {"coeff": "1", "exps": [0, 1]},\n'
        '    {"coeff": "1", "exps": [1, 0]},\n'
        '    {"coeff": "1", "exps": [2, 2]}\n'
        "  ]\n"
        "}\n"
    )
    assert HypersurfaceFile.loads(text).X == X_7


def test_rational_coefficients(X_q):
    text = VALID.replace("Fp:7", "Q").replace('"coeff": "1"}', '"coeff": "-3/2"}', 1)
    X = HypersurfaceFile.loads(text).X
    assert X.field.is_rational
    assert X.field.format(X.poly.terms[(2, 2)]) == "-3/2"


def test_zero_coefficients_are_dropped():
    text = VALID.replace('[0, 1], "coeff": "1"', '[0, 1], "coeff": "0"')
    X = HypersurfaceFile.loads(text).X
    assert (0, 1) not in X.poly.terms


def _error(text):
    with pytest.raises(HypersurfaceFormatError) as e:
        HypersurfaceFile.loads(text)
    return e.value


@pytest.mark.parametrize(
    "old, new, line",
    [
        ('"exps": [1, 0]', '"exps": [3, 0]', 6),
        ('"exps": [1, 0]', '"exps": [1]', 6),
        ('"exps": [1, 0]', '"exps": [2, 2]', 6),
        ('"exps": [0, 1], "coeff": "1"', '"exps": [0, 1], "coeff": "7"', 7),
        ('"exps": [0, 1], "coeff": "1"', '"exps": [0, 1], "coeff": 1', 7),
        ('"exps": [0, 1], "coeff": "1"', '"exps": [0, 1], "coeff": "-1"', 7),
        ('"Fp:7"', '"Fp:9"', 3),
        ('"n_plus_1": 2', '"n_plus_1": 1', 2),
    ],
)
def test_errors_carry_line_numbers(old, new, line):
    error = _error(VALID.replace(old, new))
    assert error.line == line
    assert error.message.startswith(f"line {line}: ")
    assert error.code == "HYPERSURFACE_FORMAT"


def test_invalid_json():
    error = _error(VALID.replace('"field": "Fp:7",', '"field": "Fp:7"'))
    assert error.line == 4


def test_missing_terms():
    error = _error('{"n_plus_1": 2, "field": "Q", "terms": []}')
    assert error.line == 1


def test_term_without_exps_reports_its_own_line():
    text = VALID.replace('{"exps": [2, 2], "coeff": "1"}', '{"coeff": "1"}')
    error = _error(text)
    assert error.line == 5
    assert "exactly 'exps' and 'coeff'" in error.message


def test_term_without_exps_in_the_middle():
    text = VALID.replace('{"exps": [1, 0], "coeff": "1"}', '{"coeff": "1"}')
    assert _error(text).line == 6


MULTILINE = """{
  "n_plus_1": 2,
  "field": "Fp:7",
  "terms": [
    {"exps": [2, 2], "coeff": "1"},
    {
      "exps": [1, 0],
      "coeff": "8"
    },
    {"exps": [0, 1], "coeff": "1"}
  ]
}
"""


def test_coeff_error_points_at_the_coeff_line():
    assert _error(MULTILINE).line == 8


def test_exps_error_points_at_the_exps_line():
    text = MULTILINE.replace('"coeff": "8"', '"coeff": "1"').replace("[1, 0]", "[1, 5]")
    assert _error(text).line == 7


def test_multiline_record_loads(X_7):
    assert HypersurfaceFile.loads(MULTILINE.replace('"coeff": "8"', '"coeff": "1"')).X == X_7
