import io
import json

import pytest

from cyinertia import __version__
from cyinertia.algebra import Field
from cyinertia import cli
from cyinertia.cli import run
from cyinertia.geometry import MultiQuadric
from cyinertia.libs.hypfile import HypersurfaceFile


def _write(tmp_path, X, name="x.json"):
    path = tmp_path / name
    path.write_text(HypersurfaceFile(X).dumps())
    return str(path)


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


@pytest.fixture
def x_file(tmp_path, X_p):
    return _write(tmp_path, X_p)


def test_gen_is_deterministic(tmp_path):
    out = str(tmp_path / "g.json")
    code, report = _run("gen", "--n", "2", "--field", "Fp:2147483647", "--seed", "3", "--out", out)
    assert code == 0
    assert f"cyinertia {__version__}" in report
    assert "seed: 3" in report
    X = HypersurfaceFile.loads(open(out).read()).X
    assert X.n_plus_1 == 3

    _, first = _run("gen", "--n", "1", "--seed", "8")
    _, second = _run("gen", "--n", "1", "--seed", "8")
    assert first == second
    assert '"field": "Fp:2147483647"' in first


def test_decompose(x_file):
    code, report = _run("decompose", "--in", x_file, "--axis", "1")
    assert code == 0
    assert "F0 = x2^2" in report
    assert "F2 = x2" in report


def test_genericity(tmp_path, x_file, X_square):
    assert _run("genericity", "--in", x_file)[0] == 0
    code, report = _run("genericity", "--in", _write(tmp_path, X_square, "sq.json"))
    assert code == 1
    assert "genericity: FAIL" in report


def test_apply(tmp_path, X_7):
    path = _write(tmp_path, X_7)
    code, report = _run("apply", "--in", path, "--word", "T1", "--point", "4,1")
    assert code == 0
    assert "image: (2, 1)" in report

    code, report = _run("apply", "--in", path, "--word", "S1", "--point", "0,0")
    assert code == 0
    assert "indeterminate on axis 1" in report


def test_on_x(tmp_path, X_7):
    path = _write(tmp_path, X_7)
    code, report = _run("on-x", "--in", path, "--point", "[0:1],0")
    assert code == 0
    assert "on X: yes" in report
    assert "singular: no" in report
    assert "on X: no" in _run("on-x", "--in", path, "--point", "1,1")[1]


def test_sample(x_file):
    code, report = _run("sample", "--in", x_file, "--count", "3", "--seed", "2")
    assert code == 0
    assert report == _run("sample", "--in", x_file, "--count", "3", "--seed", "2")[1]


def test_certify_inertia(x_file, tmp_path):
    out = str(tmp_path / "records.json")
    code, report = _run("certify-inertia", "--in", x_file, "--trials", "10", "--seed", "1", "--out", out)
    assert code == 0
    assert report.count("status: VERIFIED") == 2
    records = json.load(open(out))
    assert records["version"] == __version__
    assert records["seed"] == 1
    assert [r["axis"] for r in records["records"]] == [1, 2]


def test_certify_inertia_mutated(x_file):
    code, report = _run("certify-inertia", "--in", x_file, "--axis", "1", "--trials", "10", "--mutate")
    assert code == 1
    assert "status: REFUTED" in report
    assert "witness: trial 0" in report


def test_certify_inconclusive(tmp_path, F7):
    X = MultiQuadric.from_terms(F7, 2, {(2, 0): 1, (0, 0): 4})
    code, report = _run("certify-inertia", "--in", _write(tmp_path, X), "--axis", "1", "--trials", "3")
    assert code == 2
    assert "status: INCONCLUSIVE" in report


def test_certify_commands(x_file):
    assert _run("certify-agree", "--in", x_file, "--trials", "10")[0] == 0
    assert _run("certify-off-x", "--in", x_file, "--trials", "10")[0] == 0
    assert _run("certify-free", "--in", x_file, "--word", "R1 R2^-1")[0] == 0
    assert _run("certify-restrict", "--in", x_file, "--word", "R1 T2", "--trials", "10")[0] == 0
    assert _run("uc-check", "--in", x_file, "--word", "I1 I2 I2 I1", "--trials", "10")[0] == 0


def test_order_check(tmp_path, x_file, X_finite_rho):
    code, report = _run("order-check", "--in", x_file, "--kmax", "6", "--fiber-samples", "5")
    assert code == 0
    assert "fiber periods" in report

    code, report = _run("order-check", "--in", _write(tmp_path, X_finite_rho, "f.json"), "--axis", "1")
    assert code == 1
    assert "offending k: 2" in report


def test_reports_are_reproducible(x_file):
    argv = ("certify-free", "--in", x_file, "--word", "R1 R2", "--seed", "5")
    assert _run(*argv) == _run(*argv)


@pytest.mark.parametrize(
    "argv",
    [
        ("certify-inertia", "--in", "/nonexistent/x.json"),
        ("apply", "--in", "{x}", "--word", "Q1", "--point", "1,1"),
        ("apply", "--in", "{x}", "--word", "R1", "--point", "1"),
        ("apply", "--in", "{x}", "--word", "R1", "--point", "[0:0],1"),
        ("certify-free", "--in", "{x}", "--word", "R1 R1^-1"),
        ("decompose", "--in", "{x}", "--axis", "3"),
        ("gen", "--n", "0"),
        ("gen", "--n", "1", "--field", "Fp:8"),
        ("no-such-command",),
    ],
)
def test_input_errors(x_file, argv):
    argv = [a.replace("{x}", x_file) for a in argv]
    assert _run(*argv)[0] == 3


def test_bad_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n_plus_1": 2,\n "field": "Fp:7",\n "terms": [{"exps": [3, 0], "coeff": "1"}]}')
    assert _run("genericity", "--in", str(path))[0] == 3


def test_internal_fault_is_not_an_input_error(monkeypatch, x_file):
    def broken(args, report):
        raise RuntimeError("boom")

    monkeypatch.setitem(cli.COMMANDS, "decompose", broken)
    code, _ = _run("decompose", "--in", x_file)
    assert code == cli.EXIT_INTERNAL_ERROR == 4
