import pytest

from cyinertia.algebra import MPoly
from cyinertia.errors import (
    AxisRangeError,
    GenerationExhaustedError,
    NotOnHypersurfaceError,
    PreconditionError,
    SamplingExhaustedError,
    StructuralError,
)
from cyinertia.geometry import MultiQuadric, Point, random_hypersurface, sample_on_x, trial_seed
from cyinertia.models import GenerationConfig, SamplerConfig


def test_decompose_axis(X_q, QQ_field):
    d = X_q.decompose_axis(1)
    assert d.F0 == MPoly.from_terms(QQ_field, 2, {(0, 2): 1}, (0, 2))
    assert d.F1 == MPoly.constant(QQ_field, 1, (0, 2))
    assert d.F2 == MPoly.from_terms(QQ_field, 2, {(0, 1): 1}, (0, 2))
    assert all(part.declared_degree == (0, 2) for part in d.parts)

    d2 = X_q.decompose_axis(2)
    assert d2.F0 == MPoly.from_terms(QQ_field, 2, {(2, 0): 1}, (2, 0))
    assert d2.F2 == MPoly.from_terms(QQ_field, 2, {(1, 0): 1}, (2, 0))


def test_decompose_axis_out_of_range(X_q):
    with pytest.raises(AxisRangeError):
        X_q.decompose_axis(0)
    with pytest.raises(AxisRangeError):
        X_q.decompose_axis(3)


def test_assemble_restores_polynomial(X_q):
    for axis in (1, 2):
        assert X_q.decompose_axis(axis).assemble() == X_q.poly


def test_discriminant(X_q, QQ_field):
    expected = MPoly.from_terms(QQ_field, 2, {(0, 0): 1, (0, 3): -4}, (0, 4))
    assert X_q.discriminant_axis(1) == expected


def test_genericity(X_q, X_square):
    assert X_q.genericity_check().passed
    report = X_square.genericity_check()
    assert not report.passed
    assert "axis 1: discriminant vanishes identically" in report.failures
    assert report.format().startswith("genericity: FAIL")


def test_genericity_vanishing_part(QQ_field):
    # no x1^2 term: F_{1,0} = 0
    X = MultiQuadric.from_terms(QQ_field, 2, {(1, 0): 1, (0, 2): 1, (0, 0): 1})
    report = X.genericity_check()
    assert not report.passed
    assert "axis 1: F_1,0 vanishes identically" in report.failures


def test_structural_checks(QQ_field):
    with pytest.raises(StructuralError):
        MultiQuadric.from_terms(QQ_field, 2, {})
    with pytest.raises(StructuralError):
        MultiQuadric.from_terms(QQ_field, 2, {(3, 0): 1})


def test_contains(X_7, F7):
    assert X_7.contains(Point.affine(F7, [4, 1]))
    assert X_7.contains(Point.affine(F7, [2, 1]))
    assert not X_7.contains(Point.affine(F7, [1, 1]))
    # x = infinity forces y = 0
    assert X_7.contains(Point.from_pairs(F7, [(0, 1), (1, 0)]))
    assert not X_7.contains(Point.from_pairs(F7, [(0, 1), (1, 1)]))


def test_singular_at(QQ_field):
    # x^2 - y^2 is a node at the origin
    X = MultiQuadric.from_terms(QQ_field, 2, {(2, 0): 1, (0, 2): -1})
    assert X.singular_at(Point.affine(QQ_field, [0, 0]))
    assert not X.singular_at(Point.affine(QQ_field, [1, 1]))
    with pytest.raises(NotOnHypersurfaceError):
        X.singular_at(Point.affine(QQ_field, [1, 0]))


def test_smooth_point(X_q, QQ_field):
    assert not X_q.singular_at(Point.affine(QQ_field, [0, 0]))


def test_sample_on_x(X_p):
    for t in range(20):
        for axis in (1, 2):
            point = sample_on_x(X_p, axis, trial_seed(3, t))
            assert X_p.contains(point)


def test_sample_on_x_is_deterministic(X_p):
    a = sample_on_x(X_p, 1, 42)
    b = sample_on_x(X_p, 1, 42)
    assert a == b


def test_sample_on_x_needs_fp(X_q):
    with pytest.raises(PreconditionError):
        sample_on_x(X_q, 1, 0)


def test_sample_on_x_exhausted(F7):
    # x^2 + 4: discriminant -16 = 5 is a non-residue mod 7 on every fiber
    X = MultiQuadric.from_terms(F7, 2, {(2, 0): 1, (0, 0): 4})
    with pytest.raises(SamplingExhaustedError):
        sample_on_x(X, 1, 0, SamplerConfig(max_attempts=5))


def test_trial_seed():
    assert trial_seed(1, 0) == trial_seed(1, 0)
    assert trial_seed(1, 0) != trial_seed(1, 1)
    assert trial_seed(1, 0) != trial_seed(2, 0)


def test_random_hypersurface(FP, QQ_field):
    X = random_hypersurface(3, FP, seed=5)
    assert X.n_plus_1 == 3
    assert X.genericity_check().passed
    assert random_hypersurface(3, FP, seed=5) == X

    Xq = random_hypersurface(2, QQ_field, seed=1)
    assert Xq.field.is_rational


def test_random_hypersurface_exhausted(FP):
    with pytest.raises(GenerationExhaustedError):
        random_hypersurface(2, FP, seed=0, config=GenerationConfig(max_attempts=0))
    with pytest.raises(StructuralError):
        random_hypersurface(1, FP, seed=0)
