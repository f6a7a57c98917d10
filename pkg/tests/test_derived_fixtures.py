from fractions import Fraction

import pytest

from derived_oracle import derived_values

from cyinertia.algebra import MPoly, sqrt_mod_p
from cyinertia.geometry import (
    IndeterminatePoint,
    MultiQuadric,
    Point,
    compose_same_axis,
    make_rho,
    make_rho_inv,
    make_sigma,
    make_tau,
)

Y2, ONE, Y, NEG_ONE = {(0, 2): 1}, {(0, 0): 1}, {(0, 1): 1}, {(0, 0): -1}

# Frozen from derived_oracle.py
FROZEN = {
    "f7_product": {(2,): 1},
    "xy_at_1_1": 3,
    "xy_at_4_1_mod_7": 0,
    "squares_mod_7": [0, 1, 2, 4],
    "sqrt_2_mod_7": 3,
    "xy_axis_1": (Y2, ONE, Y),
    "xy_axis_2": ({(2, 0): 1}, ONE, {(1, 0): 1}),
    "node_axis_1": (Y2, {}, NEG_ONE),
    "xy_discriminant_1": {(0, 0): 1, (0, 3): -4},
    "square_discriminant_1": {},
    "node_discriminant_1": {(0, 2): 4},
    "fiber_roots_y1_mod_7": [2, 4],
    "tau_matrix": ({(0, 2): -1}, NEG_ONE, {}, Y2),
    "tau_at_1_1": -2,
    "sigma_matrix": ({}, Y, Y2, {}),
    "sigma_at_4_1_mod_7": 2,
    "sigma_at_1_1": 1,
    "sigma_at_origin": (0, 0),
    "rho_matrix": ({}, Y, {(0, 2): -1}, NEG_ONE),
    "rho_at_4_1_mod_7": 4,
    "rho_square": ({(0, 3): -1}, {(0, 1): -1}, Y2, {(0, 0): 1, (0, 3): -1}),
    "rho_times_inverse": ({(0, 3): 1}, {}, {}, {(0, 3): 1}),
    "xy_partials_at_origin": (1, 1),
}


def as_dict(p: MPoly):
    if p.field.is_rational:
        return {m: p.field.to_fraction(c) for m, c in p.terms.items()}
    return {m: p.field.residue(c) for m, c in p.terms.items()}


def test_oracle_reproduces_frozen_values():
    assert derived_values() == FROZEN


def test_products_and_evaluations(X_q, X_7, F7):
    x = MPoly.variable(F7, 0, (2,))
    assert as_dict(x.scalar_mul(3) * x.scalar_mul(5)) == FROZEN["f7_product"]
    assert X_q.poly.evaluate([1, 1]) == FROZEN["xy_at_1_1"]
    assert F7.residue(X_7.poly.evaluate([4, 1])) == FROZEN["xy_at_4_1_mod_7"]
    assert not X_q.contains(Point.affine(X_q.field, [1, 1]))
    assert X_7.contains(Point.affine(F7, [4, 1]))


def test_square_roots_mod_7(F7):
    assert F7.residue(sqrt_mod_p(2, F7)) == FROZEN["sqrt_2_mod_7"]
    for a in range(7):
        assert (sqrt_mod_p(a, F7) is not None) == (a in FROZEN["squares_mod_7"])


@pytest.mark.parametrize(
    "terms, axis, key",
    [
        ({(2, 2): 1, (1, 0): 1, (0, 1): 1}, 1, "xy_axis_1"),
        ({(2, 2): 1, (1, 0): 1, (0, 1): 1}, 2, "xy_axis_2"),
        ({(2, 2): 1, (0, 0): -1}, 1, "node_axis_1"),
    ],
)
def test_decompositions(QQ_field, terms, axis, key):
    X = MultiQuadric.from_terms(QQ_field, 2, terms)
    assert tuple(as_dict(p) for p in X.decompose_axis(axis).parts) == FROZEN[key]


@pytest.mark.parametrize(
    "terms, key",
    [
        ({(2, 2): 1, (1, 0): 1, (0, 1): 1}, "xy_discriminant_1"),
        ({(2, 2): 1, (1, 1): 2, (0, 0): 1}, "square_discriminant_1"),
        ({(2, 2): 1, (0, 0): -1}, "node_discriminant_1"),
    ],
)
def test_discriminants(QQ_field, terms, key):
    X = MultiQuadric.from_terms(QQ_field, 2, terms)
    assert as_dict(X.discriminant_axis(1)) == FROZEN[key]


def test_fiber_over_y_equals_one(X_7, F7):
    roots = [x for x in range(7) if X_7.contains(Point.affine(F7, [x, 1]))]
    assert roots == FROZEN["fiber_roots_y1_mod_7"]


def test_fiber_map_matrices(X_q):
    makers = ((make_tau, "tau_matrix"), (make_sigma, "sigma_matrix"), (make_rho, "rho_matrix"))
    for maker, key in makers:
        assert tuple(as_dict(e) for e in maker(X_q, 1).entries) == FROZEN[key]
    square = compose_same_axis(make_rho(X_q, 1), make_rho(X_q, 1))
    assert tuple(as_dict(e) for e in square.entries) == FROZEN["rho_square"]
    product = compose_same_axis(make_rho(X_q, 1), make_rho_inv(X_q, 1))
    # normalization strips the common y^3
    assert tuple(as_dict(e) for e in product.entries) == ({(0, 0): 1}, {}, {}, {(0, 0): 1})
    assert FROZEN["rho_times_inverse"][0] == FROZEN["rho_times_inverse"][3]


def test_fiber_map_values(X_q, X_7, F7):
    Q = X_q.field
    one_one = Point.affine(Q, [1, 1])
    assert make_tau(X_q, 1)(one_one) == Point.affine(Q, [FROZEN["tau_at_1_1"], 1])
    assert make_sigma(X_q, 1)(one_one) == Point.affine(Q, [FROZEN["sigma_at_1_1"], 1])
    sigma = make_sigma(X_7, 1)(Point.affine(F7, [4, 1]))
    assert sigma.projectively_equal(Point.affine(F7, [FROZEN["sigma_at_4_1_mod_7"], 1]))
    rho = make_rho(X_7, 1)(Point.affine(F7, [4, 1]))
    assert rho.projectively_equal(Point.affine(F7, [FROZEN["rho_at_4_1_mod_7"], 1]))


def test_sigma_at_origin_is_indeterminate(X_q):
    assert FROZEN["sigma_at_origin"] == (0, 0)
    assert isinstance(make_sigma(X_q, 1)(Point.affine(X_q.field, [0, 0])), IndeterminatePoint)


def test_origin_is_smooth(X_q):
    assert FROZEN["xy_partials_at_origin"] == (Fraction(1), Fraction(1))
    assert not X_q.singular_at(Point.affine(X_q.field, [0, 0]))
