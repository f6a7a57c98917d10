import pytest

from cyinertia.algebra import Field
from cyinertia.geometry import MultiQuadric
from cyinertia.models import DEFAULT_PRIME

# x^2 y^2 + x + y
XY_TERMS = {(2, 2): 1, (1, 0): 1, (0, 1): 1}


@pytest.fixture
def QQ_field():
    return Field.rationals()


@pytest.fixture
def F7():
    return Field.prime(7)


@pytest.fixture
def FP():
    return Field.prime(DEFAULT_PRIME)


@pytest.fixture
def X_q(QQ_field):
    return MultiQuadric.from_terms(QQ_field, 2, XY_TERMS)


@pytest.fixture
def X_7(F7):
    return MultiQuadric.from_terms(F7, 2, XY_TERMS)


@pytest.fixture
def X_p(FP):
    return MultiQuadric.from_terms(FP, 2, XY_TERMS)


@pytest.fixture
def X_square(FP):
    """(xy + 1)^2: every discriminant vanishes identically."""
    return MultiQuadric.from_terms(FP, 2, {(2, 2): 1, (1, 1): 2, (0, 0): 1})


@pytest.fixture
def X_finite_rho(FP):
    """x^2 (y^2 + 1) + y + 2: F_{1,1} = 0, so rho_1^2 is scalar."""
    return MultiQuadric.from_terms(FP, 2, {(2, 2): 1, (2, 0): 1, (0, 1): 1, (0, 0): 2})
