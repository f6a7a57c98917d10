from .number_theory import NumberTheoryHelper

# hypfile depends on the geometry package and is imported directly:
# ``from cyinertia.libs.hypfile import HypersurfaceFile``.
__all__ = ["NumberTheoryHelper"]
