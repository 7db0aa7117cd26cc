import pytest
from hypothesis import HealthCheck, settings

from toric_brasselet.newton import CompleteIntersectionData
from toric_brasselet.toric_surface import lattice_polynomial, semigroup_generators

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def quadric():
    return semigroup_generators(2, 1)


@pytest.fixture(scope="session")
def quadric_X(quadric):
    return quadric.variety()


@pytest.fixture(scope="session")
def cusp(quadric):
    """f = z2^2 - z1^3 and g = z1 - z3^2 on the quadric cone z1 z3 = z2^2."""
    f = lattice_polynomial({(0, 2, 0): 1, (3, 0, 0): -1}, quadric)
    g = lattice_polynomial({(1, 0, 0): 1, (0, 0, 2): -1}, quadric)
    return f, g, CompleteIntersectionData((g, f))
