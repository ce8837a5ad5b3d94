import pytest

from physlimits.constants import default_constants
from physlimits.limits import compute_limits, default_spec


@pytest.fixture(scope="session")
def const():
    return default_constants()


@pytest.fixture(scope="session")
def laptop(const):
    """Limits report for the reference 1 kg / 1 liter machine."""
    return compute_limits(default_spec(), const)
