"""Pytest configuration and fixtures for zeta-discrete-moments tests."""

from decimal import Decimal

import pytest
from hypothesis import HealthCheck, settings

from zeta_discrete_moments.numerics.zeta import EvalConfig
from zeta_discrete_moments.precision import mp_context
from zeta_discrete_moments.zeros import ZeroTable, load_bundled_zeros

settings.register_profile(
    "default",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")

FIRST_ZEROS = (
    "14.134725141734693790457251983562470270784257115699",
    "21.022039638771554992628479593896902777334340524903",
    "25.010857580145688763213790992562821818659549672558",
    "30.424876125859513210311897530584091320181560023715",
    "32.935061587739189690662368964074903488812715603517",
)


@pytest.fixture
def cfg():
    """Fixture providing a 128-bit evaluation config."""
    return EvalConfig(precision_bits=128)


@pytest.fixture
def ctx():
    """Fixture providing a 128-bit mpmath context."""
    return mp_context(128)


@pytest.fixture
def accurate_zeros():
    """Fixture providing the first five ordinates to 48 decimal places."""
    return ZeroTable(
        ordinates=tuple(Decimal(z) for z in FIRST_ZEROS), input_digits=48
    )


@pytest.fixture(scope="session")
def bundled_zeros():
    """Fixture providing the full shipped zero table."""
    return load_bundled_zeros()


@pytest.fixture
def zeros_file(tmp_path):
    """Fixture providing a small zero table on disk."""
    path = tmp_path / "zeros.txt"
    path.write_text("# first zeros\n" + "\n".join(FIRST_ZEROS) + "\n")
    return path


# Configure pytest settings
def pytest_configure(config):
    """Configure pytest with custom settings."""
    config.addinivalue_line("markers", "unit: mark test as a unit test")
    config.addinivalue_line("markers", "integration: mark test as an integration test")
    config.addinivalue_line("markers", "slow: mark test as slow running")
