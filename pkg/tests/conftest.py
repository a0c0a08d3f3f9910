import functools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bvhh.verify import FixtureContext

settings.register_profile(
    "bvhh", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large]
)
settings.load_profile("bvhh")

# small enough that random elements stay cheap
PROPERTY_FIXTURES = ["dual_numbers_q", "dual_numbers_f2", "truncated_cubic_f3", "cp2_q", "sphere3_q", "sphere3_sq_q"]


@functools.lru_cache(maxsize=None)
def context(name: str) -> FixtureContext:
    return FixtureContext(name)


def draw_element(data, complex_, degrees):
    """A random element of a random nonempty slice among ``degrees``."""
    live = [n for n in degrees if complex_.basis(n)]
    n = data.draw(st.sampled_from(live))
    size = len(complex_.basis(n))
    idx = data.draw(st.lists(st.integers(0, size - 1), min_size=1, max_size=4, unique=True))
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=len(idx), max_size=len(idx)))
    F = complex_.A.field
    return complex_.element(n, {i: F.norm(c) for i, c in zip(idx, coeffs)})


@pytest.fixture(params=PROPERTY_FIXTURES, scope="module")
def ctx(request):
    return context(request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
