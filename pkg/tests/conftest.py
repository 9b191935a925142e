import pytest

from trigor.fixtures import (
    arrow_algebra,
    collapse_two_points,
    doubled_arrow,
    doubled_dual,
    dual_numbers,
)

# Session-wide algebras and triangles come from the memoized builders, so
# enumeration and resolution caches accumulate across test files instead of
# being rebuilt per test.


@pytest.fixture(scope="session")
def A2():
    return arrow_algebra(2)


@pytest.fixture(scope="session")
def DN():
    return dual_numbers(2)


@pytest.fixture(scope="session")
def tA():
    return doubled_arrow(2)


@pytest.fixture(scope="session")
def tR():
    return doubled_dual(2)


@pytest.fixture(scope="session")
def tTheta():
    return collapse_two_points(2)
