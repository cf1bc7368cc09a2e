import pytest

from resolvekit import apsp, build_ccc, build_cube_unit, build_lcg


@pytest.fixture(scope="session")
def cube():
    return build_cube_unit()


@pytest.fixture(scope="session")
def cube_dist(cube):
    return apsp(cube)


@pytest.fixture(scope="session")
def ccc2():
    return build_ccc(2)


@pytest.fixture(scope="session")
def ccc2_dist(ccc2):
    return apsp(ccc2)


@pytest.fixture(scope="session")
def lcg32():
    return build_lcg(3, 2)


@pytest.fixture(scope="session")
def lcg32_dist(lcg32):
    return apsp(lcg32)


@pytest.fixture(scope="session")
def lcg42():
    return build_lcg(4, 2)


@pytest.fixture(scope="session")
def lcg42_dist(lcg42):
    return apsp(lcg42)
