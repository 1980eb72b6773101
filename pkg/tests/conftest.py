import pytest

from landaukit import alpha_table, beta_from_alpha, gn_table


@pytest.fixture(scope="session")
def alpha12():
    return alpha_table(12)


@pytest.fixture(scope="session")
def alpha202():
    # big enough for every sweep in the suite: sign pattern to l = 199,
    # ratio bounds to k = 60, deviations at k = 80
    return alpha_table(202)


@pytest.fixture(scope="session")
def derived202(alpha202):
    return beta_from_alpha(alpha202)


@pytest.fixture(scope="session")
def gn60():
    return gn_table(60)
