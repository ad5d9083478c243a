import pytest

from quasiord.cli import parse_poly

IRREDUCIBLE_OCTIC = "y^8 - 2*x1*x2*y^4 + x1^2*x2^2 - x1^3*x2^2"
STAGNATING_OCTIC = "y^8 - 2*x1*x2*y^4 + x1^2*x2^2 - x1^4*x2^2 - x1^5*x2^3"
BENT_OCTIC = "y^8 - 2*x1*x2*y^4 + x1^3*x2^2 - x1*y^5"


def poly(text, e=2):
    return parse_poly(text, e)


@pytest.fixture
def irr_octic():
    return poly(IRREDUCIBLE_OCTIC)


@pytest.fixture
def stag_octic():
    return poly(STAGNATING_OCTIC)


@pytest.fixture
def bent_octic_poly():
    return poly(BENT_OCTIC)
