import pytest

from tightclosure.fields import GF, QQ
from tightclosure.forcing import IdealData
from tightclosure.hypersurface import make_ring
from tightclosure.poly import parse_polynomial


@pytest.fixture(scope="session")
def fermat_cubic():
    return make_ring(parse_polynomial("x^3+y^3+z^3"))


@pytest.fixture(scope="session")
def example_ideal(fermat_cubic):
    gens = [parse_polynomial(t) for t in ("x^4", "x*y", "y^2")]
    return IdealData.create(fermat_cubic, gens)


def fermat_ideal(field, gens=("x^4", "x*y", "y^2")):
    ring = make_ring(parse_polynomial("x^3+y^3+z^3", field))
    return IdealData.create(ring, [parse_polynomial(t, field) for t in gens])


@pytest.fixture(params=[QQ, GF(7), GF(13)], ids=["QQ", "GF7", "GF13"])
def any_field(request):
    return request.param
