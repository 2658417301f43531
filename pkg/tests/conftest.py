import numpy as np
import pytest

from lorentz_partners.catalog import CATALOG, curve_catalog
from lorentz_partners.curve_model import reparametrize_arclength, sample_curve
from lorentz_partners.frenet import frenet_apparatus

DONORS = sorted(n for n, e in CATALOG.items() if e.expected_type is not None)
HELICES = sorted(n for n in DONORS if "helix" in CATALOG[n].tags)
PLANAR = sorted(n for n in DONORS if "planar" in CATALOG[n].tags)
SLANT = sorted(n for n in DONORS if "slant" in CATALOG[n].tags)


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=42, help="seed for randomized tests")


@pytest.fixture
def rng(request):
    return np.random.default_rng(request.config.getoption("--seed"))


_CACHE = {}


def donor(name, n=2000, **params):
    key = (name, n, tuple(sorted(params.items())))
    if key not in _CACHE:
        c = reparametrize_arclength(sample_curve(curve_catalog(name, params or None), n))
        _CACHE[key] = (c, frenet_apparatus(c))
    return _CACHE[key]


@pytest.fixture
def load():
    return donor
