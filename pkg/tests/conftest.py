import json
from pathlib import Path

import pytest

from app.exactnum.ratfunc import CANONICAL_DEGREE
from app.tautring.expression import parse_expr
from app.tautring.monomial import Flavor

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def c():
    """2g - 2"""
    return CANONICAL_DEGREE


@pytest.fixture
def rel():
    def build(text, n):
        return parse_expr(text, n, Flavor.RELATIVE)
    return build


@pytest.fixture
def pt():
    def build(text, n):
        return parse_expr(text, n, Flavor.POINTED)
    return build


@pytest.fixture
def fixture_data():
    def load(name):
        with open(FIXTURES / name) as handle:
            return json.load(handle)
    return load
