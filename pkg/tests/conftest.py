import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest

from homhopf.linalg import Field


@pytest.fixture(params=["Q", "GF7"])
def field(request):
    return Field.rationals() if request.param == "Q" else Field.prime(7)


@pytest.fixture
def rationals():
    return Field.rationals()
