import os

import pytest

from ringbench.scalars import Rationals
from ringbench.poly import PolyRing
from ringbench.groebner import IdealSpec

FIXDIR = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")


def fixture_path(name):
    return os.path.join(FIXDIR, name)


@pytest.fixture
def Q():
    return Rationals()


def make_ideal(field, varnames, gen_texts):
    ring = PolyRing(field, varnames)
    return IdealSpec(ring, [ring.parse(t) for t in gen_texts])
