from __future__ import absolute_import
from __future__ import unicode_literals

import os
import random
import shutil

import pytest

from cauchyid.ring import RATIONAL, RingContext


@pytest.fixture(scope="session")
def tmp_dir(request):

    tmp_dir = os.path.join(os.path.dirname(__file__),
                           'tmp')
    try:
        os.makedirs(tmp_dir)
    except OSError:
        pass

    request.addfinalizer(lambda: shutil.rmtree(tmp_dir, ignore_errors=True))
    return tmp_dir


@pytest.fixture
def rational():
    return RATIONAL


@pytest.fixture
def f101():
    return RingContext.prime(101)


@pytest.fixture
def f5():
    return RingContext.prime(5)


@pytest.fixture(params=['rational', 'prime:101'])
def context(request):
    """Each ring-generic test runs over the rationals and over F_101"""
    if request.param == 'rational':
        return RATIONAL
    return RingContext.prime(101)


@pytest.fixture
def rng():
    return random.Random(1234)
