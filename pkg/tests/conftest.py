# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import pytest

from balsys.contrib.catalog import make_system
from balsys.contrib.pointset import PointSet
from balsys.core.field import fq_init


@pytest.fixture
def F2():
    return fq_init(2)


@pytest.fixture
def F3():
    return fq_init(3)


@pytest.fixture
def F5():
    return fq_init(5)


@pytest.fixture
def F4():
    return fq_init(2, 2)


@pytest.fixture
def three_ap_F3():
    return make_system("ap", 3, k=3)


@pytest.fixture
def full_space():
    def make(ctx, n):
        return PointSet.full(ctx, n)

    return make
