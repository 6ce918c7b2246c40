# Copyright (C) 2026 The ArithDyn Development Team

import pytest
import arithdyn.util as util
import arithdyn.toric.fan_management as fm


@pytest.fixture(autouse=True)
def default_budget(monkeypatch):
    monkeypatch.delenv(util.DIGIT_BUDGET_ENV, raising=False)


@pytest.fixture
def p2():
    return fm.load_fixture('p2')


@pytest.fixture
def p1xp1():
    return fm.load_fixture('p1xp1')


@pytest.fixture
def hirzebruch2():
    return fm.load_fixture('hirzebruch2')


@pytest.fixture
def p2xp1():
    return fm.load_fixture('p2xp1')
