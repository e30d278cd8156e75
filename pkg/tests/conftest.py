#!/usr/bin/env python3
"""
Shared fixtures of the heiscat test suite
"""
# 3rd party libraries
import pytest
# Local libraries
import heiscat.hecke
import heiscat.normalform.engine


@pytest.fixture
def f_u():
    return heiscat.hecke.CyclotomicData.parse("u")


@pytest.fixture
def f_u2():
    return heiscat.hecke.CyclotomicData.parse("u^2")


@pytest.fixture
def f_shifted():
    return heiscat.hecke.CyclotomicData.parse("u+2")


@pytest.fixture
def params():
    """
    Factory of engine parameters with the default caps
    """
    def build(k, **overrides):
        return heiscat.normalform.engine.CategoryParams(k, **overrides)
    return build
