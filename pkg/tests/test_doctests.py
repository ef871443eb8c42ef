import doctest
import importlib

import pytest

MODULES = ["abelian", "arith", "classify", "oracle", "pratt", "units"]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    mod = importlib.import_module(f"gku.{name}")
    result = doctest.testmod(mod)
    assert result.failed == 0
