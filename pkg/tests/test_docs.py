"""Docstring examples stay true."""

import doctest
import importlib

MODULES = ["mapscope.trees", "mapscope.perms", "mapscope.series"]


def test_doctests():
    'Run every docstring example in the core modules'
    for name in MODULES:
        result = doctest.testmod(importlib.import_module(name), verbose=False)
        assert result.failed == 0, name
        assert result.attempted > 0, name
