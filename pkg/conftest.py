"""
Options pytest communes : --long-running active les tests marqués slow
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


def pytest_addoption(parser):
    parser.addoption("--long-running", action="store_true", default=False, help="exécute les tests longs")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long-running"):
        return
    skip = pytest.mark.skip(reason="demande --long-running")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
