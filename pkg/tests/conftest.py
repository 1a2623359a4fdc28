# /tests/conftest.py

import pytest

from schemas.config import ToolkitSettings
from tools import ToolkitContext
from tests.helpers import clause_set


@pytest.fixture
def a2():
    return clause_set([1, 2], [1, -2], [-1, 2], [-1, -2])


@pytest.fixture
def smallest_mu():
    return clause_set([1], [-1])


@pytest.fixture
def settings():
    return ToolkitSettings(workers=1)


@pytest.fixture
def context(settings):
    return ToolkitContext.from_settings(settings)
