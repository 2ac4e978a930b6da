import pytest

from wkintersect.pengine import DTable


@pytest.fixture(scope="session")
def dtable():
    """One shared coefficient table per session; blocks accumulate."""
    return DTable()
