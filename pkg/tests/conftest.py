import pytest

from mfdeg.catalog import CATALOG
from mfdeg.verify import GroupContext

_CACHE = {}


def get_ctx(family, p=None, **params):
    """Session-cached GroupContext so expensive tables are built once."""
    if p is None:
        p = CATALOG[family].default_p
    key = (family, p, tuple(sorted(params.items())))
    if key not in _CACHE:
        _CACHE[key] = GroupContext(family, p, params)
    return _CACHE[key]


@pytest.fixture(scope="session")
def ctx():
    return get_ctx
