import sys
from pathlib import Path

import pytest

# Make the sibling bruteforce module importable regardless of rootdir.
sys.path.insert(0, str(Path(__file__).parent))

from qgrass.field import make_field


@pytest.fixture(scope="session")
def gf2():
    return make_field(2)


@pytest.fixture(scope="session")
def gf3():
    return make_field(3)


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def gf9():
    return make_field(3, 2)
