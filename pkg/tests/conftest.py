import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from affineflags import AffineWeylGroup, build_cartan


@pytest.fixture(scope="session")
def a1():
    return AffineWeylGroup(build_cartan("A", 1))


@pytest.fixture(scope="session")
def a2():
    return AffineWeylGroup(build_cartan("A", 2))


@pytest.fixture(scope="session")
def c2():
    return AffineWeylGroup(build_cartan("C", 2))
