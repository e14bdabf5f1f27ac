import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from vifnc import belsley


@pytest.fixture(scope="session")
def belsley_data():
    return belsley()
