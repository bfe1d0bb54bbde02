import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from xmodlab.induce import run_table_full


@pytest.fixture(scope="session")
def table_results():
    """All seven induced modules with their reports, computed once."""
    return run_table_full()
