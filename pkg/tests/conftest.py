from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import WEEK_START, full_week_responses  # noqa: E402


@pytest.fixture(scope="session")
def full_responses():
    return full_week_responses(seed=7)


@pytest.fixture(scope="session")
def full_week(full_responses):
    from datetime import datetime

    from weeklens.model import build_week_dataset

    return build_week_dataset(full_responses, WEEK_START, datetime(2024, 3, 12, 0, 0))
