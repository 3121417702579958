"""Общие настройки тестов."""

import pytest
from hypothesis import HealthCheck, settings

from fzeta.utils import metrics

# Точная арифметика на больших степенях не укладывается в стандартный deadline
settings.register_profile(
    "fzeta",
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fzeta")


@pytest.fixture(autouse=True)
def _no_metrics_file():
    metrics.init_metrics(None)
    yield
    metrics.init_metrics(None)
