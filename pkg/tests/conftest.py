import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "exact", deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("exact")


def pytest_collection_modifyitems(items):
    # acceptance reuses instance tallies from the property tests, so it runs last
    items.sort(key=lambda item: item.fspath.basename == "test_acceptance.py")
