import pytest
from hypothesis import settings as hypothesis_settings
from models.partition import Partition

hypothesis_settings.register_profile("default", max_examples=60, deadline=None)
hypothesis_settings.load_profile("default")


@pytest.fixture
def figure_partition() -> Partition:
    return Partition([4, 3, 3, 2])


@pytest.fixture
def worked_partition() -> Partition:
    return Partition([5, 5, 2, 2])
