import json
import pytest

from l1_dg.runner.config_parser import parse_config


@pytest.fixture
def make_config():
    """Builds a validated run config from keyword arguments written like the JSON document."""
    def _make(**document):
        return parse_config(json.dumps(document))
    return _make
