import os
import sys

import pytest
from click.testing import CliRunner
from hypothesis import settings

# Add project root to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from config import config  # noqa: E402
from src.web.app import create_app  # noqa: E402

settings.register_profile('default', max_examples=500, deadline=None)
settings.register_profile('quick', max_examples=50, deadline=None)
settings.load_profile(os.getenv('HYPOTHESIS_PROFILE', 'default'))

if hasattr(sys, 'set_int_max_str_digits'):
    sys.set_int_max_str_digits(0)


@pytest.fixture
def testing_config():
    return config['testing']


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def app(tmp_path):
    return create_app('testing', {'REPORT_FILE': str(tmp_path / 'report.json')})


@pytest.fixture
def client(app):
    return app.test_client()
