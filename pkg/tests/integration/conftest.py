import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from src.webapp import app


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def client():
    return TestClient(app)
