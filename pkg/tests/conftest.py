import json
import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> pathlib.Path:
    return FIXTURES / name


def load_text(name: str) -> str:
    return fixture_path(name).read_text()


@pytest.fixture
def fixtures_dir() -> pathlib.Path:
    return FIXTURES
