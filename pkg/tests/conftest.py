from __future__ import annotations

from pathlib import Path

import pytest

from bettisplit import parse_complex, parse_ideal

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / name


@pytest.fixture
def load_ideal():
    return lambda name: parse_ideal((FIXTURES / name).read_text())


@pytest.fixture
def load_complex():
    return lambda name: parse_complex((FIXTURES / name).read_text())
