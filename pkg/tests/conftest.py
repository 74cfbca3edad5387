"""
Shared test fixtures

The Java fixtures under data/examples/java pair original sources with the
output of three decompilers; snippets/ holds one-construct files.
"""

import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from dlens.frontend import parse, parse_file  # noqa: E402
from dlens.utils.config import DEFAULT_CONFIG, PROJECT_DIR, deep_merge  # noqa: E402

JAVA_DIR = PROJECT_DIR / "data/examples/java"
MANIFEST = JAVA_DIR / "manifest.csv"


def fixture_path(relative: str) -> Path:
    return JAVA_DIR / relative


def load_unit(relative: str):
    """Parse a fixture file, e.g. load_unit("snippets/DigitOrLetter.java")"""
    return parse_file(fixture_path(relative))


def wrap(body: str, class_name: str = "T") -> str:
    """Put method-level statements into a compilable class"""
    return f"class {class_name} {{\n  void m(int a, int b, boolean p, boolean q) {{\n{body}\n  }}\n}}\n"


def parse_body(body: str):
    return parse(wrap(body))


@pytest.fixture
def java_dir() -> Path:
    return JAVA_DIR


@pytest.fixture
def manifest_path() -> Path:
    return MANIFEST


@pytest.fixture
def quiet_config():
    """Default configuration with progress bars and workers kept small"""
    return deep_merge(DEFAULT_CONFIG, {"general": {"num_workers": 2, "progress": False}})


@pytest.fixture
def isolated_env(monkeypatch, tmp_path):
    """Drop DLENS_* variables and run from an empty directory (no stray .env)"""
    for name in list(os.environ):
        if name.startswith("DLENS_"):
            monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    return tmp_path
