"""Bundled fixtures.  Set CO0CHERN_DATA to read them from another directory."""

import os
from pathlib import Path

ENV_VAR = "CO0CHERN_DATA"


def data_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    return Path(override) if override else Path(__file__).resolve().parent


def data_path(name: str) -> Path:
    return data_dir() / name
