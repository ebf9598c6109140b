"""Small example modules shipped with the package: S/2, S/h and the Joker."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

NAMES = ("smod2", "smodh", "joker")


def path(name: str) -> Path:
    return Path(str(resources.files(__name__).joinpath(f"{name}.json")))


def load(name: str):
    from ..fmodule import load_module

    return load_module(path(name))


def smod2():
    return load("smod2")


def smodh():
    return load("smodh")


def joker():
    return load("joker")
