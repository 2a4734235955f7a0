"""Builtin groups, shipped as ordinary group files."""

from __future__ import annotations

from importlib import resources

from ..group import Group

EXPECTED_ORDERS = {
    "C1": 1, "C2": 2, "C3": 3, "C4": 4, "C5": 5, "C6": 6, "C12": 12, "V4": 4,
    "C3xC3": 9, "S3": 6, "D8": 8, "Q8": 8, "A4": 12, "D10": 10, "D12": 12,
    "C3xS3": 18, "F21": 21, "SL23": 24, "F20": 20, "S4": 24, "A5": 60,
    "S5": 120, "A6": 360, "S6": 720,
}


def names() -> list[str]:
    return list(EXPECTED_ORDERS)


def source_text(name: str) -> str:
    if name not in EXPECTED_ORDERS:
        raise KeyError(f"unknown builtin group {name!r}; choose from {', '.join(names())}")
    return resources.files(__package__).joinpath(f"{name}.grp").read_text(encoding="utf-8")


def load(name: str) -> Group:
    from ..groupfile import parse_group

    return parse_group(source_text(name), name=name)
