"""Pydantic report models shared by the library and the CLI."""

from .reports import (
    RefinementEntry,
    RefinementReport,
    StieltjesCheckEntry,
    StieltjesCheckReport,
    TableSource,
    ZeroCountReport,
)

__all__ = [
    "RefinementEntry",
    "RefinementReport",
    "StieltjesCheckEntry",
    "StieltjesCheckReport",
    "TableSource",
    "ZeroCountReport",
]
