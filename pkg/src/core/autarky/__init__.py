# /src/core/autarky/__init__.py

"""Autarkies, lean kernels and surplus."""

from .autarky import (
    Autarky,
    AutarkyFinder,
    LeanReduction,
    Surplus,
    is_autarky,
)

__all__ = ["Autarky", "AutarkyFinder", "LeanReduction", "Surplus", "is_autarky"]
